//! Exact computational workbench for finite-dimensional bound quiver algebras.
//!
//! Everything here is exact: scalars are arbitrary-precision rationals or
//! elements of a prime field, equality of modules-up-to-isomorphism is
//! certified (never probabilistic without a certificate), and every
//! classification verdict carries enough structure to be re-checked.
//!
//! The crate is organized bottom-up:
//!
//! - [`field`] / [`matrix`] / [`space`]: scalars, dense exact matrices,
//!   row-space bookkeeping.
//! - [`quiver`] / [`algebra`]: presentations by quiver and admissible
//!   relations, the path-algebra quotient with its word basis, socles,
//!   annihilators, opposite algebras.
//! - [`rep`]: finite-dimensional left modules as vertex-graded
//!   representations, hom-spaces, sub/quotient constructions.
//! - [`endo`]: endomorphism algebras, radicals, Fitting decomposition,
//!   certified isomorphism testing.
//! - [`resolution`]: projective covers, syzygies, injective hulls, Ext^1,
//!   projective dimension.
//! - [`dual`]: the A-dual `Hom(M, A)`, the evaluation map phi, torsionless
//!   and reflexive tests.
//! - [`approx`]: minimal left add(A)-approximations with minimality
//!   certificates and the cokernel operator built from them.
//! - [`classify`]: the self-injectivity battery, the torsionless census,
//!   submodule lattices, structure scans.
//! - [`corpus`]: built-in example algebras used by the test suite and CLI.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod approx;
pub mod classify;
pub mod corpus;
pub mod dual;
pub mod endo;
pub mod error;
pub mod field;
pub mod matrix;
pub mod quiver;
pub mod rep;
pub mod resolution;
pub mod space;

pub use algebra::Algebra;
pub use classify::{
    contrapositive_scan, enumerate_indecomposables, is_kasch, is_qf2, is_qf3,
    self_injectivity_report, simple_dual_report, submodule_lattice, torsionless_census,
    CensusConfig, CensusResult, ScanClass, SelfInjectivityReport, SimpleDualReport,
};
pub use corpus::corpus;
pub use endo::{decompose, is_brick, is_indecomposable, is_iso, is_iso_by_summands, SplitOrder};
pub use error::Error;
pub use field::{Field, Scalar};
pub use matrix::Matrix;
pub use quiver::Quiver;
pub use rep::{hom_basis, Rep, RepMap};
