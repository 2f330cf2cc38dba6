//! Error type shared by the whole crate.
//!
//! Every fallible public operation returns `Result<_, Error>`. Variants are
//! deliberately coarse: they distinguish caller mistakes (dimension
//! mismatches, unknown vertices), mathematical rejections (non-admissible
//! ideals, two-sidedness failures), and resource refusals (budgets, field
//! too small for a certificate). Internal invariant violations panic instead.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Matrix shapes do not line up for the requested operation.
    DimensionMismatch { expected: usize, got: usize, context: &'static str },
    /// A square matrix was required.
    NonSquare { rows: usize, cols: usize },
    /// Two objects built over different algebras (or fields) were mixed.
    AlgebraMismatch,
    /// Vertex index out of range for the quiver.
    UnknownVertex { vertex: usize, num_vertices: usize },
    /// The operation needs a nonzero module.
    ZeroModule,
    /// The field cannot support the requested certificate; carries the
    /// minimum size that would.
    FieldTooSmall { needed: u64 },
    /// A configured work budget was exceeded; carries the offending count.
    BudgetExceeded { budget: u64, needed: u64, context: &'static str },
    /// The relation ideal is not admissible: paths of the nilpotency bound's
    /// length do not all vanish.
    NonAdmissible { bound: usize },
    /// A relation mixes paths with different sources or targets.
    InconsistentRelation { relation: String },
    /// The span given as an ideal is not stable under two-sided multiplication.
    IdealNotTwoSided,
    /// An ideal used as a relation ideal must lie inside rad^2.
    IdealNotInRadical,
    /// The given vectors do not span a subrepresentation.
    NotSubRep,
    /// A vector lies outside the module it was claimed to belong to.
    VectorOutsideModule,
    /// A structure scan was asked to run on an algebra outside its class.
    ClassMembershipViolated { class: &'static str, reason: String },
    /// The construction requires a basic algebra presentation.
    NonBasicAlgebra,
    /// Criteria that must agree pairwise disagreed; carries the two keys.
    UnanimityViolation { first: &'static str, second: &'static str },
    /// Decomposition could not certify a summand split or its absence.
    UndeterminedSummand,
    /// Exhaustive subspace enumeration only runs over F_2 and F_3.
    EnumerationFieldTooLarge { size: u64 },
    /// Quotient construction needs an ideal spanned by basis words.
    NonMonomialIdeal,
    /// The algebra family is defined only from the given index upward.
    FamilyIndexOutOfRange { index: usize, minimum: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got, context } => {
                write!(f, "dimension mismatch in {context}: expected {expected}, got {got}")
            }
            Error::NonSquare { rows, cols } => {
                write!(f, "square matrix required, got {rows}x{cols}")
            }
            Error::AlgebraMismatch => write!(f, "objects belong to different algebras or fields"),
            Error::UnknownVertex { vertex, num_vertices } => {
                write!(f, "vertex {vertex} out of range (quiver has {num_vertices})")
            }
            Error::ZeroModule => write!(f, "operation undefined for the zero module"),
            Error::FieldTooSmall { needed } => {
                write!(f, "field too small for certification; need at least {needed} elements")
            }
            Error::BudgetExceeded { budget, needed, context } => {
                write!(f, "budget exceeded in {context}: budget {budget}, needed {needed}")
            }
            Error::NonAdmissible { bound } => {
                write!(f, "relation ideal not admissible within nilpotency bound {bound}")
            }
            Error::InconsistentRelation { relation } => {
                write!(f, "relation mixes paths with different endpoints: {relation}")
            }
            Error::IdealNotTwoSided => write!(f, "span is not a two-sided ideal"),
            Error::IdealNotInRadical => write!(f, "ideal is not contained in rad^2"),
            Error::NotSubRep => write!(f, "vectors do not span a subrepresentation"),
            Error::VectorOutsideModule => write!(f, "vector outside the module"),
            Error::ClassMembershipViolated { class, reason } => {
                write!(f, "algebra is not in class `{class}`: {reason}")
            }
            Error::NonBasicAlgebra => write!(f, "construction requires a basic algebra"),
            Error::UnanimityViolation { first, second } => {
                write!(f, "criteria `{first}` and `{second}` disagree; internal inconsistency")
            }
            Error::UndeterminedSummand => {
                write!(f, "decomposition undetermined: no split found and no certificate of indecomposability")
            }
            Error::EnumerationFieldTooLarge { size } => {
                write!(f, "exhaustive enumeration requires F_2 or F_3, field has {size} elements")
            }
            Error::NonMonomialIdeal => {
                write!(f, "quotient construction requires an ideal spanned by basis words")
            }
            Error::FamilyIndexOutOfRange { index, minimum } => {
                write!(f, "family index {index} out of range; defined for {minimum} and up")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
