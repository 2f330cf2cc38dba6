//! Incremental row spaces.
//!
//! [`RowSpace`] keeps a basis in reduced echelon form at all times, so
//! membership is a single reduction, equality of subspaces is equality of
//! bases, and `canonical_key` is a stable dedup key (the reduced basis of a
//! subspace is unique).

use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone)]
pub struct RowSpace {
    field: Field,
    ambient: usize,
    /// Reduced echelon basis; `pivots` strictly increasing, one per row.
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(field: &Field, ambient: usize) -> RowSpace {
        RowSpace { field: field.clone(), ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_matrix(m: &Matrix) -> RowSpace {
        let mut s = RowSpace::new(m.field(), m.cols());
        for i in 0..m.rows() {
            s.insert(m.row_vec(i));
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Residue of `v` after eliminating all pivot coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let f = &self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&out[p]) {
                continue;
            }
            let factor = out[p].clone();
            for j in 0..self.ambient {
                out[j] = f.sub(&out[j], &f.mul(&factor, &row[j]));
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let f = &self.field;
        self.reduce(v).iter().all(|s| f.is_zero(s))
    }

    /// Insert a vector; returns true when the space grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let f = self.field.clone();
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|s| !f.is_zero(s)) else {
            return false;
        };
        let inv = f.inv(&r[p]).expect("leading entry nonzero");
        for s in r.iter_mut() {
            *s = f.mul(s, &inv);
        }
        // Back-eliminate the new pivot column from existing rows.
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let factor = row[p].clone();
            for j in 0..self.ambient {
                row[j] = f.sub(&row[j], &f.mul(&factor, &r[j]));
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn insert_all(&mut self, m: &Matrix) {
        for i in 0..m.rows() {
            self.insert(m.row_vec(i));
        }
    }

    /// The unique reduced basis, as matrix rows (possibly 0 x ambient).
    pub fn basis_matrix(&self) -> Matrix {
        if self.rows.is_empty() {
            Matrix::zero(&self.field, 0, self.ambient)
        } else {
            Matrix::from_rows(&self.field, self.rows.clone())
        }
    }

    pub fn canonical_key(&self) -> String {
        self.basis_matrix().render()
    }

    pub fn is_subspace_of(&self, other: &RowSpace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn eq_space(&self, other: &RowSpace) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }

    pub fn intersection(&self, other: &RowSpace) -> RowSpace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let a = self.basis_matrix();
        let b = other.basis_matrix();
        let stacked = a.vstack(&b.neg());
        // (u | v) * [A; -B] = 0 means u*A = v*B lies in both spaces.
        let combos = stacked.kernel_rows();
        let mut out = RowSpace::new(&self.field, self.ambient);
        for i in 0..combos.rows() {
            let u = &combos.row(i)[..a.rows()];
            out.insert(a.apply_row(u));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_membership() {
        let f = Field::prime(2).unwrap();
        let mut s = RowSpace::new(&f, 3);
        assert!(s.insert(alloc::vec![f.one(), f.one(), f.zero()]));
        assert!(s.insert(alloc::vec![f.zero(), f.one(), f.one()]));
        assert!(!s.insert(alloc::vec![f.one(), f.zero(), f.one()]));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[f.one(), f.zero(), f.one()]));
        assert!(!s.contains(&[f.one(), f.zero(), f.zero()]));
    }

    #[test]
    fn canonical_key_is_basis_independent() {
        let q = Field::rationals();
        let m1 = Matrix::from_i64_rows(&q, &[&[1, 2, 0], &[0, 0, 3]]);
        let m2 = Matrix::from_i64_rows(&q, &[&[2, 4, 3], &[1, 2, -3]]);
        let s1 = RowSpace::from_matrix(&m1);
        let s2 = RowSpace::from_matrix(&m2);
        assert!(s1.eq_space(&s2));
        assert_eq!(s1.canonical_key(), s2.canonical_key());
    }

    #[test]
    fn intersection_of_planes() {
        let q = Field::rationals();
        let s1 = RowSpace::from_matrix(&Matrix::from_i64_rows(&q, &[&[1, 0, 0], &[0, 1, 0]]));
        let s2 = RowSpace::from_matrix(&Matrix::from_i64_rows(&q, &[&[0, 1, 0], &[0, 0, 1]]));
        let i = s1.intersection(&s2);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[q.zero(), q.one(), q.zero()]));
    }

    #[test]
    fn reduce_residue() {
        let q = Field::rationals();
        let s = RowSpace::from_matrix(&Matrix::from_i64_rows(&q, &[&[1, 1, 0]]));
        let r = s.reduce(&[q.from_i64(2), q.from_i64(3), q.from_i64(4)]);
        assert_eq!(r, alloc::vec![q.zero(), q.from_i64(1), q.from_i64(4)]);
    }
}
