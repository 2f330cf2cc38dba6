//! Dense exact matrices over a [`Field`].
//!
//! Convention used across the crate: vectors are rows, and a matrix `A`
//! represents the linear map `v -> v * A`. Composition of maps is therefore
//! left-to-right matrix multiplication (`apply A, then B` is `A * B`), which
//! matches the application-order storage of algebra words. Kernels, images
//! and solving are all phrased for that convention:
//!
//! - [`Matrix::kernel_rows`]: basis of `{v : v * A = 0}`.
//! - [`Matrix::column_kernel`]: basis of `{x : A * x^T = 0}`, as rows.
//! - [`Matrix::solve_left`]: `X` with `X * A = B`.
//!
//! `0 x n` and `n x 0` matrices are legal and show up constantly (zero
//! modules, empty hom spaces); every routine must handle them.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    /// Row-major, length rows * cols.
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Matrix {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            for s in r {
                assert!(field.owns(&s), "scalar from another field");
                data.push(s);
            }
        }
        Matrix { field: field.clone(), rows: nrows, cols: ncols, data }
    }

    pub fn from_row(field: &Field, row: Vec<Scalar>) -> Matrix {
        Matrix::from_rows(field, vec![row])
    }

    /// Integer literal rows; test and corpus convenience.
    pub fn from_i64_rows(field: &Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter().map(|r| r.iter().map(|&n| field.from_i64(n)).collect()).collect(),
        )
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        assert!(self.field.owns(&s), "scalar from another field");
        self.data[i * self.cols + j] = s;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        assert!(i < self.rows, "row out of range");
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| self.field.is_zero(s))
    }

    fn same_field(&self, other: &Matrix) {
        assert_eq!(self.field, other.field, "matrices over different fields");
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| self.field.neg(a)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| self.field.mul(a, s)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let f = &self.field;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, f.add(&cur, &f.mul(a, b)));
                }
            }
        }
        out
    }

    /// `v * self` for a row vector `v`.
    pub fn apply_row(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "vector length mismatch in apply_row");
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for j in 0..self.cols {
                let b = self.get(i, j);
                if f.is_zero(b) {
                    continue;
                }
                out[j] = f.add(&out[j], &f.mul(a, b));
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Rows of `self` above rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Columns of `self` left of columns of `other`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut data = Vec::with_capacity((self.cols + other.cols) * self.rows);
        for i in 0..self.rows {
            data.extend(self.row(i).iter().cloned());
            data.extend(other.row(i).iter().cloned());
        }
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols + other.cols, data }
    }

    pub fn vstack_all(field: &Field, cols: usize, parts: &[Matrix]) -> Matrix {
        let mut out = Matrix::zero(field, 0, cols);
        for p in parts {
            out = out.vstack(p);
        }
        out
    }

    pub fn block_diag(field: &Field, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zero(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zero(&self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_rows(&self.field, rows.iter().map(|&i| self.row_vec(i)).collect())
    }

    /// Reduced row echelon form and the pivot column indices, in order.
    /// Fully deterministic: pivot is the first row with a nonzero entry.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !f.is_zero(m.get(r, col)));
            let Some(r) = found else { continue };
            if r != pivot_row {
                for j in 0..m.cols {
                    let a = m.get(pivot_row, j).clone();
                    let b = m.get(r, j).clone();
                    m.set(pivot_row, j, b);
                    m.set(r, j, a);
                }
            }
            let inv = f.inv(m.get(pivot_row, col)).expect("pivot nonzero");
            for j in 0..m.cols {
                let v = f.mul(m.get(pivot_row, j), &inv);
                m.set(pivot_row, j, v);
            }
            for r2 in 0..m.rows {
                if r2 == pivot_row || f.is_zero(m.get(r2, col)) {
                    continue;
                }
                let factor = m.get(r2, col).clone();
                for j in 0..m.cols {
                    let v = f.sub(m.get(r2, j), &f.mul(&factor, m.get(pivot_row, j)));
                    m.set(r2, j, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self * x^T = 0}`, returned as the rows of a matrix
    /// with `cols()` columns. Canonical: free columns in ascending order,
    /// each basis vector has 1 at its free column.
    pub fn column_kernel(&self) -> Matrix {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !pivot_set[c]).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut x = vec![f.zero(); self.cols];
            x[fc] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = f.neg(r.get(i, fc));
            }
            rows.push(x);
        }
        if rows.is_empty() {
            Matrix::zero(f, 0, self.cols)
        } else {
            Matrix::from_rows(f, rows)
        }
    }

    /// Basis of `{v : v * self = 0}` as rows with `rows()` columns.
    pub fn kernel_rows(&self) -> Matrix {
        self.transpose().column_kernel()
    }

    /// `X` with `X * self = rhs`, rows of `rhs` expressed through rows of
    /// `self`; `None` when some row is outside the row space. Free
    /// coefficients are set to zero, so the answer is deterministic.
    pub fn solve_left(&self, rhs: &Matrix) -> Option<Matrix> {
        self.same_field(rhs);
        assert_eq!(self.cols, rhs.cols, "solve_left column mismatch");
        let f = &self.field;
        let at = self.transpose();
        let bt = rhs.transpose();
        let aug = at.hstack(&bt);
        let (r, pivots) = aug.rref();
        // Any pivot landing in the augmented block means inconsistency.
        if pivots.iter().any(|&p| p >= at.cols) {
            return None;
        }
        let mut x = Matrix::zero(f, rhs.rows, self.rows);
        for (i, &p) in pivots.iter().enumerate() {
            // Row i of rref reads: var p = sum of augmented entries.
            for k in 0..rhs.rows {
                x.set(k, p, r.get(i, at.cols + k).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let id = Matrix::identity(&self.field, self.rows);
        self.solve_left(&id).ok_or(Error::DimensionMismatch {
            expected: self.rows,
            got: self.rank(),
            context: "inverse of singular matrix",
        })
    }

    pub fn det(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for col in 0..n {
            let found = (col..n).find(|&r| !f.is_zero(m.get(r, col)));
            let Some(r) = found else { return Ok(f.zero()) };
            if r != col {
                det = f.neg(&det);
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    let b = m.get(r, j).clone();
                    m.set(col, j, b);
                    m.set(r, j, a);
                }
            }
            let pivot = m.get(col, col).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot).expect("pivot nonzero");
            for r2 in col + 1..n {
                if f.is_zero(m.get(r2, col)) {
                    continue;
                }
                let factor = f.mul(m.get(r2, col), &inv);
                for j in col..n {
                    let v = f.sub(m.get(r2, j), &f.mul(&factor, m.get(col, j)));
                    m.set(r2, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn trace(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let f = &self.field;
        let mut t = f.zero();
        for i in 0..self.rows {
            t = f.add(&t, self.get(i, i));
        }
        Ok(t)
    }

    /// Stable text form used for dedup keys and snapshots.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            if i > 0 {
                out.push(';');
            }
            for j in 0..self.cols {
                if j > 0 {
                    out.push(',');
                }
                out.push_str(&self.field.render(self.get(i, j)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn f7() -> Field {
        Field::prime(7).unwrap()
    }

    #[test]
    fn rref_f2_frozen() {
        let f = f2();
        let m = Matrix::from_i64_rows(&f, &[&[1, 1], &[1, 1]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::from_i64_rows(&f, &[&[1, 1], &[0, 0]]));
        assert_eq!(pivots, vec![0]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn column_kernel_frozen() {
        let f = f2();
        let m = Matrix::from_i64_rows(&f, &[&[1, 1]]);
        let k = m.column_kernel();
        assert_eq!(k, Matrix::from_i64_rows(&f, &[&[1, 1]]));
    }

    #[test]
    fn kernel_rows_is_left_kernel() {
        let q = Field::rationals();
        // v * A = 0 for A = [[1],[1]] forces v = t*(1,-1).
        let a = Matrix::from_i64_rows(&q, &[&[1], &[1]]);
        let k = a.kernel_rows();
        assert_eq!(k.rows(), 1);
        let prod = k.mul(&a);
        assert!(prod.is_zero());
    }

    #[test]
    fn solve_left_round_trip() {
        let f = f7();
        let a = Matrix::from_i64_rows(&f, &[&[1, 2, 3], &[0, 1, 4]]);
        let x = Matrix::from_i64_rows(&f, &[&[2, 5], &[3, 1]]);
        let b = x.mul(&a);
        let got = a.solve_left(&b).unwrap();
        assert_eq!(got.mul(&a), b);
    }

    #[test]
    fn solve_left_detects_inconsistency() {
        let q = Field::rationals();
        let a = Matrix::from_i64_rows(&q, &[&[1, 0]]);
        let b = Matrix::from_i64_rows(&q, &[&[0, 1]]);
        assert!(a.solve_left(&b).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let q = Field::rationals();
        let a = Matrix::from_i64_rows(&q, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(&q, 2));
        assert_eq!(inv.mul(&a), Matrix::identity(&q, 2));
        let f = f7();
        let m = Matrix::from_i64_rows(&f, &[&[3, 1], &[5, 2]]);
        let minv = m.inverse().unwrap();
        assert_eq!(m.mul(&minv), Matrix::identity(&f, 2));
        let sing = Matrix::from_i64_rows(&q, &[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_err());
    }

    #[test]
    fn det_values() {
        let q = Field::rationals();
        let a = Matrix::from_i64_rows(&q, &[&[2, 1], &[1, 1]]);
        assert_eq!(a.det().unwrap(), q.from_i64(1));
        let b = Matrix::from_i64_rows(&q, &[&[0, 1], &[1, 0]]);
        assert_eq!(b.det().unwrap(), q.from_i64(-1));
        let s = Matrix::from_i64_rows(&q, &[&[1, 2], &[2, 4]]);
        assert!(q.is_zero(&s.det().unwrap()));
    }

    #[test]
    fn empty_shapes_legal() {
        let q = Field::rationals();
        let z = Matrix::zero(&q, 0, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.column_kernel().rows(), 3);
        let z2 = Matrix::zero(&q, 3, 0);
        assert_eq!(z2.kernel_rows().rows(), 3);
        let prod = z.transpose().mul(&z2.transpose());
        assert_eq!((prod.rows(), prod.cols()), (3, 3));
        assert!(prod.is_zero());
        // Solving against an empty generator set succeeds only for zero rhs.
        let empty = Matrix::zero(&q, 0, 2);
        assert!(empty.solve_left(&Matrix::zero(&q, 1, 2)).is_some());
        let b = Matrix::from_i64_rows(&q, &[&[1, 0]]);
        assert!(empty.solve_left(&b).is_none());
    }

    #[test]
    fn apply_row_matches_mul() {
        let f = f7();
        let a = Matrix::from_i64_rows(&f, &[&[1, 2], &[3, 4], &[5, 6]]);
        let v = vec![f.from_i64(1), f.from_i64(0), f.from_i64(2)];
        let direct = a.apply_row(&v);
        let via_mul = Matrix::from_row(&f, v).mul(&a);
        assert_eq!(direct, via_mul.row_vec(0));
    }

    proptest! {
        #[test]
        fn rref_idempotent(entries in proptest::collection::vec(0i64..7, 12)) {
            let f = f7();
            let rows: Vec<Vec<Scalar>> = entries
                .chunks(4)
                .map(|c| c.iter().map(|&n| f.from_i64(n)).collect())
                .collect();
            let m = Matrix::from_rows(&f, rows);
            let (r1, p1) = m.rref();
            let (r2, p2) = r1.rref();
            prop_assert_eq!(r1, r2);
            prop_assert_eq!(p1, p2);
        }

        #[test]
        fn rank_nullity(entries in proptest::collection::vec(0i64..7, 12)) {
            let f = f7();
            let rows: Vec<Vec<Scalar>> = entries
                .chunks(4)
                .map(|c| c.iter().map(|&n| f.from_i64(n)).collect())
                .collect();
            let m = Matrix::from_rows(&f, rows);
            prop_assert_eq!(m.rank() + m.column_kernel().rows(), m.cols());
            prop_assert_eq!(m.rank() + m.kernel_rows().rows(), m.rows());
        }

        #[test]
        fn solve_left_consistent_on_products(
            a_entries in proptest::collection::vec(0i64..7, 6),
            x_entries in proptest::collection::vec(0i64..7, 4),
        ) {
            let f = f7();
            let a = Matrix::from_rows(&f,
                a_entries.chunks(3).map(|c| c.iter().map(|&n| f.from_i64(n)).collect()).collect());
            let x = Matrix::from_rows(&f,
                x_entries.chunks(2).map(|c| c.iter().map(|&n| f.from_i64(n)).collect()).collect());
            let b = x.mul(&a);
            let got = a.solve_left(&b).expect("product rows lie in the row space");
            prop_assert_eq!(got.mul(&a), b);
        }
    }
}
