//! Quiver representations: finite-dimensional left modules given by one
//! matrix per arrow.
//!
//! Vectors are rows. The component at vertex `v` is `k^{dims[v]}`, an arrow
//! `a: i -> j` acts by a `dims[i] x dims[j]` matrix on the right, and a path
//! in application order acts by the product of its letters' matrices in that
//! order. Full module vectors are the concatenation of the vertex components
//! in vertex order.
//!
//! Projectives and the regular module are spanned by basis words of the
//! algebra, graded by target, with each vertex component ordered by global
//! basis index. Several duality arguments depend on that exact ordering.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::space::RowSpace;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    /// arrows[a]: dims[source(a)] x dims[target(a)].
    arrows: Vec<Matrix>,
}

/// Arc identity first, structural equality as the fallback.
pub fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Rep {
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, arrows: Vec<Matrix>) -> Result<Rep> {
        let q = algebra.quiver();
        assert_eq!(dims.len(), q.num_vertices(), "one dimension per vertex");
        assert_eq!(arrows.len(), q.num_arrows(), "one matrix per arrow");
        for (a, m) in arrows.iter().enumerate() {
            let (s, t) = (q.arrow(a).source, q.arrow(a).target);
            if m.rows() != dims[s] || m.cols() != dims[t] {
                return Err(Error::DimensionMismatch {
                    expected: dims[s],
                    got: m.rows(),
                    context: "arrow matrix shape",
                });
            }
            if m.field() != algebra.field() {
                return Err(Error::AlgebraMismatch);
            }
        }
        let rep = Rep { algebra, dims, arrows };
        rep.check_relations()?;
        Ok(rep)
    }

    fn check_relations(&self) -> Result<()> {
        let f = self.field().clone();
        for r in self.algebra.relations() {
            let src = self.algebra.quiver().arrow(r.terms[0].1[0]).source;
            let tgt = {
                let p = &r.terms[0].1;
                self.algebra.quiver().arrow(p[p.len() - 1]).target
            };
            let mut acc = Matrix::zero(&f, self.dims[src], self.dims[tgt]);
            for (c, path) in &r.terms {
                let m = self.path_action(src, path);
                acc = acc.add(&m.scale(&f.from_i64(*c)));
            }
            if !acc.is_zero() {
                return Err(Error::InconsistentRelation {
                    relation: alloc::format!("relation fails on a {:?}-dim rep", self.dims),
                });
            }
        }
        Ok(())
    }

    /// Action of a path with the given letters (application order) starting
    /// at `source`; the empty path acts as the identity there.
    pub fn path_action(&self, source: usize, letters: &[usize]) -> Matrix {
        let f = self.field();
        if letters.is_empty() {
            return Matrix::identity(f, self.dims[source]);
        }
        let mut m = self.arrows[letters[0]].clone();
        for &a in &letters[1..] {
            m = m.mul(&self.arrows[a]);
        }
        m
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_matrix(&self, a: usize) -> &Matrix {
        &self.arrows[a]
    }

    /// Starting offset of each vertex component inside a full vector.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            out.push(acc);
            acc += d;
        }
        out
    }

    pub fn split_vector(&self, v: &[Scalar]) -> Result<Vec<Vec<Scalar>>> {
        if v.len() != self.total_dim() {
            return Err(Error::VectorOutsideModule);
        }
        let off = self.offsets();
        Ok((0..self.dims.len()).map(|i| v[off[i]..off[i] + self.dims[i]].to_vec()).collect())
    }

    pub fn unit_vector(&self, vertex: usize, local: usize) -> Vec<Scalar> {
        let f = self.field();
        let mut v = vec![f.zero(); self.total_dim()];
        v[self.offsets()[vertex] + local] = f.one();
        v
    }

    /// True when the algebra element (coefficients over the basis) acts as
    /// zero on the whole module.
    pub fn annihilated_by(&self, element: &[Scalar]) -> bool {
        let f = self.field().clone();
        let a = &self.algebra;
        assert_eq!(element.len(), a.dim(), "element over the algebra basis");
        let nv = self.dims.len();
        for s in 0..nv {
            for t in 0..nv {
                let mut acc = Matrix::zero(&f, self.dims[s], self.dims[t]);
                let mut seen = false;
                for i in 0..a.dim() {
                    if f.is_zero(&element[i]) {
                        continue;
                    }
                    let w = a.word(i);
                    if w.source != s || w.target != t {
                        continue;
                    }
                    acc = acc.add(&self.path_action(s, &w.letters).scale(&element[i]));
                    seen = true;
                }
                if seen && !acc.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn zero_rep(algebra: Arc<Algebra>) -> Rep {
        let f = algebra.field().clone();
        let nv = algebra.quiver().num_vertices();
        let na = algebra.quiver().num_arrows();
        let dims = vec![0; nv];
        let arrows = (0..na).map(|_| Matrix::zero(&f, 0, 0)).collect();
        Rep { algebra, dims, arrows }
    }

    pub fn simple(algebra: Arc<Algebra>, vertex: usize) -> Result<Rep> {
        let q = algebra.quiver();
        if vertex >= q.num_vertices() {
            return Err(Error::UnknownVertex { vertex, num_vertices: q.num_vertices() });
        }
        let f = algebra.field().clone();
        let mut dims = vec![0; q.num_vertices()];
        dims[vertex] = 1;
        let arrows = (0..q.num_arrows())
            .map(|a| Matrix::zero(&f, dims[q.arrow(a).source], dims[q.arrow(a).target]))
            .collect();
        Rep::new(algebra, dims, arrows)
    }

    /// Global basis indices spanning P(vertex) = A e_vertex, one list per
    /// vertex component, each ascending.
    pub fn projective_words(algebra: &Algebra, vertex: usize) -> Vec<Vec<usize>> {
        let nv = algebra.quiver().num_vertices();
        (0..nv)
            .map(|t| {
                algebra
                    .words_with_source(vertex)
                    .into_iter()
                    .filter(|&w| algebra.word(w).target == t)
                    .collect()
            })
            .collect()
    }

    /// Global basis indices spanning the regular module, graded by target.
    pub fn regular_words(algebra: &Algebra) -> Vec<Vec<usize>> {
        let nv = algebra.quiver().num_vertices();
        (0..nv).map(|t| algebra.words_with_target(t)).collect()
    }

    fn from_word_components(algebra: Arc<Algebra>, comps: Vec<Vec<usize>>) -> Result<Rep> {
        let f = algebra.field().clone();
        let q = algebra.quiver().clone();
        let dims: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        let mut arrows = Vec::with_capacity(q.num_arrows());
        for a in 0..q.num_arrows() {
            let (s, t) = (q.arrow(a).source, q.arrow(a).target);
            let aw = algebra.arrow_basis_index(a);
            let mut m = Matrix::zero(&f, dims[s], dims[t]);
            for (row, &w) in comps[s].iter().enumerate() {
                for (idx, c) in algebra.mul_basis(aw, w) {
                    let col = comps[t]
                        .iter()
                        .position(|&u| u == *idx)
                        .expect("left multiple stays inside the word span");
                    m.set(row, col, c.clone());
                }
            }
            arrows.push(m);
        }
        Rep::new(algebra, dims, arrows)
    }

    pub fn projective(algebra: Arc<Algebra>, vertex: usize) -> Result<Rep> {
        let q = algebra.quiver();
        if vertex >= q.num_vertices() {
            return Err(Error::UnknownVertex { vertex, num_vertices: q.num_vertices() });
        }
        let comps = Rep::projective_words(&algebra, vertex);
        Rep::from_word_components(algebra, comps)
    }

    pub fn regular(algebra: Arc<Algebra>) -> Rep {
        let comps = Rep::regular_words(&algebra);
        Rep::from_word_components(algebra, comps).expect("regular module is always valid")
    }

    pub fn direct_sum(parts: &[&Rep]) -> Result<DirectSum> {
        assert!(!parts.is_empty(), "direct sum needs at least one part");
        let algebra = parts[0].algebra.clone();
        for p in parts {
            if !same_algebra(&p.algebra, &algebra) {
                return Err(Error::AlgebraMismatch);
            }
        }
        let f = algebra.field().clone();
        let q = algebra.quiver().clone();
        let nv = q.num_vertices();
        let dims: Vec<usize> =
            (0..nv).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let arrows: Vec<Matrix> = (0..q.num_arrows())
            .map(|a| {
                let blocks: Vec<Matrix> =
                    parts.iter().map(|p| p.arrows[a].clone()).collect();
                Matrix::block_diag(&f, &blocks)
            })
            .collect();
        let sum = Rep::new(algebra, dims, arrows)?;
        let mut injections = Vec::with_capacity(parts.len());
        let mut projections = Vec::with_capacity(parts.len());
        for (k, p) in parts.iter().enumerate() {
            let mut inj = Vec::with_capacity(nv);
            let mut prj = Vec::with_capacity(nv);
            for v in 0..nv {
                let before: usize = parts[..k].iter().map(|r| r.dims[v]).sum();
                let mut mi = Matrix::zero(&f, p.dims[v], sum.dims[v]);
                let mut mp = Matrix::zero(&f, sum.dims[v], p.dims[v]);
                for i in 0..p.dims[v] {
                    mi.set(i, before + i, f.one());
                    mp.set(before + i, i, f.one());
                }
                inj.push(mi);
                prj.push(mp);
            }
            injections.push(RepMap::new((*p).clone(), sum.clone(), inj)?);
            projections.push(RepMap::new(sum.clone(), (*p).clone(), prj)?);
        }
        Ok(DirectSum { rep: sum, injections, projections })
    }

    /// Subrepresentation on given per-vertex row spaces, which must already
    /// be arrow-stable; returns the subrep and its inclusion.
    fn sub_from_spaces(&self, spaces: &[RowSpace]) -> (Rep, RepMap) {
        let q = self.algebra.quiver().clone();
        let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
        let bases: Vec<Matrix> = spaces.iter().map(|s| s.basis_matrix()).collect();
        let arrows: Vec<Matrix> = (0..q.num_arrows())
            .map(|a| {
                let (s, t) = (q.arrow(a).source, q.arrow(a).target);
                let mapped = bases[s].mul(&self.arrows[a]);
                bases[t]
                    .solve_left(&mapped)
                    .expect("subspace family must be arrow-stable")
            })
            .collect();
        let sub = Rep::new(self.algebra.clone(), dims, arrows)
            .expect("restriction of a valid rep is valid");
        let incl = RepMap::new(sub.clone(), self.clone(), bases)
            .expect("inclusion of a stable family intertwines");
        (sub, incl)
    }

    /// Submodule generated by full vectors: closed under vertex projections
    /// and arrow actions.
    pub fn sub_rep(&self, vectors: &[Vec<Scalar>]) -> Result<(Rep, RepMap)> {
        let f = self.field().clone();
        let mut spaces: Vec<RowSpace> =
            self.dims.iter().map(|&d| RowSpace::new(&f, d)).collect();
        for v in vectors {
            for (vertex, comp) in self.split_vector(v)?.into_iter().enumerate() {
                spaces[vertex].insert(comp);
            }
        }
        self.close_under_arrows(&mut spaces);
        Ok(self.sub_from_spaces(&spaces))
    }

    fn close_under_arrows(&self, spaces: &mut [RowSpace]) {
        let q = self.algebra.quiver().clone();
        loop {
            let before: usize = spaces.iter().map(|s| s.dim()).sum();
            for a in 0..q.num_arrows() {
                let (s, t) = (q.arrow(a).source, q.arrow(a).target);
                let mapped = spaces[s].basis_matrix().mul(&self.arrows[a]);
                spaces[t].insert_all(&mapped);
            }
            if spaces.iter().map(|s| s.dim()).sum::<usize>() == before {
                return;
            }
        }
    }

    /// Quotient by the image of an inclusion into this rep; coordinates on
    /// the quotient are the free (non-pivot) ambient coordinates.
    pub fn quotient_by(&self, inclusion: &RepMap) -> Result<(Rep, RepMap)> {
        if inclusion.target() != self {
            return Err(Error::AlgebraMismatch);
        }
        let f = self.field().clone();
        let q = self.algebra.quiver().clone();
        let nv = self.dims.len();
        let mut spaces = Vec::with_capacity(nv);
        let mut frees: Vec<Vec<usize>> = Vec::with_capacity(nv);
        for v in 0..nv {
            let space = RowSpace::from_matrix(inclusion.matrix(v));
            let pivot_cols: Vec<usize> = space.basis_matrix().rref().1;
            let free: Vec<usize> =
                (0..self.dims[v]).filter(|c| !pivot_cols.contains(c)).collect();
            spaces.push(space);
            frees.push(free);
        }
        let dims: Vec<usize> = frees.iter().map(|fr| fr.len()).collect();
        let residue = |v: usize, row: &[Scalar]| -> Vec<Scalar> {
            let r = spaces[v].reduce(row);
            frees[v].iter().map(|&c| r[c].clone()).collect()
        };
        let mut proj_mats = Vec::with_capacity(nv);
        for v in 0..nv {
            let mut m = Matrix::zero(&f, self.dims[v], dims[v]);
            for i in 0..self.dims[v] {
                let mut unit = vec![f.zero(); self.dims[v]];
                unit[i] = f.one();
                for (j, s) in residue(v, &unit).into_iter().enumerate() {
                    m.set(i, j, s);
                }
            }
            proj_mats.push(m);
        }
        let arrows: Vec<Matrix> = (0..q.num_arrows())
            .map(|a| {
                let (s, t) = (q.arrow(a).source, q.arrow(a).target);
                let mut m = Matrix::zero(&f, dims[s], dims[t]);
                for (row, &c) in frees[s].iter().enumerate() {
                    let mut unit = vec![f.zero(); self.dims[s]];
                    unit[c] = f.one();
                    let mapped = self.arrows[a].apply_row(&unit);
                    for (col, sc) in residue(t, &mapped).into_iter().enumerate() {
                        m.set(row, col, sc);
                    }
                }
                m
            })
            .collect();
        let quot = Rep::new(self.algebra.clone(), dims, arrows)?;
        let proj = RepMap::new(self.clone(), quot.clone(), proj_mats)?;
        Ok((quot, proj))
    }

    /// rad M = J M = sum of the arrow images.
    pub fn radical_rep(&self) -> (Rep, RepMap) {
        let f = self.field().clone();
        let q = self.algebra.quiver().clone();
        let mut spaces: Vec<RowSpace> =
            self.dims.iter().map(|&d| RowSpace::new(&f, d)).collect();
        for a in 0..q.num_arrows() {
            spaces[q.arrow(a).target].insert_all(&self.arrows[a]);
        }
        self.close_under_arrows(&mut spaces);
        self.sub_from_spaces(&spaces)
    }

    /// soc M = {m : J m = 0}: at each vertex the joint kernel of the arrows
    /// leaving it.
    pub fn socle_rep(&self) -> (Rep, RepMap) {
        let f = self.field().clone();
        let q = self.algebra.quiver().clone();
        let nv = self.dims.len();
        let mut spaces = Vec::with_capacity(nv);
        for v in 0..nv {
            let out: Vec<usize> =
                (0..q.num_arrows()).filter(|&a| q.arrow(a).source == v).collect();
            if out.is_empty() {
                let mut s = RowSpace::new(&f, self.dims[v]);
                s.insert_all(&Matrix::identity(&f, self.dims[v]));
                spaces.push(s);
                continue;
            }
            let mut stacked = Matrix::zero(&f, self.dims[v], 0);
            for &a in &out {
                stacked = stacked.hstack(&self.arrows[a]);
            }
            spaces.push(RowSpace::from_matrix(&stacked.kernel_rows()));
        }
        self.sub_from_spaces(&spaces)
    }

    pub fn top_rep(&self) -> (Rep, RepMap) {
        let (_, incl) = self.radical_rep();
        self.quotient_by(&incl).expect("radical is a submodule")
    }
}

pub struct DirectSum {
    pub rep: Rep,
    pub injections: Vec<RepMap>,
    pub projections: Vec<RepMap>,
}

/// Module map: one matrix per vertex, rows over the source component.
/// Intertwining: S_a * F_{target(a)} = F_{source(a)} * T_a for every arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMap {
    source: Rep,
    target: Rep,
    mats: Vec<Matrix>,
}

impl RepMap {
    pub fn new(source: Rep, target: Rep, mats: Vec<Matrix>) -> Result<RepMap> {
        if !same_algebra(&source.algebra, &target.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let nv = source.dims.len();
        assert_eq!(mats.len(), nv, "one matrix per vertex");
        for v in 0..nv {
            if mats[v].rows() != source.dims[v] || mats[v].cols() != target.dims[v] {
                return Err(Error::DimensionMismatch {
                    expected: source.dims[v],
                    got: mats[v].rows(),
                    context: "rep map component shape",
                });
            }
        }
        let q = source.algebra.quiver();
        for a in 0..q.num_arrows() {
            let (i, j) = (q.arrow(a).source, q.arrow(a).target);
            let lhs = source.arrows[a].mul(&mats[j]);
            let rhs = mats[i].mul(&target.arrows[a]);
            if lhs != rhs {
                return Err(Error::NotSubRep);
            }
        }
        Ok(RepMap { source, target, mats })
    }

    fn new_unchecked(source: Rep, target: Rep, mats: Vec<Matrix>) -> RepMap {
        RepMap { source, target, mats }
    }

    pub fn zero(source: Rep, target: Rep) -> RepMap {
        let f = source.field().clone();
        let mats = (0..source.dims.len())
            .map(|v| Matrix::zero(&f, source.dims[v], target.dims[v]))
            .collect();
        RepMap::new_unchecked(source, target, mats)
    }

    pub fn identity(rep: &Rep) -> RepMap {
        let f = rep.field().clone();
        let mats = rep.dims.iter().map(|&d| Matrix::identity(&f, d)).collect();
        RepMap::new_unchecked(rep.clone(), rep.clone(), mats)
    }

    pub fn source(&self) -> &Rep {
        &self.source
    }

    pub fn target(&self) -> &Rep {
        &self.target
    }

    pub fn matrix(&self, v: usize) -> &Matrix {
        &self.mats[v]
    }

    pub fn then(&self, next: &RepMap) -> RepMap {
        assert_eq!(
            self.target, next.source,
            "composition needs matching middle module"
        );
        let mats = (0..self.mats.len()).map(|v| self.mats[v].mul(&next.mats[v])).collect();
        RepMap::new_unchecked(self.source.clone(), next.target.clone(), mats)
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        let mats =
            (0..self.mats.len()).map(|v| self.mats[v].add(&other.mats[v])).collect();
        RepMap::new_unchecked(self.source.clone(), self.target.clone(), mats)
    }

    pub fn scale(&self, s: &Scalar) -> RepMap {
        let mats = (0..self.mats.len()).map(|v| self.mats[v].scale(s)).collect();
        RepMap::new_unchecked(self.source.clone(), self.target.clone(), mats)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let comps = self.source.split_vector(v)?;
        let mut out = Vec::with_capacity(self.target.total_dim());
        for (vertex, comp) in comps.iter().enumerate() {
            out.extend(self.mats[vertex].apply_row(comp));
        }
        Ok(out)
    }

    /// Hom coordinates: vertex blocks in order, each row-major.
    pub fn flatten(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        for m in &self.mats {
            for i in 0..m.rows() {
                out.extend(m.row_vec(i));
            }
        }
        out
    }

    pub fn from_flat(source: &Rep, target: &Rep, data: &[Scalar]) -> Result<RepMap> {
        let f = source.field().clone();
        let mut mats = Vec::with_capacity(source.dims.len());
        let mut pos = 0;
        for v in 0..source.dims.len() {
            let (r, c) = (source.dims[v], target.dims[v]);
            let mut m = Matrix::zero(&f, r, c);
            for i in 0..r {
                for j in 0..c {
                    m.set(i, j, data[pos].clone());
                    pos += 1;
                }
            }
            mats.push(m);
        }
        assert_eq!(pos, data.len(), "flat data length mismatch");
        RepMap::new(source.clone(), target.clone(), mats)
    }

    pub fn rank(&self) -> usize {
        self.mats.iter().map(|m| m.rank()).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.total_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.total_dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn kernel(&self) -> (Rep, RepMap) {
        let spaces: Vec<RowSpace> =
            self.mats.iter().map(|m| RowSpace::from_matrix(&m.kernel_rows())).collect();
        self.source.sub_from_spaces(&spaces)
    }

    pub fn image(&self) -> (Rep, RepMap) {
        let spaces: Vec<RowSpace> =
            self.mats.iter().map(RowSpace::from_matrix).collect();
        self.target.sub_from_spaces(&spaces)
    }

    pub fn cokernel(&self) -> (Rep, RepMap) {
        let (_, incl) = self.image();
        self.target.quotient_by(&incl).expect("image is a submodule")
    }
}

/// Canonical basis of Hom(m, n): the column kernel of the intertwining
/// system over the flat hom coordinates.
pub fn hom_basis(m: &Rep, n: &Rep) -> Result<Vec<RepMap>> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let f = m.field().clone();
    let nv = m.dims().len();
    let block: Vec<usize> = (0..nv).map(|v| m.dims()[v] * n.dims()[v]).collect();
    let offset: Vec<usize> = {
        let mut out = Vec::with_capacity(nv);
        let mut acc = 0;
        for &b in &block {
            out.push(acc);
            acc += b;
        }
        out
    };
    let total: usize = block.iter().sum();
    if total == 0 {
        return Ok(Vec::new());
    }
    let var = |v: usize, r: usize, c: usize| offset[v] + r * n.dims()[v] + c;
    let q = m.algebra().quiver().clone();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for a in 0..q.num_arrows() {
        let (i, j) = (q.arrow(a).source, q.arrow(a).target);
        let sa = m.arrow_matrix(a);
        let ta = n.arrow_matrix(a);
        for r in 0..m.dims()[i] {
            for c in 0..n.dims()[j] {
                let mut row = vec![f.zero(); total];
                for k in 0..m.dims()[j] {
                    let cur = row[var(j, k, c)].clone();
                    row[var(j, k, c)] = f.add(&cur, sa.get(r, k));
                }
                for k in 0..n.dims()[i] {
                    let cur = row[var(i, r, k)].clone();
                    row[var(i, r, k)] = f.sub(&cur, ta.get(k, c));
                }
                rows.push(row);
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zero(&f, 0, total)
    } else {
        Matrix::from_rows(&f, rows)
    };
    let kernel = system.column_kernel();
    let mut basis = Vec::with_capacity(kernel.rows());
    for i in 0..kernel.rows() {
        basis.push(RepMap::from_flat(m, n, kernel.row(i))?);
    }
    Ok(basis)
}
