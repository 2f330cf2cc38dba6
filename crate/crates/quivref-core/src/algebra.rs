//! Bound quiver algebras with an explicit word basis.
//!
//! An [`Algebra`] is the quotient of a path algebra by an admissible relation
//! ideal, stored as: a basis of surviving words (paths), sorted by
//! (length, source, written label), and a full structure-constant table.
//!
//! Composition is right-to-left: `u * v` means apply `v`, then `u`, defined
//! when `source(u) == target(v)`. Words store their letters in application
//! order (`letters[0]` acts first), so the written label is the reverse:
//! the word with letters `[x, b]` is written `bx`.
//!
//! Construction is level-by-level for homogeneous relation sets: level L
//! coordinates are pairs (arrow a, surviving word w of length L-1) with
//! `source(a) == target(w)`, and the kernel at level L is spanned by the
//! expansions of `r * w` for relations r and surviving words w. Relation
//! sets that mix path lengths fall back to a truncated whole-path-space
//! computation; that fallback is exact for admissible ideals but cannot
//! always detect a non-admissible one (the level construction can).

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::quiver::Quiver;
use crate::space::RowSpace;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

/// Budget for the fallback whole-path-space construction.
const PATH_BUDGET: u64 = 200_000;

pub const DEFAULT_NILPOTENCY: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    /// Arrow indices in application order; empty for a vertex idempotent.
    pub letters: Vec<usize>,
    pub source: usize,
    pub target: usize,
}

impl Word {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_idempotent(&self) -> bool {
        self.letters.is_empty()
    }
}

/// A linear combination of parallel paths, each path in application order.
/// Coefficients are integers so the same presentation can be realized over
/// any field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(i64, Vec<usize>)>,
}

impl Relation {
    /// Single path with coefficient 1, letters in application order.
    pub fn path(letters: Vec<usize>) -> Relation {
        Relation { terms: vec![(1, letters)] }
    }

    /// Single path given in written order (left factor applied last).
    pub fn written(names: Vec<usize>) -> Relation {
        Relation { terms: vec![(1, names.into_iter().rev().collect())] }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    quiver: Quiver,
    basis: Vec<Word>,
    /// Basis index of e_v for each vertex v.
    idem: Vec<usize>,
    /// mult[i * dim + j] = basis[i] * basis[j], sparse by basis index.
    mult: Vec<Vec<(usize, Scalar)>>,
    relations: Vec<Relation>,
    nilpotency: usize,
}

/// Written label of a path: arrow names in reverse application order.
fn written_names(quiver: &Quiver, letters: &[usize]) -> Vec<String> {
    letters.iter().rev().map(|&a| quiver.arrow(a).name.clone()).collect()
}

fn sparse_add(field: &Field, acc: &mut BTreeMap<usize, Scalar>, idx: usize, s: &Scalar) {
    let cur = acc.entry(idx).or_insert_with(|| field.zero());
    *cur = field.add(cur, s);
    if field.is_zero(cur) {
        acc.remove(&idx);
    }
}

impl Algebra {
    pub fn new(
        field: Field,
        quiver: Quiver,
        relations: Vec<Relation>,
        nilpotency: usize,
    ) -> Result<Algebra> {
        assert!(nilpotency >= 2, "nilpotency bound must be at least 2");
        let mut homogeneous = true;
        for r in &relations {
            let mut endpoints: Option<(usize, usize)> = None;
            let mut length: Option<usize> = None;
            for (_c, path) in &r.terms {
                if path.len() < 2 {
                    return Err(Error::IdealNotInRadical);
                }
                for k in 0..path.len() {
                    if path[k] >= quiver.num_arrows() {
                        panic!("relation uses unknown arrow index");
                    }
                    if k + 1 < path.len()
                        && quiver.arrow(path[k + 1]).source != quiver.arrow(path[k]).target
                    {
                        return Err(Error::InconsistentRelation {
                            relation: written_names(&quiver, path).join(""),
                        });
                    }
                }
                let ends =
                    (quiver.arrow(path[0]).source, quiver.arrow(path[path.len() - 1]).target);
                match endpoints {
                    None => endpoints = Some(ends),
                    Some(e) if e != ends => {
                        return Err(Error::InconsistentRelation {
                            relation: written_names(&quiver, path).join(""),
                        });
                    }
                    _ => {}
                }
                match length {
                    None => length = Some(path.len()),
                    Some(l) if l != path.len() => homogeneous = false,
                    _ => {}
                }
            }
        }
        let live: Vec<Relation> = relations
            .iter()
            .map(|r| Relation {
                terms: r
                    .terms
                    .iter()
                    .filter(|(c, _)| !field.is_zero(&field.from_i64(*c)))
                    .cloned()
                    .collect(),
            })
            .filter(|r| !r.terms.is_empty())
            .collect();
        let alg = if homogeneous {
            Self::build_graded(field, quiver, relations, live, nilpotency)?
        } else {
            Self::build_truncated(field, quiver, relations, live, nilpotency)?
        };
        alg.validate();
        Ok(alg)
    }

    /// Level-by-level construction for homogeneous relation sets.
    fn build_graded(
        field: Field,
        quiver: Quiver,
        relations: Vec<Relation>,
        live: Vec<Relation>,
        nilpotency: usize,
    ) -> Result<Algebra> {
        let nv = quiver.num_vertices();
        // levels[l] = surviving words of length l.
        let mut levels: Vec<Vec<Word>> = vec![(0..nv)
            .map(|v| Word { letters: Vec::new(), source: v, target: v })
            .collect()];
        // proj[l] maps a level-l coordinate (arrow, word index in levels[l-1])
        // to its expansion over levels[l] indices. proj[0] is unused.
        let mut proj: Vec<BTreeMap<(usize, usize), Vec<(usize, Scalar)>>> =
            vec![BTreeMap::new()];

        // Reduce `letters` starting from the basis word `start` at `level`;
        // returns the state over `levels[level + letters.len()]` local indices.
        let reduce_from = |proj: &[BTreeMap<(usize, usize), Vec<(usize, Scalar)>>],
                           field: &Field,
                           mut level: usize,
                           start: usize,
                           letters: &[usize]|
         -> BTreeMap<usize, Scalar> {
            let mut state = BTreeMap::new();
            state.insert(start, field.one());
            for &a in letters {
                level += 1;
                let mut next = BTreeMap::new();
                if level >= proj.len() {
                    return BTreeMap::new();
                }
                for (w, c) in &state {
                    let expansion = proj[level]
                        .get(&(a, *w))
                        .expect("composable coordinate missing from projection table");
                    for (idx, s) in expansion {
                        sparse_add(field, &mut next, *idx, &field.mul(c, s));
                    }
                }
                state = next;
                if state.is_empty() {
                    break;
                }
            }
            state
        };

        let mut level = 1usize;
        loop {
            let prev = &levels[level - 1];
            // Coordinates (a, w), sorted by (source, written label).
            let mut coords: Vec<(usize, usize)> = Vec::new();
            for (wi, w) in prev.iter().enumerate() {
                for a in quiver.arrows_from(w.target) {
                    coords.push((a, wi));
                }
            }
            coords.sort_by(|&(a1, w1), &(a2, w2)| {
                let k1 = (prev[w1].source, {
                    let mut n = vec![quiver.arrow(a1).name.clone()];
                    n.extend(written_names(&quiver, &prev[w1].letters));
                    n
                });
                let k2 = (prev[w2].source, {
                    let mut n = vec![quiver.arrow(a2).name.clone()];
                    n.extend(written_names(&quiver, &prev[w2].letters));
                    n
                });
                k1.cmp(&k2)
            });
            if coords.is_empty() {
                break;
            }
            let coord_of: BTreeMap<(usize, usize), usize> =
                coords.iter().enumerate().map(|(i, &k)| (k, i)).collect();

            // Kernel rows: expansions of r * w over the level coordinates.
            let mut kernel_rows: Vec<Vec<Scalar>> = Vec::new();
            for r in &live {
                let degree = r.terms[0].1.len();
                if degree > level {
                    continue;
                }
                let m = level - degree;
                if m >= levels.len() {
                    continue;
                }
                let rel_source = quiver.arrow(r.terms[0].1[0]).source;
                for wi in 0..levels[m].len() {
                    if levels[m][wi].target != rel_source {
                        continue;
                    }
                    let mut row = vec![field.zero(); coords.len()];
                    let mut nonzero = false;
                    for (c, path) in &r.terms {
                        let head = &path[..path.len() - 1];
                        let last = path[path.len() - 1];
                        let state = reduce_from(&proj, &field, m, wi, head);
                        for (w2, s) in &state {
                            let col = *coord_of
                                .get(&(last, *w2))
                                .expect("relation expansion hit a non-composable coordinate");
                            row[col] = field.add(&row[col], &field.mul(&field.from_i64(*c), s));
                            nonzero = true;
                        }
                    }
                    if nonzero {
                        kernel_rows.push(row);
                    }
                }
            }
            let kernel = if kernel_rows.is_empty() {
                Matrix::zero(&field, 0, coords.len())
            } else {
                Matrix::from_rows(&field, kernel_rows)
            };
            let (rr, pivots) = kernel.rref();
            let is_pivot = {
                let mut v = vec![false; coords.len()];
                for &p in &pivots {
                    v[p] = true;
                }
                v
            };
            let survivors: Vec<usize> = (0..coords.len()).filter(|&c| !is_pivot[c]).collect();
            let local_of: BTreeMap<usize, usize> =
                survivors.iter().enumerate().map(|(l, &c)| (c, l)).collect();

            let mut table: BTreeMap<(usize, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
            for (ci, &key) in coords.iter().enumerate() {
                if let Some(&l) = local_of.get(&ci) {
                    table.insert(key, vec![(l, field.one())]);
                } else {
                    let prow = pivots.iter().position(|&p| p == ci).expect("pivot row");
                    let mut combo = Vec::new();
                    for &s in &survivors {
                        let entry = rr.get(prow, s);
                        if !field.is_zero(entry) {
                            combo.push((local_of[&s], field.neg(entry)));
                        }
                    }
                    table.insert(key, combo);
                }
            }
            proj.push(table);

            if survivors.is_empty() {
                break;
            }
            if level > nilpotency {
                return Err(Error::NonAdmissible { bound: nilpotency });
            }
            let words: Vec<Word> = survivors
                .iter()
                .map(|&c| {
                    let (a, wi) = coords[c];
                    let w = &prev[wi];
                    let mut letters = w.letters.clone();
                    letters.push(a);
                    Word { letters, source: w.source, target: quiver.arrow(a).target }
                })
                .collect();
            levels.push(words);
            level += 1;
        }

        // Flatten to the global basis and build the structure constants.
        let mut basis: Vec<Word> = Vec::new();
        let mut offsets: Vec<usize> = Vec::new();
        for lv in &levels {
            offsets.push(basis.len());
            basis.extend(lv.iter().cloned());
        }
        let idx_of: BTreeMap<Vec<usize>, usize> =
            basis.iter().enumerate().map(|(i, w)| (w.letters.clone(), i)).collect();
        let idem: Vec<usize> = (0..nv).map(|v| v).collect();

        let dim = basis.len();
        let mut mult: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                if basis[i].source != basis[j].target {
                    continue;
                }
                let state = reduce_from(
                    &proj,
                    &field,
                    basis[j].len(),
                    local_index(&levels, &basis[j]),
                    &basis[i].letters,
                );
                let lvl = basis[j].len() + basis[i].len();
                let entry: Vec<(usize, Scalar)> =
                    state.into_iter().map(|(l, c)| (offsets[lvl] + l, c)).collect();
                mult[i * dim + j] = entry;
            }
        }
        let _ = idx_of;
        Ok(Algebra { field, quiver, basis, idem, mult, relations, nilpotency })
    }

    /// Whole-path-space construction used when relations mix path lengths.
    fn build_truncated(
        field: Field,
        quiver: Quiver,
        relations: Vec<Relation>,
        live: Vec<Relation>,
        nilpotency: usize,
    ) -> Result<Algebra> {
        let horizon = nilpotency + 1;
        // Enumerate all paths of length <= horizon.
        let mut paths: Vec<Word> = (0..quiver.num_vertices())
            .map(|v| Word { letters: Vec::new(), source: v, target: v })
            .collect();
        let mut frontier: Vec<Word> = paths.clone();
        for _ in 0..horizon {
            let mut next = Vec::new();
            for w in &frontier {
                for a in quiver.arrows_from(w.target) {
                    let mut letters = w.letters.clone();
                    letters.push(a);
                    next.push(Word { letters, source: w.source, target: quiver.arrow(a).target });
                }
            }
            paths.extend(next.iter().cloned());
            if paths.len() as u64 > PATH_BUDGET {
                return Err(Error::BudgetExceeded {
                    budget: PATH_BUDGET,
                    needed: paths.len() as u64,
                    context: "path enumeration",
                });
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        paths.sort_by(|w1, w2| {
            (w1.len(), w1.source, written_names(&quiver, &w1.letters))
                .cmp(&(w2.len(), w2.source, written_names(&quiver, &w2.letters)))
        });
        let path_idx: BTreeMap<Vec<usize>, usize> =
            paths.iter().enumerate().map(|(i, w)| (w.letters.clone(), i)).collect();

        // Two-sided closure of the relation span, truncated at the horizon.
        let mut ideal = RowSpace::new(&field, paths.len());
        for r in &live {
            let mut row = vec![field.zero(); paths.len()];
            for (c, p) in &r.terms {
                if let Some(&i) = path_idx.get(p) {
                    row[i] = field.add(&row[i], &field.from_i64(*c));
                }
            }
            ideal.insert(row);
        }
        loop {
            let before = ideal.dim();
            let rows = ideal.basis_matrix();
            for i in 0..rows.rows() {
                for a in 0..quiver.num_arrows() {
                    for left in [true, false] {
                        let mut row = vec![field.zero(); paths.len()];
                        let mut any = false;
                        for (pi, c) in rows.row(i).iter().enumerate() {
                            if field.is_zero(c) {
                                continue;
                            }
                            let w = &paths[pi];
                            let fits = if left {
                                quiver.arrow(a).source == w.target
                            } else {
                                quiver.arrow(a).target == w.source
                            };
                            if !fits {
                                continue;
                            }
                            let letters = if left {
                                let mut l = w.letters.clone();
                                l.push(a);
                                l
                            } else {
                                let mut l = vec![a];
                                l.extend(w.letters.iter().copied());
                                l
                            };
                            if letters.len() > horizon {
                                continue;
                            }
                            let target = path_idx[&letters];
                            row[target] = field.add(&row[target], c);
                            any = true;
                        }
                        if any {
                            ideal.insert(row);
                        }
                    }
                }
            }
            if ideal.dim() == before {
                break;
            }
        }

        let pivot_set: Vec<bool> = {
            let bm = ideal.basis_matrix();
            let (_, pivots) = bm.rref();
            let mut v = vec![false; paths.len()];
            for p in pivots {
                v[p] = true;
            }
            v
        };
        let survivors: Vec<usize> = (0..paths.len()).filter(|&i| !pivot_set[i]).collect();
        if survivors.iter().any(|&i| paths[i].len() >= horizon) {
            return Err(Error::NonAdmissible { bound: nilpotency });
        }
        let arrow_survivors = survivors.iter().filter(|&&i| paths[i].len() == 1).count();
        if arrow_survivors != quiver.num_arrows() {
            return Err(Error::NonAdmissible { bound: nilpotency });
        }

        let basis: Vec<Word> = survivors.iter().map(|&i| paths[i].clone()).collect();
        let global_of_path: BTreeMap<usize, usize> =
            survivors.iter().enumerate().map(|(g, &p)| (p, g)).collect();
        let idem: Vec<usize> = (0..quiver.num_vertices())
            .map(|v| {
                basis
                    .iter()
                    .position(|w| w.is_idempotent() && w.source == v)
                    .expect("idempotents survive")
            })
            .collect();
        let dim = basis.len();
        let mut mult: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                if basis[i].source != basis[j].target {
                    continue;
                }
                let mut letters = basis[j].letters.clone();
                letters.extend(basis[i].letters.iter().copied());
                if letters.len() > horizon {
                    continue;
                }
                let pi = path_idx[&letters];
                let mut unit = vec![field.zero(); paths.len()];
                unit[pi] = field.one();
                let residue = ideal.reduce(&unit);
                let entry: Vec<(usize, Scalar)> = residue
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !field.is_zero(c))
                    .map(|(p, c)| (global_of_path[&p], c.clone()))
                    .collect();
                mult[i * dim + j] = entry;
            }
        }
        Ok(Algebra { field, quiver, basis, idem, mult, relations, nilpotency })
    }

    /// Internal consistency: identity laws, associativity on all basis
    /// triples, vanishing of every relation.
    fn validate(&self) {
        let dim = self.dim();
        let f = &self.field;
        for i in 0..dim {
            for j in 0..dim {
                let prod = self.mul_basis(i, j);
                if self.basis[i].source != self.basis[j].target {
                    assert!(prod.is_empty(), "non-composable product must vanish");
                }
                if self.basis[i].is_idempotent() {
                    let expect = if self.basis[i].source == self.basis[j].target {
                        vec![(j, f.one())]
                    } else {
                        Vec::new()
                    };
                    assert_eq!(prod, expect.as_slice(), "left identity law");
                }
                if self.basis[j].is_idempotent() {
                    let expect = if self.basis[i].source == self.basis[j].source {
                        vec![(i, f.one())]
                    } else {
                        Vec::new()
                    };
                    assert_eq!(prod, expect.as_slice(), "right identity law");
                }
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let ij = self.mul_basis(i, j).to_vec();
                    let mut left = BTreeMap::new();
                    for (m, c) in &ij {
                        for (n, d) in self.mul_basis(*m, k) {
                            sparse_add(f, &mut left, *n, &f.mul(c, d));
                        }
                    }
                    let jk = self.mul_basis(j, k).to_vec();
                    let mut right = BTreeMap::new();
                    for (m, c) in &jk {
                        for (n, d) in self.mul_basis(i, *m) {
                            sparse_add(f, &mut right, *n, &f.mul(c, d));
                        }
                    }
                    assert_eq!(left, right, "associativity failure on basis triple");
                }
            }
        }
        for r in &self.relations {
            let mut acc = vec![f.zero(); dim];
            for (c, path) in &r.terms {
                let reduced = self.reduce_path(path);
                for (idx, s) in reduced {
                    acc[idx] = f.add(&acc[idx], &f.mul(&f.from_i64(*c), &s));
                }
            }
            assert!(acc.iter().all(|s| f.is_zero(s)), "relation does not vanish");
        }
    }

    /// Image of a composable path in the algebra, via the structure constants.
    pub fn reduce_path(&self, letters: &[usize]) -> Vec<(usize, Scalar)> {
        let f = &self.field;
        if letters.is_empty() {
            panic!("reduce_path needs at least one letter; idempotents are basis words");
        }
        let src = self.quiver.arrow(letters[0]).source;
        let mut state: BTreeMap<usize, Scalar> = BTreeMap::new();
        state.insert(self.idem[src], f.one());
        for &a in letters {
            let ai = self
                .basis
                .iter()
                .position(|w| w.letters.as_slice() == [a])
                .expect("arrows are basis words");
            let mut next = BTreeMap::new();
            for (w, c) in &state {
                for (idx, s) in self.mul_basis(ai, *w) {
                    sparse_add(f, &mut next, *idx, &f.mul(c, s));
                }
            }
            state = next;
            if state.is_empty() {
                break;
            }
        }
        state.into_iter().collect()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Same presentation rebuilt over another field. The basis is identical
    /// because relations carry integer coefficients.
    pub fn over_field(&self, field: Field) -> Result<Algebra> {
        let rebuilt = Algebra::new(
            field,
            self.quiver.clone(),
            self.relations.clone(),
            self.nilpotency,
        )?;
        assert_eq!(rebuilt.dim(), self.dim(), "field change must preserve the basis");
        Ok(rebuilt)
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.basis[i]
    }

    pub fn words(&self) -> &[Word] {
        &self.basis
    }

    pub fn idempotent_index(&self, v: usize) -> usize {
        self.idem[v]
    }

    pub fn label(&self, i: usize) -> String {
        let w = &self.basis[i];
        if w.is_idempotent() {
            let mut s = String::from("e");
            s.push_str(&(w.source + 1).to_string());
            s
        } else {
            written_names(&self.quiver, &w.letters).join("")
        }
    }

    pub fn word_index_by_label(&self, label: &str) -> Option<usize> {
        (0..self.dim()).find(|&i| self.label(i) == label)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i * self.dim() + j]
    }

    /// Product of two dense coefficient vectors.
    pub fn mul_elements(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let dim = self.dim();
        assert_eq!(x.len(), dim);
        assert_eq!(y.len(), dim);
        let mut out = vec![f.zero(); dim];
        for i in 0..dim {
            if f.is_zero(&x[i]) {
                continue;
            }
            for j in 0..dim {
                if f.is_zero(&y[j]) {
                    continue;
                }
                let c = f.mul(&x[i], &y[j]);
                for (k, s) in self.mul_basis(i, j) {
                    out[*k] = f.add(&out[*k], &f.mul(&c, s));
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by basis word `a`: row k holds the
    /// coefficients of `a * basis[k]`.
    pub fn left_mult_matrix(&self, a: usize) -> Matrix {
        let dim = self.dim();
        let mut m = Matrix::zero(&self.field, dim, dim);
        for k in 0..dim {
            for (idx, c) in self.mul_basis(a, k) {
                m.set(k, *idx, c.clone());
            }
        }
        m
    }

    /// Matrix of right multiplication by basis word `a`: row k holds the
    /// coefficients of `basis[k] * a`.
    pub fn right_mult_matrix(&self, a: usize) -> Matrix {
        let dim = self.dim();
        let mut m = Matrix::zero(&self.field, dim, dim);
        for k in 0..dim {
            for (idx, c) in self.mul_basis(k, a) {
                m.set(k, *idx, c.clone());
            }
        }
        m
    }

    /// Basis index of the length-one word for arrow `a`.
    pub fn arrow_basis_index(&self, a: usize) -> usize {
        self.basis
            .iter()
            .position(|w| w.letters.as_slice() == [a])
            .expect("arrows are basis words")
    }

    /// soc(A A) = elements killed by every arrow on the left.
    pub fn socle_left(&self) -> RowSpace {
        let mats: Vec<Matrix> = (0..self.quiver.num_arrows())
            .map(|a| self.left_mult_matrix(self.arrow_basis_index(a)))
            .collect();
        self.joint_kernel(&mats)
    }

    /// soc(A A) on the right = {x : x * J = 0}, the left annihilator of the
    /// radical as a two-sided set.
    pub fn socle_right(&self) -> RowSpace {
        let mats: Vec<Matrix> = (0..self.quiver.num_arrows())
            .map(|a| self.right_mult_matrix(self.arrow_basis_index(a)))
            .collect();
        self.joint_kernel(&mats)
    }

    fn joint_kernel(&self, mats: &[Matrix]) -> RowSpace {
        let dim = self.dim();
        if mats.is_empty() {
            let mut s = RowSpace::new(&self.field, dim);
            s.insert_all(&Matrix::identity(&self.field, dim));
            return s;
        }
        let mut stacked = Matrix::zero(&self.field, dim, 0);
        for m in mats {
            stacked = stacked.hstack(m);
        }
        RowSpace::from_matrix(&stacked.kernel_rows())
    }

    /// {x : x * J = 0}; alias of [`Algebra::socle_right`] under the name the
    /// annihilator quotient construction uses.
    pub fn left_annihilator_of_radical(&self) -> RowSpace {
        self.socle_right()
    }

    /// {z : z * g = 0 for every g in the span of `gens`}. Each generator is a
    /// coefficient vector over the basis. Empty list annihilates nothing, so
    /// the whole algebra comes back.
    pub fn left_annihilator_of(&self, gens: &[Vec<Scalar>]) -> RowSpace {
        let dim = self.dim();
        let f = &self.field;
        let mats: Vec<Matrix> = gens
            .iter()
            .map(|g| {
                assert_eq!(g.len(), dim, "generator has wrong length");
                let mut m = Matrix::zero(f, dim, dim);
                for (j, c) in g.iter().enumerate() {
                    if f.is_zero(c) {
                        continue;
                    }
                    for k in 0..dim {
                        for (idx, s) in self.mul_basis(k, j) {
                            let cur = m.get(k, *idx).clone();
                            m.set(k, *idx, f.add(&cur, &f.mul(c, s)));
                        }
                    }
                }
                m
            })
            .collect();
        self.joint_kernel(&mats)
    }

    pub fn is_local(&self) -> bool {
        self.quiver.num_vertices() == 1
    }

    pub fn radical_square_zero(&self) -> bool {
        self.radical_power(2).dim() == 0
    }

    /// Per-vertex dims of a left-module-stable subspace, graded by target.
    pub fn vertex_dims_by_target(&self, space: &RowSpace) -> Vec<usize> {
        self.graded_dims(space, |w| w.target)
    }

    /// Per-vertex dims of a right-module-stable subspace, graded by source.
    pub fn vertex_dims_by_source(&self, space: &RowSpace) -> Vec<usize> {
        self.graded_dims(space, |w| w.source)
    }

    fn graded_dims(&self, space: &RowSpace, grade: impl Fn(&Word) -> usize) -> Vec<usize> {
        let f = &self.field;
        let basis = space.basis_matrix();
        (0..self.quiver.num_vertices())
            .map(|v| {
                let mut rows = Vec::new();
                for i in 0..basis.rows() {
                    let mut row = basis.row_vec(i);
                    for (k, s) in row.iter_mut().enumerate() {
                        if grade(&self.basis[k]) != v {
                            *s = f.zero();
                        }
                    }
                    rows.push(row);
                }
                if rows.is_empty() {
                    0
                } else {
                    Matrix::from_rows(f, rows).rank()
                }
            })
            .collect()
    }

    /// Span of all positive-length basis words, as a subspace of A.
    pub fn radical(&self) -> RowSpace {
        let f = &self.field;
        let mut s = RowSpace::new(f, self.dim());
        for (i, w) in self.basis.iter().enumerate() {
            if !w.is_idempotent() {
                let mut row = vec![f.zero(); self.dim()];
                row[i] = f.one();
                s.insert(row);
            }
        }
        s
    }

    /// rad^k as a subspace of A (k = 0 gives all of A).
    pub fn radical_power(&self, k: usize) -> RowSpace {
        let f = &self.field;
        if k == 0 {
            let mut s = RowSpace::new(f, self.dim());
            s.insert_all(&Matrix::identity(f, self.dim()));
            return s;
        }
        let mut cur = self.radical();
        for _ in 1..k {
            // rad * X: arrow products of X, closed under further arrows.
            let mut next = RowSpace::new(f, self.dim());
            let basis = cur.basis_matrix();
            let arrow_mats: Vec<Matrix> = (0..self.quiver.num_arrows())
                .map(|a| self.left_mult_matrix(self.arrow_basis_index(a)))
                .collect();
            let mut queue: Vec<Vec<Scalar>> = Vec::new();
            for i in 0..basis.rows() {
                for m in &arrow_mats {
                    queue.push(m.apply_row(basis.row(i)));
                }
            }
            while let Some(v) = queue.pop() {
                if next.insert(v.clone()) {
                    for m in &arrow_mats {
                        queue.push(m.apply_row(&v));
                    }
                }
            }
            cur = next;
        }
        cur
    }

    pub fn loewy_length(&self) -> usize {
        let mut k = 1;
        loop {
            if self.radical_power(k).dim() == 0 {
                return k;
            }
            k += 1;
            assert!(k <= self.nilpotency + 2, "radical powers must vanish");
        }
    }

    pub fn words_with_source(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].source == v).collect()
    }

    pub fn words_with_target(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].target == v).collect()
    }

    pub fn words_with(&self, source: usize, target: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].source == source && self.basis[i].target == target)
            .collect()
    }

    /// Same basis indices and labels, reversed words, transposed table.
    pub fn opposite(&self) -> Algebra {
        let basis: Vec<Word> = self
            .basis
            .iter()
            .map(|w| Word {
                letters: w.letters.iter().rev().copied().collect(),
                source: w.target,
                target: w.source,
            })
            .collect();
        let dim = basis.len();
        let mut mult = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                mult[i * dim + j] = self.mult[j * dim + i].clone();
            }
        }
        let relations = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, p)| (*c, p.iter().rev().copied().collect()))
                    .collect(),
            })
            .collect();
        Algebra {
            field: self.field.clone(),
            quiver: self.quiver.opposite(),
            basis,
            idem: self.idem.clone(),
            mult,
            relations,
            nilpotency: self.nilpotency,
        }
    }

    /// Validates two-sidedness, then summarizes A / ideal: dimension data,
    /// the regular module's per-vertex dims, and the quotient's arrow counts
    /// (dim of e_j (rad/rad^2) e_i for each pair).
    pub fn quotient_info(&self, ideal: &RowSpace) -> Result<QuotientInfo> {
        let f = &self.field;
        let dim = self.dim();
        assert_eq!(ideal.ambient(), dim, "ideal must live in A");
        let basis = ideal.basis_matrix();
        for i in 0..basis.rows() {
            for k in 0..dim {
                let left = self.left_mult_matrix(k).apply_row(basis.row(i));
                let right = self.right_mult_matrix(k).apply_row(basis.row(i));
                if !ideal.contains(&left) || !ideal.contains(&right) {
                    return Err(Error::IdealNotTwoSided);
                }
            }
        }
        let nv = self.quiver.num_vertices();
        let q_dim = dim - ideal.dim();
        let with_ideal = |space: &RowSpace| -> RowSpace {
            let mut s = ideal.clone();
            s.insert_all(&space.basis_matrix());
            s
        };
        let j1 = with_ideal(&self.radical());
        let j2 = with_ideal(&self.radical_power(2));
        let regular_dims: Vec<usize> = {
            let by_target = self.vertex_dims_by_target(ideal);
            (0..nv)
                .map(|v| self.words_with_target(v).len() - by_target[v])
                .collect()
        };
        let mut arrow_counts = BTreeMap::new();
        for i in 0..nv {
            for j in 0..nv {
                let d1 = self.double_graded_dim(&j1, i, j);
                let d2 = self.double_graded_dim(&j2, i, j);
                if d1 > d2 {
                    arrow_counts.insert((i, j), d1 - d2);
                }
            }
        }
        let rad_dim = j1.dim() - ideal.dim();
        let rad_square_dim = j2.dim() - ideal.dim();
        let _ = f;
        Ok(QuotientInfo {
            dim: q_dim,
            regular_dims,
            rad_dim,
            rad_square_dim,
            radical_square_zero: rad_square_dim == 0,
            arrow_counts,
        })
    }

    /// Quotient by a two-sided ideal spanned by basis words, rebuilt as a
    /// presented algebra together with the quotient map (old basis index ->
    /// row of coordinates over the new basis). The ideal must avoid the
    /// idempotents; killed arrows leave the quiver and surviving killed words
    /// become monomial relations.
    pub fn quotient(&self, ideal: &RowSpace) -> Result<(Algebra, Matrix)> {
        let info = self.quotient_info(ideal)?;
        let f = &self.field;
        let basis = ideal.basis_matrix();
        let mut killed: Vec<usize> = Vec::new();
        for i in 0..basis.rows() {
            let row = basis.row(i);
            let support: Vec<usize> =
                (0..row.len()).filter(|&j| !f.is_zero(&row[j])).collect();
            if support.len() != 1 {
                return Err(Error::NonMonomialIdeal);
            }
            killed.push(support[0]);
        }
        if killed.iter().any(|&k| self.basis[k].is_idempotent()) {
            return Err(Error::IdealNotInRadical);
        }
        let killed_arrows: Vec<usize> = killed
            .iter()
            .filter(|&&k| self.basis[k].len() == 1)
            .map(|&k| self.basis[k].letters[0])
            .collect();
        let old_arrows = self.quiver.num_arrows();
        let mut new_index = vec![usize::MAX; old_arrows];
        let mut arrows = Vec::new();
        for a in 0..old_arrows {
            if killed_arrows.contains(&a) {
                continue;
            }
            new_index[a] = arrows.len();
            arrows.push(self.quiver.arrow(a).clone());
        }
        let survives = |p: &[usize]| p.iter().all(|&a| new_index[a] != usize::MAX);
        let mut relations = Vec::new();
        for r in &self.relations {
            let terms: Vec<(i64, Vec<usize>)> = r
                .terms
                .iter()
                .filter(|(_, p)| survives(p))
                .map(|(c, p)| (*c, p.iter().map(|&a| new_index[a]).collect()))
                .collect();
            if !terms.is_empty() {
                relations.push(Relation { terms });
            }
        }
        for &k in &killed {
            let w = &self.basis[k];
            if w.len() >= 2 && survives(&w.letters) {
                relations
                    .push(Relation::path(w.letters.iter().map(|&a| new_index[a]).collect()));
            }
        }
        let quiver = Quiver::new(self.quiver.num_vertices(), arrows)?;
        let q = Algebra::new(f.clone(), quiver, relations, self.nilpotency)?;
        assert_eq!(q.dim(), info.dim, "word-spanned quotient rebuild must match the ideal");
        let mut proj = Matrix::zero(f, self.dim(), q.dim());
        let mut next = 0usize;
        for (i, w) in self.basis.iter().enumerate() {
            if killed.contains(&i) {
                continue;
            }
            let j = q
                .basis
                .iter()
                .position(|u| {
                    u.source == w.source
                        && u.target == w.target
                        && u.letters.len() == w.letters.len()
                        && u.letters
                            .iter()
                            .zip(&w.letters)
                            .all(|(&na, &oa)| new_index[oa] == na)
                })
                .expect("surviving word must appear in the rebuilt basis");
            proj.set(i, j, f.one());
            next += 1;
        }
        assert_eq!(next, q.dim(), "every rebuilt basis word is hit exactly once");
        Ok((q, proj))
    }

    /// dim of e_target X e_source for a two-sided-stable subspace X.
    fn double_graded_dim(&self, space: &RowSpace, source: usize, target: usize) -> usize {
        let f = &self.field;
        let basis = space.basis_matrix();
        let mut rows = Vec::new();
        for i in 0..basis.rows() {
            let mut row = basis.row_vec(i);
            for (k, s) in row.iter_mut().enumerate() {
                if self.basis[k].source != source || self.basis[k].target != target {
                    *s = f.zero();
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(f, rows).rank()
        }
    }

    pub fn element_render(&self, coeffs: &[Scalar]) -> String {
        let f = &self.field;
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in coeffs.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            if f.is_one(c) {
                parts.push(self.label(i));
            } else {
                let mut s = f.render(c);
                s.push('*');
                s.push_str(&self.label(i));
                parts.push(s);
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// Summary of A / ideal for a two-sided ideal, without building the quotient
/// as a separate algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientInfo {
    pub dim: usize,
    /// Per-vertex dims of the quotient's regular left module.
    pub regular_dims: Vec<usize>,
    pub rad_dim: usize,
    pub rad_square_dim: usize,
    pub radical_square_zero: bool,
    /// (source, target) -> arrow multiplicity in the quotient's quiver.
    pub arrow_counts: BTreeMap<(usize, usize), usize>,
}

fn local_index(levels: &[Vec<Word>], w: &Word) -> usize {
    levels[w.len()]
        .iter()
        .position(|x| x.letters == w.letters && x.source == w.source)
        .expect("word is a basis word of its level")
}
