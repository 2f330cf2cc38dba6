//! Endomorphism algebras, certified indecomposability, direct sum
//! decomposition and isomorphism testing.
//!
//! Certificates are exact. Over Q and over primes larger than the module
//! dimension the radical of End comes from the trace form; over F_2 and F_3
//! exhaustive scans over the endomorphism coefficients replace it. A module
//! is certified indecomposable either by End/rad being one-dimensional or by
//! an exhaustive search finding no nontrivial idempotent. When neither
//! certificate is reachable the functions refuse rather than guess.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Matrix;
use crate::rep::{hom_basis, Rep, RepMap};
use crate::space::RowSpace;
use alloc::vec;
use alloc::vec::Vec;

/// Coefficient-tuple budget for exhaustive scans over small fields.
const EXHAUSTIVE_BUDGET: u64 = 1 << 20;
/// Evaluation budget for the grid isomorphism search.
const GRID_BUDGET: u64 = 2_000_000;

/// Candidate iteration order for the split search; both orders must

/// produce the same decomposition up to isomorphism and order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitOrder {
    Standard,
    Reversed,
}

/// End(M) with its canonical hom basis.
pub struct EndData {
    pub basis: Vec<RepMap>,
    /// Radical of End in basis coordinates, when the field admits the trace
    /// form certificate.
    pub radical: Option<RowSpace>,
}

/// Trace of an endomorphism: sum of the vertex-block traces.
fn end_trace(map: &RepMap) -> Scalar {
    let f = map.source().field().clone();
    let mut acc = f.zero();
    for v in 0..map.source().dims().len() {
        if map.source().dims()[v] > 0 {
            acc = f.add(&acc, &map.matrix(v).trace().expect("square block"));
        }
    }
    acc
}

/// The trace form certifies rad End exactly when nilpotents have zero trace
/// forced by the characteristic: char 0, or p > dim M (multiplicities of the
/// simple summands stay invertible). The guard also demands p > dim End as a
/// conservative margin.
fn trace_form_applies(m: &Rep, end_dim: usize) -> bool {
    match m.field().size() {
        None => true,
        Some(p) => p > m.total_dim() as u64 && p > end_dim as u64,
    }
}

pub fn end_algebra(m: &Rep) -> Result<EndData> {
    let basis = hom_basis(m, m)?;
    let f = m.field().clone();
    let k = basis.len();
    let radical = if trace_form_applies(m, k) {
        let mut gram = Matrix::zero(&f, k, k);
        for i in 0..k {
            for j in 0..k {
                gram.set(i, j, end_trace(&basis[i].then(&basis[j])));
            }
        }
        Some(RowSpace::from_matrix(&gram.kernel_rows()))
    } else {
        None
    };
    Ok(EndData { basis, radical })
}

/// dim End(M)/rad End(M); needs the trace form.
pub fn end_residue_dim(m: &Rep) -> Result<usize> {
    let end = end_algebra(m)?;
    match end.radical {
        Some(r) => Ok(end.basis.len() - r.dim()),
        None => Err(Error::FieldTooSmall {
            needed: (m.total_dim().max(end.basis.len()) + 1) as u64,
        }),
    }
}

pub fn is_brick(m: &Rep) -> Result<bool> {
    Ok(hom_basis(m, m)?.len() == 1)
}

/// Linear combination of hom basis elements.
pub(crate) fn combine(basis: &[RepMap], coeffs: &[Scalar]) -> RepMap {
    let f = basis[0].source().field().clone();
    let mut acc = RepMap::zero(basis[0].source().clone(), basis[0].target().clone());
    for (b, c) in basis.iter().zip(coeffs) {
        if !f.is_zero(c) {
            acc = acc.add(&b.scale(c));
        }
    }
    acc
}

/// All coefficient tuples over a field of size q, odometer order.
struct Tuples {
    elements: Vec<Scalar>,
    state: Vec<usize>,
    done: bool,
}

impl Tuples {
    fn new(elements: Vec<Scalar>, len: usize) -> Tuples {
        Tuples { elements, state: vec![0; len], done: false }
    }
}

impl Iterator for Tuples {
    type Item = Vec<Scalar>;

    fn next(&mut self) -> Option<Vec<Scalar>> {
        if self.done {
            return None;
        }
        let out: Vec<Scalar> =
            self.state.iter().map(|&i| self.elements[i].clone()).collect();
        let mut k = 0;
        loop {
            if k == self.state.len() {
                self.done = true;
                break;
            }
            self.state[k] += 1;
            if self.state[k] < self.elements.len() {
                break;
            }
            self.state[k] = 0;
            k += 1;
        }
        Some(out)
    }
}

fn exhaustive_budget_check(q: u64, k: usize, context: &'static str) -> Result<()> {
    let mut total: u64 = 1;
    for _ in 0..k {
        total = total.saturating_mul(q);
        if total > EXHAUSTIVE_BUDGET {
            return Err(Error::BudgetExceeded {
                budget: EXHAUSTIVE_BUDGET,
                needed: total,
                context,
            });
        }
    }
    Ok(())
}

/// Exhaustive idempotent search over a small field. `Ok(None)` certifies
/// that End(M) has no nontrivial idempotent.
fn exhaustive_idempotent(m: &Rep, basis: &[RepMap]) -> Result<Option<RepMap>> {
    let f = m.field().clone();
    let q = f.size().ok_or(Error::EnumerationFieldTooLarge { size: 0 })?;
    exhaustive_budget_check(q, basis.len(), "exhaustive idempotent search")?;
    let elements = f.elements()?;
    let dim = m.total_dim();
    for coeffs in Tuples::new(elements, basis.len()) {
        let e = combine(basis, &coeffs);
        let r = e.rank();
        if r == 0 || r == dim {
            continue;
        }
        if e.then(&e) == e {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// Fitting split along h: M = ker(h^N) + im(h^N) with N = dim M. Some when
/// both parts are proper.
fn fitting_split(m: &Rep, h: &RepMap) -> Option<(Rep, Rep)> {
    let n = m.total_dim();
    let mut p = h.clone();
    let mut k = 1;
    while k < n {
        p = p.then(&p);
        k *= 2;
    }
    let r = p.rank();
    if r == 0 || r == n {
        return None;
    }
    debug_assert_eq!(p.then(&p).rank(), r, "Fitting power must have stabilized");
    let (im, _) = p.image();
    let (ker, _) = p.kernel();
    assert_eq!(im.total_dim() + ker.total_dim(), n, "Fitting parts fill the module");
    Some((ker, im))
}

/// Deterministic shift sample for the split search: every residue for small
/// primes, an integer range otherwise.
fn shift_sample(m: &Rep) -> Vec<Scalar> {
    let f = m.field().clone();
    match f.size() {
        Some(p) if p <= 211 => f.elements().expect("finite field"),
        _ => (0..=(2 * m.total_dim() as i64)).map(|t| f.from_i64(t)).collect(),
    }
}

fn candidate_indices(len: usize, order: SplitOrder) -> Vec<usize> {
    match order {
        SplitOrder::Standard => (0..len).collect(),
        SplitOrder::Reversed => (0..len).rev().collect(),
    }
}

/// Search the basis, pairwise sums and scalar shifts for a Fitting split.
fn find_split(m: &Rep, basis: &[RepMap], order: SplitOrder) -> Option<(Rep, Rep)> {
    let idx = candidate_indices(basis.len(), order);
    for &i in &idx {
        if let Some(split) = fitting_split(m, &basis[i]) {
            return Some(split);
        }
    }
    for &i in &idx {
        for &j in &idx {
            if i < j {
                if let Some(split) = fitting_split(m, &basis[i].add(&basis[j])) {
                    return Some(split);
                }
            }
        }
    }
    let id = RepMap::identity(m);
    let f = m.field().clone();
    for &i in &idx {
        for lambda in shift_sample(m) {
            if f.is_zero(&lambda) {
                continue;
            }
            let shifted = basis[i].add(&id.scale(&f.neg(&lambda)));
            if let Some(split) = fitting_split(m, &shifted) {
                return Some(split);
            }
        }
    }
    None
}

/// Indecomposability with an explicit certificate route: local endomorphism
/// algebra when the trace form is available, exhaustive idempotent absence
/// otherwise.
pub fn is_indecomposable(m: &Rep) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let end = end_algebra(m)?;
    if let Some(rad) = &end.radical {
        return Ok(end.basis.len() - rad.dim() == 1);
    }
    Ok(exhaustive_idempotent(m, &end.basis)?.is_none())
}

/// Indecomposable direct summands, repetitions kept, certified.
pub fn decompose(m: &Rep, order: SplitOrder) -> Result<Vec<Rep>> {
    if m.is_zero() {
        return Ok(Vec::new());
    }
    let end = end_algebra(m)?;
    if let Some(rad) = &end.radical {
        if end.basis.len() - rad.dim() == 1 {
            return Ok(vec![m.clone()]);
        }
    } else if exhaustive_idempotent(m, &end.basis)?.is_none() {
        return Ok(vec![m.clone()]);
    }
    if let Some((a, b)) = find_split(m, &end.basis, order) {
        let mut out = decompose(&a, order)?;
        out.extend(decompose(&b, order)?);
        return Ok(out);
    }
    if m.field().size().map(|q| q <= 3).unwrap_or(false) {
        if let Some(e) = exhaustive_idempotent(m, &end.basis)? {
            let (im, _) = e.image();
            let (ker, _) = e.kernel();
            let mut out = decompose(&ker, order)?;
            out.extend(decompose(&im, order)?);
            return Ok(out);
        }
        return Ok(vec![m.clone()]);
    }
    Err(Error::UndeterminedSummand)
}

/// Exact isomorphism test. Small fields are scanned exhaustively; larger
/// fields use a full grid over the hom coefficients, sound because a nonzero
/// polynomial with per-variable degree at most D cannot vanish on a
/// (D+1)-point grid per variable.
pub fn is_iso(m: &Rep, n: &Rep) -> Result<bool> {
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let f = m.field().clone();
    let basis = hom_basis(m, n)?;
    if basis.is_empty() {
        return Ok(false);
    }
    let dim = m.total_dim();
    if let Some(q) = f.size() {
        if q <= 3 {
            exhaustive_budget_check(q, basis.len(), "exhaustive isomorphism search")?;
            for coeffs in Tuples::new(f.elements()?, basis.len()) {
                if combine(&basis, &coeffs).rank() == dim {
                    return Ok(true);
                }
            }
            return Ok(false);
        }
        if q <= dim as u64 {
            return Err(Error::FieldTooSmall { needed: dim as u64 + 1 });
        }
    }
    let side = dim as u64 + 1;
    let mut total: u64 = 1;
    for _ in 0..basis.len() {
        total = total.saturating_mul(side);
        if total > GRID_BUDGET {
            return Err(Error::BudgetExceeded {
                budget: GRID_BUDGET,
                needed: total,
                context: "grid isomorphism search",
            });
        }
    }
    let grid: Vec<Scalar> = (0..side as i64).map(|t| f.from_i64(t)).collect();
    for coeffs in Tuples::new(grid, basis.len()) {
        if combine(&basis, &coeffs).rank() == dim {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Isomorphism via Krull-Schmidt: decompose both sides and match the
/// summand multisets pairwise. Avoids the grid search on large hom spaces
/// between decomposable modules.
pub fn is_iso_by_summands(m: &Rep, n: &Rep) -> Result<bool> {
    if m.dims() != n.dims() {
        return Ok(false);
    }
    let left = decompose(m, SplitOrder::Standard)?;
    let right = decompose(n, SplitOrder::Standard)?;
    if left.len() != right.len() {
        return Ok(false);
    }
    let mut used = vec![false; right.len()];
    for part in &left {
        let mut found = false;
        for (j, cand) in right.iter().enumerate() {
            if !used[j] && is_iso(part, cand)? {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Relation, DEFAULT_NILPOTENCY};
    use crate::field::Field;
    use crate::quiver::{Arrow, Quiver};
    use alloc::sync::Arc;

    fn named(name: &str, source: usize, target: usize) -> Arrow {
        Arrow { name: name.into(), source, target }
    }

    fn sample(field: Field) -> Arc<Algebra> {
        let q = Quiver::new(
            2,
            vec![named("b", 0, 1), named("c", 0, 0), named("x", 1, 0), named("y", 1, 0)],
        )
        .unwrap();
        let (b, c, x, y) = (0usize, 1usize, 2usize, 3usize);
        let relations = vec![
            Relation::path(vec![x, c]),
            Relation::path(vec![y, b]),
            Relation::path(vec![c, c]),
            Relation::path(vec![c, b]),
            Relation::path(vec![b, x]),
            Relation::path(vec![b, y]),
        ];
        Arc::new(Algebra::new(field, q, relations, DEFAULT_NILPOTENCY).unwrap())
    }

    fn quotient_of_p1(a: &Arc<Algebra>, kill: &str) -> Rep {
        let p1 = Rep::projective(a.clone(), 0).unwrap();
        let comps = Rep::projective_words(a, 0);
        for (v, comp) in comps.iter().enumerate() {
            if let Some(local) = comp.iter().position(|&w| a.label(w) == kill) {
                let (_, incl) = p1.sub_rep(&[p1.unit_vector(v, local)]).unwrap();
                return p1.quotient_by(&incl).unwrap().0;
            }
        }
        panic!("label not in P(1)");
    }

    #[test]
    fn end_of_projective_is_local() {
        let a = sample(Field::prime(101).unwrap());
        let p1 = Rep::projective(a, 0).unwrap();
        let end = end_algebra(&p1).unwrap();
        assert_eq!(end.basis.len(), 2);
        assert_eq!(end.radical.as_ref().unwrap().dim(), 1);
        assert_eq!(end_residue_dim(&p1).unwrap(), 1);
        assert!(is_indecomposable(&p1).unwrap());
        assert!(!is_brick(&p1).unwrap());
    }

    #[test]
    fn simples_are_bricks_and_nonisomorphic() {
        let a = sample(Field::prime(101).unwrap());
        let s1 = Rep::simple(a.clone(), 0).unwrap();
        let s2 = Rep::simple(a, 1).unwrap();
        assert!(is_brick(&s1).unwrap());
        assert!(is_brick(&s2).unwrap());
        assert!(is_iso(&s1, &s1).unwrap());
        assert!(!is_iso(&s1, &s2).unwrap());
    }

    #[test]
    fn regular_decomposes_into_the_projectives() {
        let a = sample(Field::prime(101).unwrap());
        let reg = Rep::regular(a.clone());
        let parts = decompose(&reg, SplitOrder::Standard).unwrap();
        let mut dims: Vec<Vec<usize>> =
            parts.iter().map(|p| p.dims().to_vec()).collect();
        dims.sort();
        assert_eq!(dims, vec![vec![2, 1], vec![3, 2]]);
        let p1 = Rep::projective(a.clone(), 0).unwrap();
        let p2 = Rep::projective(a, 1).unwrap();
        for part in &parts {
            let hit = is_iso(part, &p1).unwrap() || is_iso(part, &p2).unwrap();
            assert!(hit, "regular summand matches a projective");
        }
    }

    #[test]
    fn radical_of_regular_has_four_summands() {
        let a = sample(Field::prime(101).unwrap());
        let reg = Rep::regular(a.clone());
        let (rad, _) = reg.radical_rep();
        let parts = decompose(&rad, SplitOrder::Standard).unwrap();
        let mut dims: Vec<Vec<usize>> =
            parts.iter().map(|p| p.dims().to_vec()).collect();
        dims.sort();
        assert_eq!(dims, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 0]]);
        let bee = quotient_of_p1(&a, "c");
        let cee = quotient_of_p1(&a, "b");
        assert!(!is_iso(&bee, &cee).unwrap());
        let b_part = parts.iter().find(|p| p.dims() == [1, 1]).unwrap();
        let c_part = parts.iter().find(|p| p.dims() == [2, 0]).unwrap();
        assert!(is_iso(b_part, &bee).unwrap());
        assert!(is_iso(c_part, &cee).unwrap());
    }

    #[test]
    fn decompose_orders_agree() {
        let a = sample(Field::prime(101).unwrap());
        let reg = Rep::regular(a.clone());
        let (rad, _) = reg.radical_rep();
        for m in [&reg, &rad] {
            let std_parts = decompose(m, SplitOrder::Standard).unwrap();
            let rev_parts = decompose(m, SplitOrder::Reversed).unwrap();
            assert_eq!(std_parts.len(), rev_parts.len());
            let mut used = vec![false; rev_parts.len()];
            for p in &std_parts {
                let j = (0..rev_parts.len())
                    .find(|&j| !used[j] && is_iso(p, &rev_parts[j]).unwrap())
                    .expect("multisets agree up to isomorphism");
                used[j] = true;
            }
        }
    }

    #[test]
    fn small_field_paths_are_exhaustive() {
        let a = sample(Field::prime(2).unwrap());
        let s1 = Rep::simple(a.clone(), 0).unwrap();
        let sum = Rep::direct_sum(&[&s1, &s1]).unwrap().rep;
        assert!(!is_indecomposable(&sum).unwrap());
        let parts = decompose(&sum, SplitOrder::Standard).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(is_iso(&parts[0], &s1).unwrap());
        let p1 = Rep::projective(a, 0).unwrap();
        assert!(is_indecomposable(&p1).unwrap());
        assert!(is_iso(&p1, &p1).unwrap());
        assert!(!is_iso(&p1, &sum).unwrap());
    }

    #[test]
    fn zero_module_conventions() {
        let a = sample(Field::prime(101).unwrap());
        let z = Rep::zero_rep(a.clone());
        assert!(decompose(&z, SplitOrder::Standard).unwrap().is_empty());
        assert_eq!(is_indecomposable(&z).unwrap_err(), Error::ZeroModule);
        assert!(is_iso(&z, &Rep::zero_rep(a)).unwrap());
    }
}
