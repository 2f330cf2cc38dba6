//! The A-dual M* = Hom(M, A) as a module over the opposite algebra, the
//! evaluation map into the double dual, and the torsionless/reflexive
//! predicates built on it.
//!
//! Component v of M* is Hom(M, Ae_v). The word bases of Ae_v and of the
//! opposite projective at v carry identical global indices, so evaluation
//! matrices transport between the two sides without reindexing.

use crate::algebra::Algebra;
use crate::error::Result;
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::rep::{hom_basis, Rep, RepMap};
use alloc::sync::Arc;
use alloc::vec::Vec;

/// A-dual of a module together with the hom bases that give its
/// coordinates at each vertex.
pub struct DualData {
    pub rep: Rep,
    pub bases: Vec<Vec<RepMap>>,
}

/// Right multiplication by the arrow `a: i -> j` as a map of left
/// projectives Ae_j -> Ae_i.
pub fn right_mult_map(algebra: &Arc<Algebra>, arrow: usize) -> Result<RepMap> {
    let q = algebra.quiver();
    let (i, j) = (q.arrows()[arrow].source, q.arrows()[arrow].target);
    let pj = Rep::projective(algebra.clone(), j)?;
    let pi = Rep::projective(algebra.clone(), i)?;
    let f = algebra.field().clone();
    let a_idx = algebra.arrow_basis_index(arrow);
    let words_j = Rep::projective_words(algebra, j);
    let words_i = Rep::projective_words(algebra, i);
    let mut mats = Vec::new();
    for u in 0..q.num_vertices() {
        let mut mat = Matrix::zero(&f, pj.dims()[u], pi.dims()[u]);
        for (r, &w) in words_j[u].iter().enumerate() {
            for (prod, coeff) in algebra.mul_basis(w, a_idx) {
                let col = words_i[u]
                    .iter()
                    .position(|&t| t == *prod)
                    .expect("product stays in the target projective");
                mat.set(r, col, coeff.clone());
            }
        }
        mats.push(mat);
    }
    RepMap::new(pj, pi, mats)
}

/// Coordinates of `g` in the span of `basis`; empty basis forces g = 0.
fn express(field: &Field, basis: &[RepMap], g: &RepMap) -> Vec<Scalar> {
    if basis.is_empty() {
        assert_eq!(g.rank(), 0, "map outside the hom basis span");
        return Vec::new();
    }
    let rows: Vec<Vec<Scalar>> = basis.iter().map(|b| b.flatten()).collect();
    let mat = Matrix::from_rows(field, rows);
    let rhs = Matrix::from_row(field, g.flatten());
    let sol = mat.solve_left(&rhs).expect("map outside the hom basis span");
    sol.row_vec(0)
}

/// Dual module over `op`, with op-arrows acting by composition with right
/// multiplication maps.
pub fn a_dual(m: &Rep, op: &Arc<Algebra>) -> Result<DualData> {
    let a = m.algebra().clone();
    let f = m.field().clone();
    let q = a.quiver();
    let mut bases = Vec::new();
    for v in 0..q.num_vertices() {
        bases.push(hom_basis(m, &Rep::projective(a.clone(), v)?)?);
    }
    let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
    let mut mats = Vec::new();
    for arrow in 0..q.arrows().len() {
        let (i, j) = (q.arrows()[arrow].source, q.arrows()[arrow].target);
        let r = right_mult_map(&a, arrow)?;
        let mut mat = Matrix::zero(&f, dims[j], dims[i]);
        for (row, b) in bases[j].iter().enumerate() {
            let coords = express(&f, &bases[i], &b.then(&r));
            for (col, s) in coords.into_iter().enumerate() {
                mat.set(row, col, s);
            }
        }
        mats.push(mat);
    }
    let rep = Rep::new(op.clone(), dims, mats)?;
    Ok(DualData { rep, bases })
}

/// Dual of a map f: M -> N, as N* -> M*.
pub fn a_dual_map(f: &RepMap, dual_target: &DualData, dual_source: &DualData) -> Result<RepMap> {
    let fld = f.source().field().clone();
    let nv = dual_target.rep.dims().len();
    let mut mats = Vec::new();
    for v in 0..nv {
        let mut mat = Matrix::zero(
            &fld,
            dual_target.rep.dims()[v],
            dual_source.rep.dims()[v],
        );
        for (row, b) in dual_target.bases[v].iter().enumerate() {
            let coords = express(&fld, &dual_source.bases[v], &f.then(b));
            for (col, s) in coords.into_iter().enumerate() {
                mat.set(row, col, s);
            }
        }
        mats.push(mat);
    }
    RepMap::new(dual_target.rep.clone(), dual_source.rep.clone(), mats)
}

/// Dual, double dual and the evaluation map phi: M -> M**.
pub struct Biduality {
    pub dual: DualData,
    pub double: DualData,
    pub phi: RepMap,
}

/// Evaluation at the vector `m` in component v, as a module map
/// M* -> opposite projective at v. Entry layout is index-exact against the
/// word basis shared by Ae_w and the opposite projective.
fn evaluation_map(
    m: &Rep,
    op: &Arc<Algebra>,
    dual: &DualData,
    v: usize,
    vector: &[Scalar],
) -> Result<RepMap> {
    let f = m.field().clone();
    let pv = Rep::projective(op.clone(), v)?;
    let mut mats = Vec::new();
    for w in 0..m.dims().len() {
        let mut mat = Matrix::zero(&f, dual.rep.dims()[w], pv.dims()[w]);
        for (row, b) in dual.bases[w].iter().enumerate() {
            let image = Matrix::from_row(&f, vector.to_vec()).mul(b.matrix(v));
            for col in 0..pv.dims()[w] {
                mat.set(row, col, image.get(0, col).clone());
            }
        }
        mats.push(mat);
    }
    RepMap::new(dual.rep.clone(), pv, mats)
}

pub fn biduality(m: &Rep, op: &Arc<Algebra>) -> Result<Biduality> {
    let a = m.algebra().clone();
    let f = m.field().clone();
    let dual = a_dual(m, op)?;
    let double = a_dual(&dual.rep, &a)?;
    let mut mats = Vec::new();
    for v in 0..m.dims().len() {
        let mut mat = Matrix::zero(&f, m.dims()[v], double.rep.dims()[v]);
        for r in 0..m.dims()[v] {
            let mut local = alloc::vec![f.zero(); m.dims()[v]];
            local[r] = f.one();
            let ev = evaluation_map(m, op, &dual, v, &local)?;
            let coords = express(&f, &double.bases[v], &ev);
            for (col, s) in coords.into_iter().enumerate() {
                mat.set(r, col, s);
            }
        }
        mats.push(mat);
    }
    let phi = RepMap::new(m.clone(), double.rep.clone(), mats)?;
    Ok(Biduality { dual, double, phi })
}

/// Kernel of phi equals the common kernel of all maps to the regular
/// module; both are computed and compared.
pub fn is_torsionless(m: &Rep, op: &Arc<Algebra>) -> Result<bool> {
    let bid = biduality(m, op)?;
    let by_phi = bid.phi.is_injective();
    let reg = Rep::regular(m.algebra().clone());
    let maps = hom_basis(m, &reg)?;
    let f = m.field().clone();
    let mut by_common = true;
    for v in 0..m.dims().len() {
        if m.dims()[v] == 0 {
            continue;
        }
        let blocks: Vec<Matrix> = maps.iter().map(|g| g.matrix(v).clone()).collect();
        let stacked = if blocks.is_empty() {
            Matrix::zero(&f, m.dims()[v], 0)
        } else {
            let mut acc = blocks[0].clone();
            for b in &blocks[1..] {
                acc = acc.hstack(b);
            }
            acc
        };
        if stacked.kernel_rows().rows() > 0 {
            by_common = false;
        }
    }
    assert_eq!(by_phi, by_common, "torsionless certificates disagree");
    Ok(by_phi)
}

pub fn is_reflexive(m: &Rep, op: &Arc<Algebra>) -> Result<bool> {
    Ok(biduality(m, op)?.phi.is_bijective())
}

/// Cokernel of the evaluation map.
pub fn coker_phi(m: &Rep, op: &Arc<Algebra>) -> Result<Rep> {
    Ok(biduality(m, op)?.phi.cokernel().0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Relation, DEFAULT_NILPOTENCY};
    use crate::endo::is_iso;
    use crate::quiver::{Arrow, Quiver};
    use alloc::vec;

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

    /// Two arrows in a row with the composite set to zero.
    fn bound_line(field: Field) -> Arc<Algebra> {
        let q = Quiver::new(3, vec![named("b", 1, 0), named("a", 2, 1)]).unwrap();
        let relations = vec![Relation::path(vec![1, 0])];
        Arc::new(Algebra::new(field, q, relations, DEFAULT_NILPOTENCY).unwrap())
    }

    fn cyclic_quotient(p: &Rep, vertex: usize, local: usize) -> Rep {
        let (_, incl) = p.sub_rep(&[p.unit_vector(vertex, local)]).unwrap();
        p.quotient_by(&incl).unwrap().0
    }

    #[test]
    fn simple_duals_match_socle_multiplicities() {
        let a = sample(Field::prime(101).unwrap());
        let op = Arc::new(a.opposite());
        let reg = Rep::regular(a.clone());
        let (soc, _) = reg.socle_rep();
        for v in 0..2 {
            let s = Rep::simple(a.clone(), v).unwrap();
            let d = a_dual(&s, &op).unwrap();
            assert_eq!(d.rep.dims(), &[1, 1]);
            assert_eq!(d.rep.total_dim(), soc.dims()[v]);
        }
    }

    #[test]
    fn dual_of_regular_has_full_dimension() {
        let a = sample(Field::prime(101).unwrap());
        let op = Arc::new(a.opposite());
        let reg = Rep::regular(a.clone());
        let d = a_dual(&reg, &op).unwrap();
        assert_eq!(d.rep.total_dim(), 8);
        let z = Rep::zero_rep(a);
        assert!(a_dual(&z, &op).unwrap().rep.is_zero());
    }

    #[test]
    fn length_two_quotients_have_three_dimensional_duals() {
        let a = sample(Field::prime(101).unwrap());
        let op = Arc::new(a.opposite());
        let p1 = Rep::projective(a.clone(), 0).unwrap();
        let comps = Rep::projective_words(&a, 0);
        let c_local = comps[0].iter().position(|&w| a.label(w) == "c").unwrap();
        let b_local = comps[1].iter().position(|&w| a.label(w) == "b").unwrap();
        let bee = cyclic_quotient(&p1, 0, c_local);
        let cee = cyclic_quotient(&p1, 1, b_local);
        assert_eq!(a_dual(&bee, &op).unwrap().rep.total_dim(), 3);
        assert_eq!(a_dual(&cee, &op).unwrap().rep.total_dim(), 3);
        assert!(is_torsionless(&bee, &op).unwrap());
        assert!(is_torsionless(&cee, &op).unwrap());
        assert!(!is_reflexive(&bee, &op).unwrap());
        assert!(!is_reflexive(&cee, &op).unwrap());
    }

    #[test]
    fn projectives_and_simples_are_reflexive() {
        let a = sample(Field::prime(101).unwrap());
        let op = Arc::new(a.opposite());
        for m in [
            Rep::projective(a.clone(), 0).unwrap(),
            Rep::projective(a.clone(), 1).unwrap(),
            Rep::regular(a.clone()),
            Rep::simple(a.clone(), 0).unwrap(),
            Rep::simple(a.clone(), 1).unwrap(),
        ] {
            assert!(is_torsionless(&m, &op).unwrap());
            assert!(is_reflexive(&m, &op).unwrap());
        }
    }

    #[test]
    fn bound_line_exhibits_torsionless_not_reflexive() {
        let a = bound_line(Field::prime(101).unwrap());
        let op = Arc::new(a.opposite());
        let s2 = Rep::simple(a.clone(), 1).unwrap();
        assert!(is_torsionless(&s2, &op).unwrap());
        assert!(!is_reflexive(&s2, &op).unwrap());
        let bid = biduality(&s2, &op).unwrap();
        let p3 = Rep::projective(a.clone(), 2).unwrap();
        assert!(is_iso(&bid.double.rep, &p3).unwrap());
        let coker = coker_phi(&s2, &op).unwrap();
        assert!(is_iso(&coker, &Rep::simple(a.clone(), 2).unwrap()).unwrap());
        assert!(a_dual(&Rep::simple(a, 2).unwrap(), &op).unwrap().rep.is_zero());
    }

    #[test]
    fn triple_identity_holds() {
        let a = sample(Field::prime(101).unwrap());
        let op = Arc::new(a.opposite());
        let p2 = Rep::projective(a.clone(), 1).unwrap();
        let (rad, _) = p2.radical_rep();
        let comps = Rep::projective_words(&a, 0);
        let c_local = comps[0].iter().position(|&w| a.label(w) == "c").unwrap();
        let p1 = Rep::projective(a.clone(), 0).unwrap();
        let bee = cyclic_quotient(&p1, 0, c_local);
        for m in [Rep::simple(a.clone(), 0).unwrap(), bee, p2, rad] {
            let bid = biduality(&m, &op).unwrap();
            let triple = a_dual(&bid.double.rep, &op).unwrap();
            let phi_dual = biduality(&bid.dual.rep, &a).unwrap();
            assert_eq!(phi_dual.double.rep, triple.rep);
            let back = a_dual_map(&bid.phi, &triple, &bid.dual).unwrap();
            let round = phi_dual.phi.then(&back);
            assert_eq!(round, RepMap::identity(&bid.dual.rep));
        }
    }
}
