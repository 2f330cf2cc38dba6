//! Projective covers, syzygies, linear duals, injectives and Ext^1.
//!
//! The linear dual D sends a left module to a left module over the opposite
//! algebra by transposing every arrow action; D(D(M)) is coordinatewise
//! equal to M, so double-dual identifications are the identity.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rep::{hom_basis, Rep, RepMap};
use alloc::sync::Arc;
use alloc::vec::Vec;

/// Projective cover X -> M built from lifts of a top basis. The returned
/// map is surjective with superfluous kernel.
pub fn projective_cover(m: &Rep) -> Result<(Rep, RepMap)> {
    let a = m.algebra().clone();
    let f = m.field().clone();
    let (top, proj) = m.top_rep();
    let mut parts: Vec<Rep> = Vec::new();
    let mut part_maps: Vec<Matrix> = Vec::new();
    let mut part_vertices: Vec<usize> = Vec::new();
    for v in 0..a.quiver().num_vertices() {
        let mult = top.dims()[v];
        if mult == 0 {
            continue;
        }
        let lifts = proj
            .matrix(v)
            .solve_left(&Matrix::identity(&f, mult))
            .expect("top projection is surjective");
        for k in 0..mult {
            parts.push(Rep::projective(a.clone(), v)?);
            part_maps.push(Matrix::from_row(&f, lifts.row_vec(k)));
            part_vertices.push(v);
        }
    }
    if parts.is_empty() {
        let cover = Rep::zero_rep(a);
        let map = RepMap::zero(cover.clone(), m.clone());
        return Ok((cover, map));
    }
    let refs: Vec<&Rep> = parts.iter().collect();
    let sum = Rep::direct_sum(&refs)?;
    let words_by_vertex: Vec<Vec<Vec<usize>>> = part_vertices
        .iter()
        .map(|&v| Rep::projective_words(&a, v))
        .collect();
    let mut mats = Vec::new();
    for u in 0..a.quiver().num_vertices() {
        let cols = m.dims()[u];
        let mut blocks = Vec::new();
        for (s, &v) in part_vertices.iter().enumerate() {
            let mut rows = Vec::new();
            for &w in &words_by_vertex[s][u] {
                let act = m.path_action(v, &a.word(w).letters);
                rows.push(part_maps[s].mul(&act).row_vec(0));
            }
            let block = if rows.is_empty() {
                Matrix::zero(&f, 0, cols)
            } else {
                Matrix::from_rows(&f, rows)
            };
            blocks.push(block);
        }
        mats.push(Matrix::vstack_all(&f, cols, &blocks));
    }
    let map = RepMap::new(sum.rep, m.clone(), mats)?;
    assert!(map.is_surjective(), "cover must reach all of the module");
    Ok((map.source().clone(), map))
}

/// First syzygy with its inclusion into the cover.
pub fn syzygy(m: &Rep) -> Result<(Rep, RepMap)> {
    let (_, f) = projective_cover(m)?;
    Ok(f.kernel())
}

pub fn is_projective(m: &Rep) -> Result<bool> {
    let (cover, _) = projective_cover(m)?;
    Ok(cover.total_dim() == m.total_dim())
}

/// Whether pd M <= k, decided by iterated syzygies.
pub fn proj_dim_at_most(m: &Rep, k: usize) -> Result<bool> {
    let mut cur = m.clone();
    for _ in 0..k {
        if is_projective(&cur)? {
            return Ok(true);
        }
        cur = syzygy(&cur)?.0;
    }
    is_projective(&cur)
}

/// Structural check that `op` is the arrow-reversed partner of `a`.
fn check_opposite_pair(a: &Algebra, op: &Algebra) -> Result<()> {
    let qa = a.quiver();
    let qb = op.quiver();
    let swapped = a.field() == op.field()
        && a.dim() == op.dim()
        && qa.num_vertices() == qb.num_vertices()
        && qa.arrows().len() == qb.arrows().len()
        && qa.arrows().iter().zip(qb.arrows()).all(|(x, y)| {
            x.name == y.name && x.source == y.target && x.target == y.source
        });
    if swapped {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// Linear dual as a module over the opposite algebra: same vertex spaces,
/// transposed arrow actions.
pub fn linear_dual(m: &Rep, op: &Arc<Algebra>) -> Result<Rep> {
    check_opposite_pair(m.algebra(), op)?;
    let mats: Vec<Matrix> = (0..m.algebra().quiver().arrows().len())
        .map(|a| m.arrow_matrix(a).transpose())
        .collect();
    Rep::new(op.clone(), m.dims().to_vec(), mats)
}

/// D applied to a map reverses its direction; `dn` and `dm` must be the
/// linear duals of the target and source.
pub fn linear_dual_map(f: &RepMap, dn: &Rep, dm: &Rep) -> Result<RepMap> {
    let mats: Vec<Matrix> = (0..dn.dims().len()).map(|v| f.matrix(v).transpose()).collect();
    RepMap::new(dn.clone(), dm.clone(), mats)
}

/// Indecomposable injective I(v) = D of the opposite projective at v.
pub fn injective_rep(a: &Arc<Algebra>, op: &Arc<Algebra>, v: usize) -> Result<Rep> {
    let p = Rep::projective(op.clone(), v)?;
    linear_dual(&p, a)
}

/// Injective envelope with its embedding, via the cover of the dual.
pub fn injective_envelope(m: &Rep, op: &Arc<Algebra>) -> Result<(Rep, RepMap)> {
    let d = linear_dual(m, op)?;
    let (cover, pi) = projective_cover(&d)?;
    let env = linear_dual(&cover, m.algebra())?;
    let embed = linear_dual_map(&pi, m, &env)?;
    assert!(embed.is_injective(), "envelope embedding");
    Ok((env, embed))
}

/// dim Ext^1(M, N) from the cover presentation: maps out of the syzygy
/// modulo restrictions of maps out of the cover.
pub fn ext1(m: &Rep, n: &Rep) -> Result<usize> {
    let (cover, f) = projective_cover(m)?;
    let (omega, incl) = f.kernel();
    if omega.is_zero() {
        return Ok(0);
    }
    let target_dim = hom_basis(&omega, n)?.len();
    let restricted: Vec<Vec<_>> = hom_basis(&cover, n)?
        .iter()
        .map(|g| incl.then(g).flatten())
        .collect();
    let rank = if restricted.is_empty() {
        0
    } else {
        Matrix::from_rows(m.field(), restricted).rank()
    };
    Ok(target_dim - rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Relation, DEFAULT_NILPOTENCY};
    use crate::endo::is_iso;
    use crate::field::Field;
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

    fn cyclic_quotient(p: &Rep, vertex: usize, local: usize) -> Rep {
        let (_, incl) = p.sub_rep(&[p.unit_vector(vertex, local)]).unwrap();
        p.quotient_by(&incl).unwrap().0
    }

    #[test]
    fn cover_of_simple_is_projective_at_vertex() {
        let a = sample(Field::prime(101).unwrap());
        let s1 = Rep::simple(a.clone(), 0).unwrap();
        let (cover, map) = projective_cover(&s1).unwrap();
        assert_eq!(cover.dims(), &[2, 1]);
        assert!(map.is_surjective());
        let (omega, _) = syzygy(&s1).unwrap();
        assert_eq!(omega.dims(), &[1, 1]);
        let p1 = Rep::projective(a, 0).unwrap();
        let (rad, _) = p1.radical_rep();
        assert!(is_iso(&omega, &rad).unwrap());
    }

    #[test]
    fn projectivity_detection() {
        let a = sample(Field::prime(101).unwrap());
        let p1 = Rep::projective(a.clone(), 0).unwrap();
        let p2 = Rep::projective(a.clone(), 1).unwrap();
        let reg = Rep::regular(a.clone());
        assert!(is_projective(&p1).unwrap());
        assert!(is_projective(&p2).unwrap());
        assert!(is_projective(&reg).unwrap());
        assert!(is_projective(&Rep::zero_rep(a.clone())).unwrap());
        assert!(!is_projective(&Rep::simple(a.clone(), 0).unwrap()).unwrap());
        let (rad, _) = reg.radical_rep();
        assert!(!is_projective(&rad).unwrap());
        assert!(proj_dim_at_most(&p1, 0).unwrap());
        assert!(!proj_dim_at_most(&Rep::simple(a, 0).unwrap(), 4).unwrap());
    }

    #[test]
    fn duals_transpose_and_double_dual_is_identity() {
        let a = sample(Field::prime(101).unwrap());
        let op = Arc::new(a.opposite());
        let p2 = Rep::projective(a.clone(), 1).unwrap();
        let d = linear_dual(&p2, &op).unwrap();
        assert_eq!(d.dims(), p2.dims());
        let dd = linear_dual(&d, &a).unwrap();
        assert_eq!(dd, p2);
        assert_eq!(linear_dual(&p2, &a).unwrap_err(), Error::AlgebraMismatch);
    }

    #[test]
    fn injectives_dualize_opposite_projectives() {
        let a = sample(Field::prime(101).unwrap());
        let op = Arc::new(a.opposite());
        let i1 = injective_rep(&a, &op, 0).unwrap();
        let i2 = injective_rep(&a, &op, 1).unwrap();
        assert_eq!(i1.dims(), &[2, 3]);
        assert_eq!(i2.dims(), &[1, 2]);
        let (soc1, _) = i1.socle_rep();
        assert_eq!(soc1.dims(), &[1, 0]);
        let (soc2, _) = i2.socle_rep();
        assert_eq!(soc2.dims(), &[0, 1]);
    }

    #[test]
    fn envelope_of_regular_has_dimension_sixteen() {
        let a = sample(Field::prime(101).unwrap());
        let op = Arc::new(a.opposite());
        let reg = Rep::regular(a.clone());
        let (env, embed) = injective_envelope(&reg, &op).unwrap();
        assert_eq!(env.total_dim(), 16);
        assert!(embed.is_injective());
        let s1 = Rep::simple(a, 0).unwrap();
        let (e1, _) = injective_envelope(&s1, &op).unwrap();
        assert_eq!(e1.dims(), &[2, 3]);
    }

    #[test]
    fn ext_between_simples_counts_arrows() {
        let a = sample(Field::prime(101).unwrap());
        let s1 = Rep::simple(a.clone(), 0).unwrap();
        let s2 = Rep::simple(a, 1).unwrap();
        assert_eq!(ext1(&s1, &s1).unwrap(), 1);
        assert_eq!(ext1(&s1, &s2).unwrap(), 1);
        assert_eq!(ext1(&s2, &s1).unwrap(), 2);
        assert_eq!(ext1(&s2, &s2).unwrap(), 0);
    }

    #[test]
    fn ext_vanishes_on_projectives_and_detects_the_split_failure() {
        let a = sample(Field::prime(101).unwrap());
        let p2 = Rep::projective(a.clone(), 1).unwrap();
        let reg = Rep::regular(a.clone());
        assert_eq!(ext1(&p2, &reg).unwrap(), 0);
        let comps = Rep::projective_words(&a, 1);
        let x_local = comps[0]
            .iter()
            .position(|&w| a.label(w) == "x")
            .expect("x generates a length two submodule");
        let quot = cyclic_quotient(&p2, 0, x_local);
        assert_eq!(quot.dims(), &[2, 1]);
        assert_eq!(ext1(&quot, &p2).unwrap(), 1);
    }
}
