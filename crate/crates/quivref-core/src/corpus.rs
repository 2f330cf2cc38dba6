//! Built-in example algebras: the two-loop family with its tail, bound and
//! plain line quivers, Nakayama cycles, local algebras, and semisimples.
//! Every builder is field parameterized so the same presentation can be
//! realized over the rationals or any prime field.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Relation, DEFAULT_NILPOTENCY};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::quiver::{Arrow, Quiver};

fn arrow(name: &str, source: usize, target: usize) -> Arrow {
    Arrow {
        name: String::from(name),
        source,
        target,
    }
}

/// Two loops on the first vertex's neighborhood and a tail of `n - 2`
/// intermediate vertices: arrows b: 1 -> 2, c: 1 -> 1, x, y: n -> 1 and
/// a_i: i -> i+1, bound so that exactly the words bx and cy survive in
/// degree two. The algebra has dimension 2n + 4. Defined for n >= 2; the
/// case n = 2 has no tail and x, y run from vertex 2.
pub fn a_family(n: usize, field: Field) -> Result<Arc<Algebra>> {
    if n < 2 {
        return Err(Error::FamilyIndexOutOfRange {
            index: n,
            minimum: 2,
        });
    }
    // Arrow indices: b = 0, c = 1, x = 2, y = 3, then a_2 .. a_{n-1}.
    let mut arrows = vec![
        arrow("b", 0, 1),
        arrow("c", 0, 0),
        arrow("x", n - 1, 0),
        arrow("y", n - 1, 0),
    ];
    for i in 2..n {
        arrows.push(arrow(&format!("a{}", i), i - 1, i));
    }
    let q = Quiver::new(n, arrows)?;

    let mut relations = vec![
        Relation::path(vec![2, 1]),
        Relation::path(vec![3, 0]),
        Relation::path(vec![1, 1]),
        Relation::path(vec![1, 0]),
    ];
    if n == 2 {
        relations.push(Relation::path(vec![0, 2]));
        relations.push(Relation::path(vec![0, 3]));
    } else {
        let a_idx = |i: usize| 4 + (i - 2);
        relations.push(Relation::path(vec![0, a_idx(2)]));
        for i in 2..n - 1 {
            relations.push(Relation::path(vec![a_idx(i), a_idx(i + 1)]));
        }
        relations.push(Relation::path(vec![a_idx(n - 1), 2]));
        relations.push(Relation::path(vec![a_idx(n - 1), 3]));
    }
    Ok(Arc::new(Algebra::new(field, q, relations, DEFAULT_NILPOTENCY)?))
}

/// Line on three vertices 3 -> 2 -> 1 with the composite bound to zero.
pub fn bound_line_3(field: Field) -> Arc<Algebra> {
    let q = Quiver::new(3, vec![arrow("b", 1, 0), arrow("a", 2, 1)]).unwrap();
    let relations = vec![Relation::path(vec![1, 0])];
    Arc::new(Algebra::new(field, q, relations, DEFAULT_NILPOTENCY).unwrap())
}

/// Cyclic Nakayama algebra on `n` vertices with radical square zero: one
/// arrow i -> i+1 (mod n), all length-two composites bound to zero.
pub fn nakayama_cycle(n: usize, field: Field) -> Result<Arc<Algebra>> {
    if n < 2 {
        return Err(Error::FamilyIndexOutOfRange {
            index: n,
            minimum: 2,
        });
    }
    let arrows: Vec<Arrow> = (0..n)
        .map(|i| arrow(&format!("a{}", i + 1), i, (i + 1) % n))
        .collect();
    let q = Quiver::new(n, arrows)?;
    let relations: Vec<Relation> = (0..n)
        .map(|i| Relation::path(vec![i, (i + 1) % n]))
        .collect();
    Ok(Arc::new(Algebra::new(field, q, relations, DEFAULT_NILPOTENCY)?))
}

/// Truncated polynomial algebra k[x]/(x^power) as a one-loop quiver.
pub fn local_power(power: usize, field: Field) -> Result<Arc<Algebra>> {
    if power < 2 {
        return Err(Error::FamilyIndexOutOfRange {
            index: power,
            minimum: 2,
        });
    }
    let q = Quiver::new(1, vec![arrow("x", 0, 0)])?;
    let relations = vec![Relation::path(vec![0; power])];
    Ok(Arc::new(Algebra::new(field, q, relations, DEFAULT_NILPOTENCY)?))
}

/// Local algebra with two loops and every length-two word zero.
pub fn local_two_loops(field: Field) -> Arc<Algebra> {
    let q = Quiver::new(1, vec![arrow("x", 0, 0), arrow("y", 0, 0)]).unwrap();
    let relations = vec![
        Relation::path(vec![0, 0]),
        Relation::path(vec![1, 1]),
        Relation::path(vec![0, 1]),
        Relation::path(vec![1, 0]),
    ];
    Arc::new(Algebra::new(field, q, relations, DEFAULT_NILPOTENCY).unwrap())
}

/// Commutative local algebra k[x, y]/(x^2, y^2): dimension four, with the
/// commutator as a genuine two-term relation.
pub fn local_commutative(field: Field) -> Arc<Algebra> {
    let q = Quiver::new(1, vec![arrow("x", 0, 0), arrow("y", 0, 0)]).unwrap();
    let relations = vec![
        Relation::path(vec![0, 0]),
        Relation::path(vec![1, 1]),
        Relation {
            terms: vec![(1, vec![1, 0]), (-1, vec![0, 1])],
        },
    ];
    Arc::new(Algebra::new(field, q, relations, DEFAULT_NILPOTENCY).unwrap())
}

/// Path algebra of the line n -> ... -> 2 -> 1 with no relations.
pub fn line_quiver(n: usize, field: Field) -> Result<Arc<Algebra>> {
    if n < 1 {
        return Err(Error::FamilyIndexOutOfRange {
            index: n,
            minimum: 1,
        });
    }
    let arrows: Vec<Arrow> = (1..n)
        .map(|i| arrow(&format!("a{}", i), i, i - 1))
        .collect();
    let q = Quiver::new(n, arrows)?;
    Ok(Arc::new(Algebra::new(field, q, vec![], DEFAULT_NILPOTENCY)?))
}

/// Product of `n` copies of the ground field: no arrows at all.
pub fn semisimple(n: usize, field: Field) -> Result<Arc<Algebra>> {
    if n < 1 {
        return Err(Error::FamilyIndexOutOfRange {
            index: n,
            minimum: 1,
        });
    }
    let q = Quiver::new(n, vec![])?;
    Ok(Arc::new(Algebra::new(field, q, vec![], DEFAULT_NILPOTENCY)?))
}

/// The full example registry: every algebra the suite batteries run over.
pub fn corpus(field: &Field) -> Vec<(String, Arc<Algebra>)> {
    let f = |s: &str| String::from(s);
    vec![
        (f("a2"), a_family(2, field.clone()).unwrap()),
        (f("a3"), a_family(3, field.clone()).unwrap()),
        (f("a4"), a_family(4, field.clone()).unwrap()),
        (f("bound_line_3"), bound_line_3(field.clone())),
        (
            f("nakayama_cycle_2_rad2"),
            nakayama_cycle(2, field.clone()).unwrap(),
        ),
        (
            f("nakayama_cycle_3_rad2"),
            nakayama_cycle(3, field.clone()).unwrap(),
        ),
        (f("local_x2"), local_power(2, field.clone()).unwrap()),
        (f("local_x3"), local_power(3, field.clone()).unwrap()),
        (f("local_x4"), local_power(4, field.clone()).unwrap()),
        (f("local_xy"), local_two_loops(field.clone())),
        (f("local_commutative_x2y2"), local_commutative(field.clone())),
        (f("line_2"), line_quiver(2, field.clone()).unwrap()),
        (f("line_3"), line_quiver(3, field.clone()).unwrap()),
        (f("semisimple_1"), semisimple(1, field.clone()).unwrap()),
        (f("semisimple_2"), semisimple(2, field.clone()).unwrap()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::Rep;

    #[test]
    fn family_dimensions_and_socles() {
        let field = Field::prime(101).unwrap();
        for n in 2..=5 {
            let a = a_family(n, field.clone()).unwrap();
            assert_eq!(a.dim(), 2 * n + 4);
            let reg = Rep::regular(a.clone());
            let (soc, _) = reg.socle_rep();
            let mut expected = vec![1usize; n];
            expected[0] = 2;
            expected[1] = 2;
            assert_eq!(soc.dims(), expected.as_slice());
        }
        assert!(matches!(
            a_family(1, field),
            Err(Error::FamilyIndexOutOfRange { .. })
        ));
    }

    #[test]
    fn family_projectives_have_the_expected_sizes() {
        let field = Field::rationals();
        let a = a_family(4, field).unwrap();
        let totals: Vec<usize> = (0..4)
            .map(|v| Rep::projective(a.clone(), v).unwrap().total_dim())
            .collect();
        assert_eq!(totals, vec![3, 2, 2, 5]);
        let op = Arc::new(a.opposite());
        let op_totals: Vec<usize> = (0..4)
            .map(|v| Rep::projective(op.clone(), v).unwrap().total_dim())
            .collect();
        assert_eq!(op_totals, vec![5, 3, 2, 2]);
    }

    #[test]
    fn fixed_members_have_their_known_dimensions() {
        let field = Field::prime(101).unwrap();
        assert_eq!(bound_line_3(field.clone()).dim(), 5);
        assert_eq!(nakayama_cycle(2, field.clone()).unwrap().dim(), 4);
        assert_eq!(nakayama_cycle(3, field.clone()).unwrap().dim(), 6);
        assert_eq!(local_power(2, field.clone()).unwrap().dim(), 2);
        assert_eq!(local_power(4, field.clone()).unwrap().dim(), 4);
        assert_eq!(local_two_loops(field.clone()).dim(), 3);
        assert_eq!(local_commutative(field.clone()).dim(), 4);
        assert_eq!(line_quiver(3, field.clone()).unwrap().dim(), 6);
        assert_eq!(semisimple(2, field).unwrap().dim(), 2);
    }

    #[test]
    fn the_commutative_member_really_commutes() {
        let a = local_commutative(Field::rationals());
        let x = a.arrow_basis_index(0);
        let y = a.arrow_basis_index(1);
        assert_eq!(a.mul_basis(x, y), a.mul_basis(y, x));
        assert!(!a.mul_basis(x, y).is_empty());
    }

    #[test]
    fn registry_is_complete_and_rebuildable_over_small_fields() {
        let field = Field::prime(101).unwrap();
        let entries = corpus(&field);
        assert_eq!(entries.len(), 15);
        let mut names: Vec<&str> = entries.iter().map(|(n, _)| n.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), 15);
        for (_, a) in &entries {
            let twin = a.over_field(Field::prime(2).unwrap()).unwrap();
            assert_eq!(twin.dim(), a.dim());
        }
    }
}
