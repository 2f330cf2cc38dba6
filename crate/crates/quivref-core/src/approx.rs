//! Minimal left approximations by projectives, the cokernel operator built
//! on them, and the walk graph it generates.
//!
//! The approximation of M collects one projective summand per generator of
//! the top of M*, with the map given by those generators. Minimality is
//! certified after the fact: every endomorphism of the sum that kills the
//! map must lie in the radical of the endomorphism algebra.

use crate::algebra::Algebra;
use crate::dual::{a_dual, is_reflexive, is_torsionless};
use crate::endo::{combine, end_algebra, is_indecomposable, is_iso};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rep::{Rep, RepMap};
use crate::resolution::is_projective;
use crate::space::RowSpace;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{sync::Arc, vec};

/// Budget for enumerating the kill ideal over a small field.
const KILL_IDEAL_BUDGET: u64 = 1 << 20;

pub const DEFAULT_MHO_STEPS: usize = 10;

/// Minimal left approximation M -> X with X a sum of projectives.
pub struct Approximation {
    pub target: Rep,
    pub map: RepMap,
    /// Vertices of the projective summands, in selection order.
    pub summands: Vec<usize>,
}

/// Certify that every endomorphism of X killing the map lies in rad End(X).
fn certify_minimal(f: &RepMap, x: &Rep) -> Result<()> {
    let fld = x.field().clone();
    let end = end_algebra(x)?;
    if end.basis.is_empty() {
        return Ok(());
    }
    let rows: Vec<Vec<_>> =
        end.basis.iter().map(|e| f.then(e).flatten()).collect();
    let kill = Matrix::from_rows(&fld, rows).kernel_rows();
    if kill.rows() == 0 {
        return Ok(());
    }
    if let Some(rad) = &end.radical {
        for k in 0..kill.rows() {
            assert!(rad.contains(&kill.row_vec(k)), "approximation not minimal");
        }
        return Ok(());
    }
    let q = fld.size().expect("no radical certificate only over finite fields");
    let mut total: u64 = 1;
    for _ in 0..kill.rows() {
        total = total.saturating_mul(q);
        if total > KILL_IDEAL_BUDGET {
            return Err(Error::BudgetExceeded {
                budget: KILL_IDEAL_BUDGET,
                needed: total,
                context: "kill ideal enumeration",
            });
        }
    }
    let kill_space = RowSpace::from_matrix(&kill);
    let basis_mat = kill_space.basis_matrix();
    let elements = fld.elements()?;
    let dim = x.total_dim();
    let mut counters = vec![0usize; basis_mat.rows()];
    loop {
        let coeffs: Vec<_> =
            counters.iter().map(|&i| elements[i].clone()).collect();
        let coords = Matrix::from_row(&fld, coeffs).mul(&basis_mat).row_vec(0);
        let w = combine(&end.basis, &coords);
        let shifted = RepMap::identity(x).add(&w);
        assert_eq!(shifted.rank(), dim, "approximation not minimal");
        let mut k = 0;
        loop {
            if k == counters.len() {
                return Ok(());
            }
            counters[k] += 1;
            if counters[k] < elements.len() {
                break;
            }
            counters[k] = 0;
            k += 1;
        }
    }
}

pub fn minimal_left_approx(m: &Rep, op: &Arc<Algebra>) -> Result<Approximation> {
    let a = m.algebra().clone();
    let fld = m.field().clone();
    let dual = a_dual(m, op)?;
    let (rad, rad_incl) = dual.rep.radical_rep();
    let mut picks: Vec<(usize, usize)> = Vec::new();
    for v in 0..dual.rep.dims().len() {
        let dim_v = dual.rep.dims()[v];
        if dim_v == 0 {
            continue;
        }
        let mut span = RowSpace::new(&fld, dim_v);
        for r in 0..rad.dims()[v] {
            span.insert(rad_incl.matrix(v).row_vec(r));
        }
        for k in 0..dim_v {
            let mut unit = vec![fld.zero(); dim_v];
            unit[k] = fld.one();
            if span.insert(unit) {
                picks.push((v, k));
            }
        }
    }
    if picks.is_empty() {
        let target = Rep::zero_rep(a);
        let map = RepMap::zero(m.clone(), target.clone());
        return Ok(Approximation { target, map, summands: Vec::new() });
    }
    let parts: Vec<Rep> = picks
        .iter()
        .map(|&(v, _)| Rep::projective(a.clone(), v))
        .collect::<Result<_>>()?;
    let refs: Vec<&Rep> = parts.iter().collect();
    let sum = Rep::direct_sum(&refs)?;
    let mut mats = Vec::new();
    for u in 0..m.dims().len() {
        let mut acc = Matrix::zero(&fld, m.dims()[u], 0);
        for &(v, k) in &picks {
            acc = acc.hstack(dual.bases[v][k].matrix(u));
        }
        mats.push(acc);
    }
    let map = RepMap::new(m.clone(), sum.rep.clone(), mats)?;
    certify_minimal(&map, &sum.rep)?;
    Ok(Approximation {
        target: sum.rep,
        map,
        summands: picks.iter().map(|&(v, _)| v).collect(),
    })
}

/// Cokernel of the minimal left approximation.
pub fn mho(m: &Rep, op: &Arc<Algebra>) -> Result<Rep> {
    Ok(minimal_left_approx(m, op)?.map.cokernel().0)
}

pub struct MhoNode {
    pub label: String,
    pub rep: Rep,
    pub projective: bool,
    pub torsionless: bool,
    pub reflexive: bool,
}

/// Walk graph: an edge (s, t) records that node s is the operator image of
/// node t.
pub struct MhoQuiver {
    pub nodes: Vec<MhoNode>,
    pub edges: Vec<(usize, usize)>,
    pub truncated: bool,
}

fn make_node(label: String, rep: Rep, op: &Arc<Algebra>) -> Result<MhoNode> {
    let projective = is_projective(&rep)?;
    let torsionless = is_torsionless(&rep, op)?;
    let reflexive = is_reflexive(&rep, op)?;
    Ok(MhoNode { label, rep, projective, torsionless, reflexive })
}

fn find_node(nodes: &[MhoNode], rep: &Rep) -> Result<Option<usize>> {
    for (i, n) in nodes.iter().enumerate() {
        if is_iso(&n.rep, rep)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Iterate the operator from each seed until a projective, a module that is
/// not torsionless, a repeat, or the step cap.
pub fn mho_quiver(
    seeds: &[(String, Rep)],
    op: &Arc<Algebra>,
    max_steps: usize,
) -> Result<MhoQuiver> {
    let mut nodes: Vec<MhoNode> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut truncated = false;
    for (label, rep) in seeds {
        if !is_indecomposable(rep)? {
            return Err(Error::ClassMembershipViolated {
                class: "walk seed",
                reason: format!("seed {label} is decomposable"),
            });
        }
        if find_node(&nodes, rep)?.is_some() {
            continue;
        }
        nodes.push(make_node(label.clone(), rep.clone(), op)?);
        let mut idx = nodes.len() - 1;
        let mut steps = 0;
        loop {
            if nodes[idx].projective || !nodes[idx].torsionless {
                break;
            }
            if steps == max_steps {
                truncated = true;
                break;
            }
            let next = mho(&nodes[idx].rep, op)?;
            steps += 1;
            if let Some(j) = find_node(&nodes, &next)? {
                edges.push((j, idx));
                break;
            }
            let label = format!("mho({})", nodes[idx].label);
            nodes.push(make_node(label, next, op)?);
            let new_idx = nodes.len() - 1;
            edges.push((new_idx, idx));
            idx = new_idx;
        }
    }
    Ok(MhoQuiver { nodes, edges, truncated })
}
