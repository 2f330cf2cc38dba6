//! Self-injectivity battery, Kasch/QF predicates, exhaustive censuses over
//! small fields, and the scan reports for simple duals and the
//! contrapositive statements about torsionless simples.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::dual::{a_dual, coker_phi, is_reflexive, is_torsionless};
use crate::endo::{decompose, is_brick, is_indecomposable, is_iso, is_iso_by_summands, SplitOrder};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::quiver::Arrow;
use crate::rep::{hom_basis, Rep, RepMap};
use crate::resolution::{injective_envelope, is_projective, linear_dual};
use crate::space::RowSpace;

/// Default coefficient-tuple budget for the enumeration engines.
pub const ENUM_BUDGET_DEFAULT: u64 = 1 << 20;
/// Default total-dimension cap for a standalone submodule lattice.
pub const LATTICE_CAP_DEFAULT: usize = 10;
/// Lattice cap used by the census cross-check.
pub const CENSUS_LATTICE_CAP: usize = 12;

/// One flag per condition in the self-injectivity battery, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Conditions {
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
    pub iv: bool,
    pub v: bool,
    pub v_prime: bool,
    pub vi: bool,
    pub vi_prime: bool,
    pub vii: bool,
    pub viii: bool,
    pub ix: bool,
    pub x: bool,
}

impl Conditions {
    pub fn entries(&self) -> [(&'static str, bool); 12] {
        [
            ("i", self.i),
            ("ii", self.ii),
            ("iii", self.iii),
            ("iv", self.iv),
            ("v", self.v),
            ("v'", self.v_prime),
            ("vi", self.vi),
            ("vi'", self.vi_prime),
            ("vii", self.vii),
            ("viii", self.viii),
            ("ix", self.ix),
            ("x", self.x),
        ]
    }
}

/// Diagnostic data accompanying a battery verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatteryWitnesses {
    /// First vertex whose projective has a non-simple socle, if any.
    pub non_simple_socle: Option<usize>,
    /// First vertex whose simple has a dual of dimension above one, if any.
    pub oversized_dual: Option<usize>,
    /// Multiplicity of each simple in the socle of the regular module.
    pub socle_multiplicities: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfInjectivityReport {
    pub self_injective: bool,
    pub conditions: Conditions,
    pub witnesses: BatteryWitnesses,
}

fn require_basic(a: &Arc<Algebra>) -> Result<()> {
    let nv = a.quiver().num_vertices();
    for v in 0..nv {
        let p = Rep::projective(a.clone(), v)?;
        let (top, _) = p.top_rep();
        let expected: Vec<usize> = (0..nv).map(|u| usize::from(u == v)).collect();
        if top.dims() != expected.as_slice() {
            return Err(Error::NonBasicAlgebra);
        }
    }
    Ok(())
}

/// Evaluates every condition in the battery independently and checks that
/// they agree before returning the common verdict.
pub fn self_injectivity_report(
    a: &Arc<Algebra>,
    op: &Arc<Algebra>,
) -> Result<SelfInjectivityReport> {
    require_basic(a)?;
    let nv = a.quiver().num_vertices();
    let reg = Rep::regular(a.clone());
    let (soc_reg, _) = reg.socle_rep();
    let socle_multiplicities = soc_reg.dims().to_vec();

    let mut socle_simple = vec![false; nv];
    let mut socle_vertex = vec![0usize; nv];
    for v in 0..nv {
        let p = Rep::projective(a.clone(), v)?;
        let (soc, _) = p.socle_rep();
        socle_simple[v] = soc.total_dim() == 1;
        if let Some(u) = soc.dims().iter().position(|&d| d > 0) {
            socle_vertex[v] = u;
        }
    }

    // Left dual dimensions, cross-checked against the socle multiplicities.
    let mut dual_total = vec![0usize; nv];
    let mut dual_support: Vec<Option<usize>> = vec![None; nv];
    for v in 0..nv {
        let s = Rep::simple(a.clone(), v)?;
        let d = a_dual(&s, op)?;
        dual_total[v] = d.rep.total_dim();
        assert_eq!(
            dual_total[v], socle_multiplicities[v],
            "dual dimension must match the socle multiplicity"
        );
        if dual_total[v] == 1 {
            dual_support[v] = d.rep.dims().iter().position(|&k| k > 0);
        }
    }

    // Right-side duals via the opposite algebra.
    let reg_op = Rep::regular(op.clone());
    let (soc_reg_op, _) = reg_op.socle_rep();
    let mut op_dual_total = vec![0usize; nv];
    for v in 0..nv {
        let s = Rep::simple(op.clone(), v)?;
        let d = a_dual(&s, a)?;
        op_dual_total[v] = d.rep.total_dim();
        assert_eq!(
            op_dual_total[v],
            soc_reg_op.dims()[v],
            "right dual dimension must match the right socle multiplicity"
        );
    }

    let all_socles_simple = socle_simple.iter().all(|&b| b);
    let socles_cover = {
        let mut seen = vec![false; nv];
        for v in 0..nv {
            if socle_simple[v] {
                seen[socle_vertex[v]] = true;
            }
        }
        seen.iter().all(|&b| b)
    };
    let duals_simple = dual_total.iter().all(|&d| d == 1);
    let supports_distinct = {
        let mut seen = vec![false; nv];
        let mut ok = true;
        for v in 0..nv {
            match dual_support[v] {
                Some(u) if !seen[u] => seen[u] = true,
                _ => ok = false,
            }
        }
        ok
    };

    let (env, _) = injective_envelope(&reg, op)?;
    let right_dual = linear_dual(&reg_op, a)?;
    let ix = is_iso_by_summands(&env, &right_dual)?;
    let viii = env.total_dim() == a.dim() && ix;

    let mut kasch = true;
    for v in 0..nv {
        let s = Rep::simple(a.clone(), v)?;
        if hom_basis(&s, &reg)?.is_empty() {
            kasch = false;
        }
    }

    let conditions = Conditions {
        i: ix,
        ii: all_socles_simple && socles_cover,
        iii: duals_simple && supports_distinct,
        iv: socle_multiplicities == vec![1; nv],
        v: duals_simple,
        v_prime: op_dual_total.iter().all(|&d| d == 1),
        vi: dual_total.iter().all(|&d| d <= 1),
        vi_prime: op_dual_total.iter().all(|&d| d <= 1),
        vii: socle_multiplicities.iter().all(|&d| d <= 1),
        viii,
        ix,
        x: kasch && all_socles_simple,
    };

    let entries = conditions.entries();
    let verdict = entries[0].1;
    for (name, value) in entries.iter() {
        if *value != verdict {
            return Err(Error::UnanimityViolation {
                first: entries[0].0,
                second: name,
            });
        }
    }

    let witnesses = BatteryWitnesses {
        non_simple_socle: socle_simple.iter().position(|&b| !b),
        oversized_dual: dual_total.iter().position(|&d| d > 1),
        socle_multiplicities,
    };
    Ok(SelfInjectivityReport {
        self_injective: verdict,
        conditions,
        witnesses,
    })
}

/// Every simple embeds into the regular module.
pub fn is_kasch(a: &Arc<Algebra>) -> Result<bool> {
    let reg = Rep::regular(a.clone());
    for v in 0..a.quiver().num_vertices() {
        let s = Rep::simple(a.clone(), v)?;
        if hom_basis(&s, &reg)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every indecomposable projective has a simple socle.
pub fn is_qf2(a: &Arc<Algebra>) -> Result<bool> {
    for v in 0..a.quiver().num_vertices() {
        let p = Rep::projective(a.clone(), v)?;
        let (soc, _) = p.socle_rep();
        if soc.total_dim() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The injective envelope of the regular module is projective.
pub fn is_qf3(a: &Arc<Algebra>, op: &Arc<Algebra>) -> Result<bool> {
    let reg = Rep::regular(a.clone());
    let (env, _) = injective_envelope(&reg, op)?;
    is_projective(&env)
}

fn small_field_elements(f: &Field) -> Result<Vec<Scalar>> {
    match f.size() {
        Some(q) if q <= 3 => f.elements(),
        Some(q) => Err(Error::EnumerationFieldTooLarge { size: q }),
        None => Err(Error::EnumerationFieldTooLarge { size: 0 }),
    }
}

fn sub_key(m: &Rep, incl: &RepMap) -> String {
    let mut parts: Vec<String> = Vec::new();
    for v in 0..m.dims().len() {
        parts.push(RowSpace::from_matrix(incl.matrix(v)).canonical_key());
    }
    parts.join("|")
}

fn inclusion_rows(m: &Rep, incl: &RepMap) -> Vec<Vec<Scalar>> {
    let f = m.field().clone();
    let offsets = m.offsets();
    let total = m.total_dim();
    let mut out = Vec::new();
    for v in 0..m.dims().len() {
        let mat = incl.matrix(v);
        for r in 0..mat.rows() {
            let mut row = vec![f.zero(); total];
            for c in 0..m.dims()[v] {
                row[offsets[v] + c] = mat.get(r, c).clone();
            }
            out.push(row);
        }
    }
    out
}

/// All submodules of `m`, enumerated over a field of size at most three:
/// cyclic closures of every coordinate vector, then closure under pairwise
/// sums. The result is sorted by (dimension, canonical key).
pub fn submodule_lattice(m: &Rep, cap: usize) -> Result<Vec<Rep>> {
    submodule_lattice_ordered(m, cap, false)
}

/// Same lattice swept from a reversed scalar list; the outcome must not
/// depend on the sweep order.
pub fn submodule_lattice_ordered(m: &Rep, cap: usize, reversed: bool) -> Result<Vec<Rep>> {
    let f = m.field().clone();
    let mut elements = small_field_elements(&f)?;
    if reversed {
        elements.reverse();
    }
    let dim = m.total_dim();
    if dim > cap {
        return Err(Error::BudgetExceeded {
            budget: cap as u64,
            needed: dim as u64,
            context: "submodule lattice",
        });
    }

    let mut keys: Vec<String> = Vec::new();
    let mut subs: Vec<(Rep, Vec<Vec<Scalar>>)> = Vec::new();
    let (zero_sub, zero_incl) = m.sub_rep(&[])?;
    keys.push(sub_key(m, &zero_incl));
    subs.push((zero_sub, Vec::new()));

    let mut counters = vec![0usize; dim];
    'vectors: loop {
        let vector: Vec<Scalar> = counters.iter().map(|&c| elements[c].clone()).collect();
        if vector.iter().any(|s| *s != f.zero()) {
            let (sub, incl) = m.sub_rep(&[vector])?;
            let key = sub_key(m, &incl);
            if !keys.contains(&key) {
                keys.push(key);
                let rows = inclusion_rows(m, &incl);
                subs.push((sub, rows));
            }
        }
        let mut pos = 0;
        loop {
            if pos == dim {
                break 'vectors;
            }
            counters[pos] += 1;
            if counters[pos] < elements.len() {
                break;
            }
            counters[pos] = 0;
            pos += 1;
        }
    }

    let mut i = 1;
    while i < subs.len() {
        for j in 0..i {
            let mut gens = subs[i].1.clone();
            gens.extend_from_slice(&subs[j].1);
            let (sub, incl) = m.sub_rep(&gens)?;
            let key = sub_key(m, &incl);
            if !keys.contains(&key) {
                keys.push(key);
                let rows = inclusion_rows(m, &incl);
                subs.push((sub, rows));
            }
        }
        i += 1;
    }

    let mut order: Vec<usize> = (0..subs.len()).collect();
    order.sort_by(|&x, &y| {
        (subs[x].0.total_dim(), &keys[x]).cmp(&(subs[y].0.total_dim(), &keys[y]))
    });
    Ok(order.into_iter().map(|k| subs[k].0.clone()).collect())
}

fn enumerate_at_dims(
    a: &Arc<Algebra>,
    arrows: &[Arrow],
    forced: &[bool],
    ideal_rows: &[Vec<Scalar>],
    dims: &[usize],
    elements: &[Scalar],
    budget: u64,
    kept: &mut Vec<Rep>,
) -> Result<()> {
    let f = a.field().clone();
    let q = elements.len() as u64;
    let mut slots: Vec<(usize, usize, usize)> = Vec::new();
    for (k, arr) in arrows.iter().enumerate() {
        if forced[k] {
            continue;
        }
        for r in 0..dims[arr.source] {
            for c in 0..dims[arr.target] {
                slots.push((k, r, c));
            }
        }
    }
    let mut needed: u64 = 1;
    for _ in 0..slots.len() {
        needed = needed.saturating_mul(q);
        if needed > budget {
            return Err(Error::BudgetExceeded {
                budget,
                needed,
                context: "indecomposable enumeration",
            });
        }
    }

    let mut counters = vec![0usize; slots.len()];
    loop {
        let mut mats: Vec<Matrix> = arrows
            .iter()
            .map(|arr| Matrix::zero(&f, dims[arr.source], dims[arr.target]))
            .collect();
        for (s, &(k, r, c)) in slots.iter().enumerate() {
            mats[k].set(r, c, elements[counters[s]].clone());
        }
        if let Ok(rep) = Rep::new(a.clone(), dims.to_vec(), mats) {
            if ideal_rows.iter().all(|row| rep.annihilated_by(row)) && is_indecomposable(&rep)? {
                let mut fresh = true;
                for old in kept.iter() {
                    if is_iso(old, &rep)? {
                        fresh = false;
                        break;
                    }
                }
                if fresh {
                    kept.push(rep);
                }
            }
        }
        let mut pos = 0;
        loop {
            if pos == slots.len() {
                return Ok(());
            }
            counters[pos] += 1;
            if counters[pos] < elements.len() {
                break;
            }
            counters[pos] = 0;
            pos += 1;
        }
    }
}

fn annihilated_enumeration(
    a: &Arc<Algebra>,
    ideal: Option<&RowSpace>,
    cap: &[usize],
    budget: u64,
) -> Result<Vec<Rep>> {
    let f = a.field().clone();
    let elements = small_field_elements(&f)?;
    let nv = a.quiver().num_vertices();
    assert_eq!(cap.len(), nv, "per-vertex cap required");
    let arrows = a.quiver().arrows().to_vec();
    let forced: Vec<bool> = (0..arrows.len())
        .map(|k| match ideal {
            Some(id) => {
                let mut unit = vec![f.zero(); a.dim()];
                unit[a.arrow_basis_index(k)] = f.one();
                id.contains(&unit)
            }
            None => false,
        })
        .collect();
    let ideal_rows: Vec<Vec<Scalar>> = match ideal {
        Some(id) => {
            let bm = id.basis_matrix();
            (0..id.dim()).map(|r| bm.row_vec(r)).collect()
        }
        None => Vec::new(),
    };

    let mut kept: Vec<Rep> = Vec::new();
    let mut dims = vec![0usize; nv];
    loop {
        if dims.iter().any(|&d| d > 0) {
            enumerate_at_dims(
                a, &arrows, &forced, &ideal_rows, &dims, &elements, budget, &mut kept,
            )?;
        }
        let mut pos = 0;
        loop {
            if pos == nv {
                return Ok(kept);
            }
            dims[pos] += 1;
            if dims[pos] <= cap[pos] {
                break;
            }
            dims[pos] = 0;
            pos += 1;
        }
    }
}

/// All indecomposable representations with per-vertex dimensions at most
/// `cap`, up to isomorphism; field size at most three.
pub fn enumerate_indecomposables(a: &Arc<Algebra>, cap: &[usize], budget: u64) -> Result<Vec<Rep>> {
    annihilated_enumeration(a, None, cap, budget)
}

/// `m` embeds into a finite product of copies of `cog`: the joint kernel of
/// all homomorphisms into `cog` is zero.
pub fn cogenerated_by(m: &Rep, cog: &Rep) -> Result<bool> {
    let maps = hom_basis(m, cog)?;
    for v in 0..m.dims().len() {
        if m.dims()[v] == 0 {
            continue;
        }
        let mut acc = Matrix::zero(m.field(), m.dims()[v], 0);
        for g in &maps {
            acc = acc.hstack(g.matrix(v));
        }
        if acc.kernel_rows().rows() > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone)]
pub struct CensusConfig {
    pub enum_budget: u64,
    pub lattice_cap: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            enum_budget: ENUM_BUDGET_DEFAULT,
            lattice_cap: CENSUS_LATTICE_CAP,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CensusMember {
    pub rep: Rep,
    pub projective: bool,
    pub torsionless: bool,
    pub reflexive: bool,
    /// Set when the primary-field re-validation failed and the entry is
    /// certified over F_2 only.
    pub f2_only: bool,
}

#[derive(Debug, Clone)]
pub struct CensusResult {
    pub members: Vec<CensusMember>,
    /// True when the submodule-lattice cross-check ran and agreed.
    pub cross_checked: bool,
}

fn transport_rep(m2: &Rep, a: &Arc<Algebra>) -> Result<Rep> {
    let f = a.field().clone();
    let arrows = a.quiver().arrows();
    let mut mats = Vec::new();
    for k in 0..arrows.len() {
        let src = m2.arrow_matrix(k);
        let mut mat = Matrix::zero(&f, src.rows(), src.cols());
        for r in 0..src.rows() {
            for c in 0..src.cols() {
                let value = src.get(r, c).as_i64().expect("small prime scalar");
                mat.set(r, c, f.from_i64(value));
            }
        }
        mats.push(mat);
    }
    Rep::new(a.clone(), m2.dims().to_vec(), mats)
}

/// Classifies the indecomposable torsionless modules: enumerate over F_2
/// inside the cap imposed by the annihilator of the radical, keep the
/// modules cogenerated by the radical, transport back to the primary field,
/// adjoin the projectives, and cross-check against the brute-force
/// submodule lattice of the regular module when it fits the cap.
pub fn torsionless_census(
    a: &Arc<Algebra>,
    op: &Arc<Algebra>,
    config: &CensusConfig,
) -> Result<CensusResult> {
    let two = Field::prime(2)?;
    let a2 = Arc::new(a.over_field(two)?);
    let op2 = Arc::new(a2.opposite());
    let ann2 = a2.left_annihilator_of_radical();
    let info2 = a2.quotient_info(&ann2)?;
    let cap = info2.regular_dims.clone();

    let candidates = annihilated_enumeration(&a2, Some(&ann2), &cap, config.enum_budget)?;
    let reg2 = Rep::regular(a2.clone());
    let (j2, _) = reg2.radical_rep();
    let mut f2_members: Vec<Rep> = Vec::new();
    for cand in candidates {
        if cogenerated_by(&cand, &j2)? {
            f2_members.push(cand);
        }
    }

    let mut members: Vec<CensusMember> = Vec::new();
    for m2 in &f2_members {
        let transported = match transport_rep(m2, a) {
            Ok(rep) => {
                if is_indecomposable(&rep)? {
                    Some(rep)
                } else {
                    None
                }
            }
            Err(_) => None,
        };
        match transported {
            Some(rep) => {
                let torsionless = is_torsionless(&rep, op)?;
                assert!(torsionless, "census member must be torsionless");
                members.push(CensusMember {
                    projective: is_projective(&rep)?,
                    torsionless,
                    reflexive: is_reflexive(&rep, op)?,
                    rep,
                    f2_only: false,
                });
            }
            None => {
                let torsionless = is_torsionless(m2, &op2)?;
                assert!(torsionless, "census member must be torsionless");
                members.push(CensusMember {
                    projective: is_projective(m2)?,
                    torsionless,
                    reflexive: is_reflexive(m2, &op2)?,
                    rep: m2.clone(),
                    f2_only: true,
                });
            }
        }
    }

    for v in 0..a.quiver().num_vertices() {
        let p = Rep::projective(a.clone(), v)?;
        let mut present = false;
        for m in members.iter() {
            if !m.f2_only && is_iso(&m.rep, &p)? {
                present = true;
                break;
            }
        }
        if !present {
            members.push(CensusMember {
                projective: true,
                torsionless: is_torsionless(&p, op)?,
                reflexive: is_reflexive(&p, op)?,
                rep: p,
                f2_only: false,
            });
        }
    }

    let mut cross_checked = false;
    if reg2.total_dim() <= config.lattice_cap {
        let mut reference: Vec<Rep> = f2_members.clone();
        for v in 0..a2.quiver().num_vertices() {
            reference.push(Rep::projective(a2.clone(), v)?);
        }
        let lattice = submodule_lattice(&reg2, config.lattice_cap)?;
        for sub in &lattice {
            if sub.total_dim() == 0 {
                continue;
            }
            for part in decompose(sub, SplitOrder::Standard)? {
                let mut matched = false;
                for r in &reference {
                    if is_iso(&part, r)? {
                        matched = true;
                        break;
                    }
                }
                assert!(
                    matched,
                    "census cross-check failed: a lattice summand is outside the census"
                );
            }
        }
        cross_checked = true;
    }

    members.sort_by(|x, y| {
        (x.rep.total_dim(), x.rep.dims().to_vec())
            .cmp(&(y.rep.total_dim(), y.rep.dims().to_vec()))
    });
    Ok(CensusResult {
        members,
        cross_checked,
    })
}

/// Factor-module scan over a dual all of whose vertex components have
/// dimension at most one; complete and field independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorScan {
    pub dual_torsionless: bool,
    pub dual_brick: bool,
    pub proper_factors_all_fail: bool,
    pub factors_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleDualEntry {
    pub vertex: usize,
    pub dual_dim: usize,
    pub torsionless: bool,
    pub reflexive: bool,
    pub coker_dims: Vec<usize>,
    /// Present exactly for the reflexive simples.
    pub scan: Option<FactorScan>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleDualReport {
    pub entries: Vec<SimpleDualEntry>,
    /// Duals of distinct reflexive simples are orthogonal bricks.
    pub orthogonal_pairs_hold: bool,
    /// All simples reflexive and at most one dual of dimension other than one.
    pub implication_hypothesis: bool,
    /// Checked only under the hypothesis: all duals simple and the battery
    /// verdict positive.
    pub implication_conclusion: Option<bool>,
}

fn factor_scan(simple: &Rep, a: &Arc<Algebra>, op: &Arc<Algebra>) -> Result<FactorScan> {
    let dual = a_dual(simple, op)?.rep;
    let dual_torsionless = is_torsionless(&dual, a)?;
    let dual_brick = is_brick(&dual)?;

    let support: Vec<usize> = (0..dual.dims().len())
        .filter(|&v| dual.dims()[v] > 0)
        .collect();
    if let Some(&big) = dual.dims().iter().find(|&&d| d > 1) {
        return Err(Error::BudgetExceeded {
            budget: 1,
            needed: big as u64,
            context: "simple dual factor scan",
        });
    }

    let f = dual.field().clone();
    let arrows = op.quiver().arrows();
    let mut factors_checked = 0usize;
    let mut proper_factors_all_fail = true;
    let full: u32 = (1u32 << support.len()) - 1;
    for mask in 1..full {
        // The masked vertices must span a submodule: any nonzero arrow
        // action out of the mask must land inside it.
        let in_mask = |v: usize| {
            support
                .iter()
                .position(|&s| s == v)
                .map(|i| mask >> i & 1 == 1)
                .unwrap_or(false)
        };
        let mut closed = true;
        for (k, arr) in arrows.iter().enumerate() {
            if dual.dims()[arr.source] == 0 || dual.dims()[arr.target] == 0 {
                continue;
            }
            let entry = dual.arrow_matrix(k).get(0, 0);
            if *entry != f.zero() && in_mask(arr.source) && !in_mask(arr.target) {
                closed = false;
                break;
            }
        }
        if !closed {
            continue;
        }
        let gens: Vec<Vec<Scalar>> = support
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| dual.unit_vector(v, 0))
            .collect();
        let (_, incl) = dual.sub_rep(&gens)?;
        let (factor, _) = dual.quotient_by(&incl)?;
        assert!(factor.total_dim() > 0, "proper submodule leaves a factor");
        factors_checked += 1;
        if is_torsionless(&factor, a)? {
            proper_factors_all_fail = false;
        }
    }

    Ok(FactorScan {
        dual_torsionless,
        dual_brick,
        proper_factors_all_fail,
        factors_checked,
    })
}

/// Per-simple dual data with the factor scan on the reflexive ones, the
/// orthogonality check between distinct reflexive simples, and the
/// implication from almost-all-simple duals to self-injectivity.
pub fn simple_dual_report(a: &Arc<Algebra>, op: &Arc<Algebra>) -> Result<SimpleDualReport> {
    let nv = a.quiver().num_vertices();
    let mut entries = Vec::new();
    for v in 0..nv {
        let s = Rep::simple(a.clone(), v)?;
        let dual_dim = a_dual(&s, op)?.rep.total_dim();
        let torsionless = is_torsionless(&s, op)?;
        let reflexive = is_reflexive(&s, op)?;
        let coker_dims = coker_phi(&s, op)?.dims().to_vec();
        let scan = if reflexive {
            Some(factor_scan(&s, a, op)?)
        } else {
            None
        };
        entries.push(SimpleDualEntry {
            vertex: v,
            dual_dim,
            torsionless,
            reflexive,
            coker_dims,
            scan,
        });
    }

    let reflexive_vertices: Vec<usize> = entries
        .iter()
        .filter(|e| e.reflexive)
        .map(|e| e.vertex)
        .collect();
    let mut orthogonal_pairs_hold = true;
    for (i, &u) in reflexive_vertices.iter().enumerate() {
        let du = a_dual(&Rep::simple(a.clone(), u)?, op)?.rep;
        if !is_brick(&du)? {
            orthogonal_pairs_hold = false;
        }
        for &w in reflexive_vertices.iter().skip(i + 1) {
            let dw = a_dual(&Rep::simple(a.clone(), w)?, op)?.rep;
            if !hom_basis(&du, &dw)?.is_empty() || !hom_basis(&dw, &du)?.is_empty() {
                orthogonal_pairs_hold = false;
            }
        }
    }

    let all_reflexive = entries.iter().all(|e| e.reflexive);
    let oversized = entries.iter().filter(|e| e.dual_dim != 1).count();
    let implication_hypothesis = all_reflexive && oversized <= 1;
    let implication_conclusion = if implication_hypothesis {
        let all_simple = entries.iter().all(|e| e.dual_dim == 1);
        let verdict = self_injectivity_report(a, op)?.self_injective;
        Some(all_simple && verdict)
    } else {
        None
    };

    Ok(SimpleDualReport {
        entries,
        orthogonal_pairs_hold,
        implication_hypothesis,
        implication_conclusion,
    })
}

/// Algebra classes for which failing self-injectivity must be witnessed by
/// a simple module failing the named duality property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanClass {
    Qf2,
    DualSimples,
    RadSquareZero,
    Local,
}

impl ScanClass {
    pub fn name(self) -> &'static str {
        match self {
            ScanClass::Qf2 => "QF-2",
            ScanClass::DualSimples => "reflexive right simples",
            ScanClass::RadSquareZero => "radical square zero",
            ScanClass::Local => "local",
        }
    }

    /// Property whose failure the witness exhibits.
    pub fn property(self) -> &'static str {
        match self {
            ScanClass::Qf2 | ScanClass::DualSimples => "torsionless",
            ScanClass::RadSquareZero | ScanClass::Local => "reflexive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanVerdict {
    pub class: ScanClass,
    pub self_injective: bool,
    /// First vertex whose simple fails the class property; `None` exactly
    /// when the algebra is self-injective and the scan is vacuous.
    pub witness: Option<usize>,
}

/// Checks membership in the class, then verifies the contrapositive: a
/// member that is not self-injective must have a simple failing the class
/// property.
pub fn contrapositive_scan(
    a: &Arc<Algebra>,
    op: &Arc<Algebra>,
    class: ScanClass,
) -> Result<ScanVerdict> {
    let nv = a.quiver().num_vertices();
    match class {
        ScanClass::Qf2 => {
            if !is_qf2(a)? {
                return Err(Error::ClassMembershipViolated {
                    class: class.name(),
                    reason: String::from("a projective has a non-simple socle"),
                });
            }
        }
        ScanClass::DualSimples => {
            for v in 0..nv {
                let s = Rep::simple(op.clone(), v)?;
                if !is_reflexive(&s, a)? {
                    return Err(Error::ClassMembershipViolated {
                        class: class.name(),
                        reason: format!("right simple at vertex {} is not reflexive", v + 1),
                    });
                }
            }
        }
        ScanClass::RadSquareZero => {
            if !a.radical_square_zero() {
                return Err(Error::ClassMembershipViolated {
                    class: class.name(),
                    reason: String::from("radical square is nonzero"),
                });
            }
        }
        ScanClass::Local => {
            if !a.is_local() {
                return Err(Error::ClassMembershipViolated {
                    class: class.name(),
                    reason: String::from("algebra is not local"),
                });
            }
        }
    }

    let report = self_injectivity_report(a, op)?;
    if report.self_injective {
        return Ok(ScanVerdict {
            class,
            self_injective: true,
            witness: None,
        });
    }

    let mut witness = None;
    for v in 0..nv {
        let s = Rep::simple(a.clone(), v)?;
        let holds = match class.property() {
            "torsionless" => is_torsionless(&s, op)?,
            _ => is_reflexive(&s, op)?,
        };
        if !holds {
            witness = Some(v);
            break;
        }
    }
    Ok(ScanVerdict {
        class,
        self_injective: false,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Relation, DEFAULT_NILPOTENCY};
    use crate::quiver::Quiver;

    fn named(name: &str, source: usize, target: usize) -> Arrow {
        Arrow {
            name: String::from(name),
            source,
            target,
        }
    }

    fn sample(field: Field) -> Arc<Algebra> {
        let q = Quiver::new(
            2,
            vec![
                named("b", 0, 1),
                named("c", 0, 0),
                named("x", 1, 0),
                named("y", 1, 0),
            ],
        )
        .unwrap();
        let relations = vec![
            Relation::path(vec![2, 1]),
            Relation::path(vec![3, 0]),
            Relation::path(vec![1, 1]),
            Relation::path(vec![1, 0]),
            Relation::path(vec![0, 2]),
            Relation::path(vec![0, 3]),
        ];
        Arc::new(Algebra::new(field, q, relations, DEFAULT_NILPOTENCY).unwrap())
    }

    fn bound_line(field: Field) -> Arc<Algebra> {
        let q = Quiver::new(3, vec![named("b", 1, 0), named("a", 2, 1)]).unwrap();
        Arc::new(Algebra::new(field, q, vec![Relation::path(vec![1, 0])], DEFAULT_NILPOTENCY).unwrap())
    }

    fn nakayama_two(field: Field) -> Arc<Algebra> {
        let q = Quiver::new(2, vec![named("a", 0, 1), named("b", 1, 0)]).unwrap();
        let relations = vec![Relation::path(vec![0, 1]), Relation::path(vec![1, 0])];
        Arc::new(Algebra::new(field, q, relations, DEFAULT_NILPOTENCY).unwrap())
    }

    fn local_loop(field: Field, power: usize) -> Arc<Algebra> {
        let q = Quiver::new(1, vec![named("x", 0, 0)]).unwrap();
        let relations = vec![Relation::path(vec![0; power])];
        Arc::new(Algebra::new(field, q, relations, DEFAULT_NILPOTENCY).unwrap())
    }

    fn local_two_loops(field: Field) -> Arc<Algebra> {
        let q = Quiver::new(1, vec![named("x", 0, 0), named("y", 0, 0)]).unwrap();
        let relations = vec![
            Relation::path(vec![0, 0]),
            Relation::path(vec![1, 1]),
            Relation::path(vec![0, 1]),
            Relation::path(vec![1, 0]),
        ];
        Arc::new(Algebra::new(field, q, relations, DEFAULT_NILPOTENCY).unwrap())
    }

    fn semisimple_point(field: Field) -> Arc<Algebra> {
        Arc::new(Algebra::new(field, Quiver::new(1, vec![]).unwrap(), vec![], DEFAULT_NILPOTENCY).unwrap())
    }

    fn pair(a: &Arc<Algebra>) -> Arc<Algebra> {
        Arc::new(a.opposite())
    }

    #[test]
    fn the_battery_rejects_the_eight_dimensional_example() {
        let a = sample(Field::prime(101).unwrap());
        let op = pair(&a);
        let report = self_injectivity_report(&a, &op).unwrap();
        assert!(!report.self_injective);
        for (_, value) in report.conditions.entries() {
            assert!(!value);
        }
        assert_eq!(report.witnesses.socle_multiplicities, vec![2, 2]);
        assert_eq!(report.witnesses.non_simple_socle, Some(0));
        assert_eq!(report.witnesses.oversized_dual, Some(0));
    }

    #[test]
    fn the_battery_accepts_self_injective_algebras() {
        for a in [
            nakayama_two(Field::prime(101).unwrap()),
            local_loop(Field::prime(101).unwrap(), 3),
            semisimple_point(Field::rationals()),
        ] {
            let op = pair(&a);
            let report = self_injectivity_report(&a, &op).unwrap();
            assert!(report.self_injective);
            for (_, value) in report.conditions.entries() {
                assert!(value);
            }
            assert_eq!(report.witnesses.non_simple_socle, None);
            assert_eq!(report.witnesses.oversized_dual, None);
        }
    }

    #[test]
    fn kasch_and_qf_predicates() {
        let a = sample(Field::prime(101).unwrap());
        let op = pair(&a);
        assert!(is_kasch(&a).unwrap());
        assert!(!is_qf2(&a).unwrap());
        assert!(!is_qf3(&a, &op).unwrap());

        let s = semisimple_point(Field::rationals());
        let sop = pair(&s);
        assert!(is_kasch(&s).unwrap());
        assert!(is_qf2(&s).unwrap());
        assert!(is_qf3(&s, &sop).unwrap());
    }

    #[test]
    fn lattice_counts_for_small_modules() {
        let a = sample(Field::prime(2).unwrap());
        let s1 = Rep::simple(a.clone(), 0).unwrap();
        let two_copies = {
            let f = a.field().clone();
            let mats: Vec<Matrix> = a
                .quiver()
                .arrows()
                .iter()
                .map(|arr| {
                    Matrix::zero(
                        &f,
                        if arr.source == 0 { 2 } else { 0 },
                        if arr.target == 0 { 2 } else { 0 },
                    )
                })
                .collect();
            Rep::new(a.clone(), vec![2, 0], mats).unwrap()
        };
        assert_eq!(submodule_lattice(&two_copies, 10).unwrap().len(), 5);
        assert_eq!(submodule_lattice(&s1, 10).unwrap().len(), 2);

        let big = sample(Field::prime(101).unwrap());
        let s = Rep::simple(big.clone(), 0).unwrap();
        assert_eq!(
            submodule_lattice(&s, 10),
            Err(Error::EnumerationFieldTooLarge { size: 101 })
        );
        let reg = Rep::regular(a.clone());
        assert!(matches!(
            submodule_lattice(&reg, 3),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn lattice_of_the_regular_module_is_order_independent() {
        let a = sample(Field::prime(2).unwrap());
        let reg = Rep::regular(a.clone());
        let forward = submodule_lattice_ordered(&reg, 10, false).unwrap();
        let backward = submodule_lattice_ordered(&reg, 10, true).unwrap();
        assert_eq!(forward.len(), backward.len());
        for (x, y) in forward.iter().zip(backward.iter()) {
            assert_eq!(x.dims(), y.dims());
        }
        assert_eq!(forward.len(), 126);
    }

    #[test]
    fn enumeration_matches_the_string_algebra_count() {
        let a = sample(Field::prime(2).unwrap());
        let ann = a.left_annihilator_of_radical();
        let (quot, _) = a.quotient(&ann).unwrap();
        let quot = Arc::new(quot);
        assert_eq!(quot.dim(), 4);
        let found = enumerate_indecomposables(&quot, &[3, 2], ENUM_BUDGET_DEFAULT).unwrap();
        assert_eq!(found.len(), 5);
        let mut dims: Vec<Vec<usize>> = found.iter().map(|m| m.dims().to_vec()).collect();
        dims.sort();
        assert_eq!(
            dims,
            vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 1]]
        );

        let loop_two = local_loop(Field::prime(2).unwrap(), 2);
        let found = enumerate_indecomposables(&loop_two, &[2], ENUM_BUDGET_DEFAULT).unwrap();
        assert_eq!(found.len(), 2);
    }

    #[test]
    fn census_of_the_eight_dimensional_example() {
        let a = sample(Field::prime(101).unwrap());
        let op = pair(&a);
        let census = torsionless_census(&a, &op, &CensusConfig::default()).unwrap();
        assert!(census.cross_checked);
        assert_eq!(census.members.len(), 6);
        let dims: Vec<Vec<usize>> = census
            .members
            .iter()
            .map(|m| m.rep.dims().to_vec())
            .collect();
        assert_eq!(
            dims,
            vec![
                vec![0, 1],
                vec![1, 0],
                vec![1, 1],
                vec![2, 0],
                vec![2, 1],
                vec![3, 2]
            ]
        );
        assert!(census.members.iter().all(|m| m.torsionless && !m.f2_only));
        let projective: Vec<bool> = census.members.iter().map(|m| m.projective).collect();
        assert_eq!(projective, vec![false, false, false, false, true, true]);
        let reflexive: Vec<bool> = census.members.iter().map(|m| m.reflexive).collect();
        assert_eq!(reflexive, vec![true, true, false, false, true, true]);
    }

    #[test]
    fn census_of_the_bound_line() {
        let a = bound_line(Field::prime(101).unwrap());
        let op = pair(&a);
        let census = torsionless_census(&a, &op, &CensusConfig::default()).unwrap();
        assert!(census.cross_checked);
        assert_eq!(census.members.len(), 4);
        let dims: Vec<Vec<usize>> = census
            .members
            .iter()
            .map(|m| m.rep.dims().to_vec())
            .collect();
        assert_eq!(
            dims,
            vec![
                vec![0, 1, 0],
                vec![1, 0, 0],
                vec![0, 1, 1],
                vec![1, 1, 0]
            ]
        );
    }

    #[test]
    fn the_simple_dual_scans_pass_on_the_eight_dimensional_example() {
        let a = sample(Field::prime(101).unwrap());
        let op = pair(&a);
        let report = simple_dual_report(&a, &op).unwrap();
        assert_eq!(report.entries.len(), 2);
        for entry in &report.entries {
            assert_eq!(entry.dual_dim, 2);
            assert!(entry.torsionless);
            assert!(entry.reflexive);
            assert_eq!(entry.coker_dims, vec![0, 0]);
            let scan = entry.scan.expect("reflexive simples are scanned");
            assert!(scan.dual_torsionless);
            assert!(scan.dual_brick);
            assert!(scan.proper_factors_all_fail);
            assert!(scan.factors_checked > 0);
        }
        assert!(report.orthogonal_pairs_hold);
        assert!(!report.implication_hypothesis);
        assert_eq!(report.implication_conclusion, None);
    }

    #[test]
    fn the_simple_dual_report_flags_the_bound_line() {
        let a = bound_line(Field::prime(101).unwrap());
        let op = pair(&a);
        let report = simple_dual_report(&a, &op).unwrap();
        let e1 = &report.entries[0];
        assert!(e1.reflexive);
        assert!(e1.scan.is_some());
        let e2 = &report.entries[1];
        assert!(e2.torsionless);
        assert!(!e2.reflexive);
        assert_eq!(e2.dual_dim, 1);
        assert_eq!(e2.coker_dims, vec![0, 0, 1]);
        assert!(e2.scan.is_none());
        let e3 = &report.entries[2];
        assert!(!e3.torsionless);
        assert_eq!(e3.dual_dim, 0);
        assert!(e3.scan.is_none());
        assert!(!report.implication_hypothesis);
        assert_eq!(report.implication_conclusion, None);
    }

    #[test]
    fn contrapositive_scans_produce_witnesses() {
        let field = Field::prime(101).unwrap();

        // A path algebra of a line has radical square zero; the second
        // simple fails to embed.
        let line = {
            let q = Quiver::new(2, vec![named("a", 1, 0)]).unwrap();
            Arc::new(Algebra::new(field.clone(), q, vec![], DEFAULT_NILPOTENCY).unwrap())
        };
        let lop = pair(&line);
        let verdict = contrapositive_scan(&line, &lop, ScanClass::RadSquareZero).unwrap();
        assert!(!verdict.self_injective);
        assert_eq!(verdict.witness, Some(1));

        let loops = local_two_loops(field.clone());
        let lop = pair(&loops);
        let verdict = contrapositive_scan(&loops, &lop, ScanClass::Local).unwrap();
        assert!(!verdict.self_injective);
        assert_eq!(verdict.witness, Some(0));

        let bl = bound_line(field.clone());
        let bop = pair(&bl);
        let verdict = contrapositive_scan(&bl, &bop, ScanClass::Qf2).unwrap();
        assert!(!verdict.self_injective);
        assert_eq!(verdict.witness, Some(2));
        assert_eq!(ScanClass::Qf2.property(), "torsionless");

        let cube = local_loop(field.clone(), 3);
        let cop = pair(&cube);
        let verdict = contrapositive_scan(&cube, &cop, ScanClass::Local).unwrap();
        assert!(verdict.self_injective);
        assert_eq!(verdict.witness, None);

        let a = sample(field);
        let op = pair(&a);
        assert!(matches!(
            contrapositive_scan(&a, &op, ScanClass::DualSimples),
            Err(Error::ClassMembershipViolated { .. })
        ));
        assert!(matches!(
            contrapositive_scan(&a, &op, ScanClass::Local),
            Err(Error::ClassMembershipViolated { .. })
        ));
    }

    #[test]
    fn the_example_is_neither_local_nor_radical_square_zero() {
        let a = sample(Field::rationals());
        assert!(!a.is_local());
        assert!(!a.radical_square_zero());
    }
}
