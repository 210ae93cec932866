//! The state-sum engine: |(P,gl)|_d symbolically and numerically, the
//! normalized invariants J_d(N,T), the Reshetikhin-Turaev normalization for
//! graph-retracting shadows, and Volume Conjecture scan records.
//!
//! Per coloring, the term is assembled as the product of `w[R]` over regions,
//! Delta^2(edge triple)^(vertex-ends/2) over edges, and phase(v) * U(v)
//! over vertices, with the four Delta factors of each vertex 6j regrouped
//! onto its incident edge ends. Edges with two ends absorb a full Delta^2
//! and everything stays in the rational ring; edges reaching the boundary
//! carry a single Delta and must pair against an identical triple elsewhere
//! (the tetrahedron pairs its four equal arcs). Circle edges carry no
//! vertex end and no Delta; they constrain admissibility only.

use rayon::prelude::*;

use crate::qalg::{
    delta_squared_factored, region_weight_factored, tet_z_terms, w_const, FactoredQ, HalfInt,
    QalgError, RootContext,
};
use crate::qring::{
    eval_poly_at_root, EvalOutcome, QringError, RationalFunc, UnitEval,
};
use crate::shadow::{Coloring, ColoringMode, ShadowPolyhedron, ShadowError};

#[derive(Debug, Clone, thiserror::Error)]
pub enum StatesumError {
    #[error(transparent)]
    Shadow(#[from] ShadowError),
    #[error(transparent)]
    Qalg(#[from] QalgError),
    #[error(transparent)]
    Qring(#[from] QringError),
    #[error("boundary-reaching singular edges with unpaired Delta factors: {0}")]
    UnpairedDelta(String),
    #[error("state sum would expand to {0} terms; beyond the symbolic budget")]
    TooManyTerms(u64),
    #[error("pole encountered in the r-admissible state sum")]
    PoleInStateSum,
}

/// Which coloring family a result was summed over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumMode {
    Plain { d: u32 },
    RAdmissible { r: u32, d: u32 },
}

/// A symbolic state-sum value together with the coloring count it summed.
#[derive(Clone, Debug)]
pub struct SymbolicStateSum {
    pub value: RationalFunc,
    pub coloring_count: usize,
    pub mode: SumMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VCStatus {
    Ok,
    Zero,
    Pole,
}

impl std::fmt::Display for VCStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VCStatus::Ok => write!(f, "ok"),
            VCStatus::Zero => write!(f, "zero"),
            VCStatus::Pole => write!(f, "pole"),
        }
    }
}

/// One row of a Volume Conjecture scan: the evaluation of J_d at the d-th
/// root of unity in log-magnitude form, with a_d = log_mag / d when finite.
#[derive(Clone, Debug)]
pub struct VCScanRecord {
    pub d: u32,
    pub status: VCStatus,
    pub log_mag: Option<f64>,
    pub a_d: Option<f64>,
}

impl VCScanRecord {
    /// CSV row matching the header `d,status,log_mag,a_d`.
    pub fn to_csv_row(&self) -> String {
        let fmt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{}",
            self.d,
            self.status,
            fmt(self.log_mag),
            fmt(self.a_d)
        )
    }
}

/// The framing-change factor (-1)^(s(d-1)) t^(-s(d^2-1)/4) of a twist by s.
pub fn framing_factor(s: i64, d: u32) -> RationalFunc {
    let d = d as i64;
    let mut t = FactoredQ::one();
    t.mul_sign((s * (d - 1)).rem_euclid(2) == 1);
    t.mul_u_pow(-2 * s * (d * d - 1));
    t.to_ratfunc().expect("monomial factor")
}

/// Add s twists to the region carrying T (which is colored (d-1)/2 in
/// every state sum), returning the reframed shadow.
pub fn framing_twist(
    p: &ShadowPolyhedron,
    region: u32,
    s: i64,
) -> Result<ShadowPolyhedron, StatesumError> {
    let mut regions = p.regions().to_vec();
    let target = regions
        .iter_mut()
        .find(|r| r.id == region)
        .ok_or(ShadowError::NoSuchRegion(region))?;
    if target.boundary != crate::shadow::BoundaryMark::TGraph {
        return Err(ShadowError::NotTRegion(region).into());
    }
    target.gleam = target.gleam + HalfInt::from_int(s);
    Ok(ShadowPolyhedron::new(
        format!("{} (twisted by {s})", p.label),
        regions,
        p.edges().to_vec(),
        p.vertices().to_vec(),
    ))
}

/// Jones normalization `(-1)^(d-1) [d]^(b1-1)` in factored form.
fn jones_norm(d: u32, b1: i64) -> FactoredQ {
    let mut t = FactoredQ::one();
    t.mul_sign((d as i64 - 1).rem_euclid(2) == 1);
    t.mul_bracket(d as u64, b1 - 1);
    t
}

/// All factored terms of one coloring: the global prefix times the
/// cartesian product of the per-vertex z-sums.
fn coloring_terms(
    p: &ShadowPolyhedron,
    end_counts: &std::collections::BTreeMap<u32, u32>,
    coloring: &Coloring,
    extra: &FactoredQ,
) -> Result<Vec<FactoredQ>, StatesumError> {
    let mut prefix = extra.clone();

    for r in p.regions() {
        prefix.mul(&region_weight_factored(
            coloring.color(r.id),
            r.euler,
            r.gleam,
        ));
    }

    // Delta regrouping per edge end.
    let mut singles: Vec<[HalfInt; 3]> = Vec::new();
    for e in p.edges() {
        let mut tri = e.regions.map(|id| coloring.color(id));
        tri.sort();
        match end_counts[&e.id] {
            0 => {} // circle component: admissibility constraint only
            2 => prefix.mul(&delta_squared_factored(tri[0], tri[1], tri[2])),
            1 => singles.push(tri),
            n => unreachable!("validated edge with {n} ends"),
        }
    }
    singles.sort();
    if !singles.len().is_multiple_of(2) {
        return Err(StatesumError::UnpairedDelta(format!("{singles:?}")));
    }
    for pair in singles.chunks(2) {
        if pair[0] != pair[1] {
            return Err(StatesumError::UnpairedDelta(format!("{singles:?}")));
        }
        let [a, b, c] = pair[0];
        prefix.mul(&delta_squared_factored(a, b, c));
    }

    // Vertices: exact phase plus the z-sum factors.
    let mut vertex_sums: Vec<Vec<FactoredQ>> = Vec::with_capacity(p.vertices().len());
    for v in p.vertices() {
        let six = v.slots.map(|id| coloring.color(id));
        prefix.mul_i_pow(-six.iter().map(|h| h.twice()).sum::<i64>());
        vertex_sums.push(tet_z_terms(six)?);
    }

    let total: u64 = vertex_sums.iter().map(|z| z.len() as u64).product();
    if total > 2_000_000 {
        return Err(StatesumError::TooManyTerms(total));
    }

    let mut terms = vec![prefix];
    for zs in &vertex_sums {
        let mut next = Vec::with_capacity(terms.len() * zs.len());
        for t in &terms {
            for z in zs {
                let mut prod = t.clone();
                prod.mul(z);
                next.push(prod);
            }
        }
        terms = next;
    }
    Ok(terms)
}

/// Factored terms of the whole sum, coloring by coloring in enumeration
/// order; `extra` multiplies every term (used for the Jones normalization).
fn all_terms(
    p: &ShadowPolyhedron,
    d: u32,
    mode: ColoringMode,
    extra: &FactoredQ,
) -> Result<(Vec<FactoredQ>, usize), StatesumError> {
    let diags = p.validate();
    if !diags.is_empty() {
        return Err(ShadowError::ValidationFailed(diags).into());
    }
    let colorings = p.enumerate_colorings(d, mode)?;
    let end_counts = p.edge_end_counts();
    let per_coloring: Result<Vec<Vec<FactoredQ>>, StatesumError> = colorings
        .par_iter()
        .map(|col| coloring_terms(p, &end_counts, col, extra))
        .collect();
    let count = colorings.len();
    let mut flat = Vec::new();
    for list in per_coloring? {
        flat.extend(list);
    }
    Ok((flat, count))
}

/// The raw state sum |(P,gl)|_d over plain admissible colorings, exact.
pub fn state_sum_symbolic(
    p: &ShadowPolyhedron,
    d: u32,
) -> Result<SymbolicStateSum, StatesumError> {
    let (terms, coloring_count) = all_terms(p, d, ColoringMode::Plain, &FactoredQ::one())?;
    let value = crate::qalg::assemble_sum(&terms)?;
    check_quarter_graded(&value)?;
    Ok(SymbolicStateSum {
        value,
        coloring_count,
        mode: SumMode::Plain { d },
    })
}

/// `J_d(N,T) = (-1)^(d-1) [d]^(b1(N)-1) |(P,gl)|_d`, canonical and
/// quarter-graded.
pub fn jones_symbolic(p: &ShadowPolyhedron, d: u32) -> Result<RationalFunc, StatesumError> {
    let b1 = p.first_betti()?;
    let norm = jones_norm(d, b1);
    let (terms, _) = all_terms(p, d, ColoringMode::Plain, &norm)?;
    let value = crate::qalg::assemble_sum(&terms)?;
    check_quarter_graded(&value)?;
    Ok(value)
}

fn check_quarter_graded(value: &RationalFunc) -> Result<(), QringError> {
    if value.is_quarter_graded() {
        return Ok(());
    }
    let odd = value
        .num()
        .terms()
        .chain(value.den().terms())
        .map(|(&e, _)| e)
        .find(|e| e % 2 != 0)
        .unwrap_or(1);
    Err(QringError::NotQuarterGraded(odd))
}

/// Evaluate J_d at t = e^(2*pi*i/r) through the factored term stream.
/// Vanishing quantum integers cancel exactly by multiplicity, so this also
/// covers the Volume Conjecture point r = d where the 6j factors are
/// individually singular.
pub fn jones_numeric(
    p: &ShadowPolyhedron,
    d: u32,
    r: u32,
    precision_bits: u32,
) -> Result<EvalOutcome, StatesumError> {
    let b1 = p.first_betti()?;
    let norm = jones_norm(d, b1);
    let (terms, _) = all_terms(p, d, ColoringMode::Plain, &norm)?;
    let rc = RootContext::new(r, precision_bits)?;
    Ok(rc.sum_terms(&terms))
}

/// RT^r_d for a graph-retracting shadow: ev_r(W)^b1 times the r-admissible
/// state sum at e^(2*pi*i/r) (sign and nullity of the intersection form
/// vanish for these shadows, so only the W power survives).
pub fn rt_invariant(
    p: &ShadowPolyhedron,
    d: u32,
    r: u32,
    precision_bits: u32,
) -> Result<UnitEval, StatesumError> {
    let b1 = p.first_betti()?;
    let (terms, _) = all_terms(p, d, ColoringMode::RAdmissible(r), &FactoredQ::one())?;
    let rc = RootContext::new(r, precision_bits)?;
    let sum = match rc.sum_terms(&terms) {
        EvalOutcome::Value(v) => v,
        EvalOutcome::Zero => UnitEval::zero(rc.ctx()),
        EvalOutcome::Pole => return Err(StatesumError::PoleInStateSum),
    };
    let ctx = rc.ctx();
    let (wre, wim) = eval_poly_at_root(&w_const(r), r, ctx);
    let w = UnitEval::from_complex(&wre, &wim, ctx);
    // W^b1 (b1 >= 0 for graph-retracting shadows).
    let mut acc = sum;
    for _ in 0..b1 {
        acc = acc.mul(&w, ctx);
    }
    Ok(acc)
}

/// Volume Conjecture record: J_d evaluated at r = d, in log space.
pub fn vc_record(
    p: &ShadowPolyhedron,
    d: u32,
    precision_bits: u32,
) -> Result<VCScanRecord, StatesumError> {
    assert!(d % 2 == 1 && d >= 3, "VC scans run over odd d >= 3");
    let rc = RootContext::new(d, precision_bits)?;
    let b1 = p.first_betti()?;
    let norm = jones_norm(d, b1);
    let (terms, _) = all_terms(p, d, ColoringMode::Plain, &norm)?;
    Ok(match rc.sum_terms(&terms) {
        EvalOutcome::Value(v) => {
            let log_mag = v.log_mag_f64(rc.ctx());
            VCScanRecord {
                d,
                status: VCStatus::Ok,
                log_mag: Some(log_mag),
                a_d: Some(log_mag / d as f64),
            }
        }
        EvalOutcome::Zero => VCScanRecord {
            d,
            status: VCStatus::Zero,
            log_mag: Some(f64::NEG_INFINITY),
            a_d: None,
        },
        EvalOutcome::Pole => VCScanRecord {
            d,
            status: VCStatus::Pole,
            log_mag: None,
            a_d: None,
        },
    })
}
