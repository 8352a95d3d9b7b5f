//! The named homological conditions as decision procedures: the R_n
//! chain on injective-term types, the Auslander-type G_n(k) bounds, the
//! sampled g_n(k) double-Ext test, syzygy-category membership, the
//! injective-cogenerator criterion, and whole-algebra Gorenstein
//! summaries.
//!
//! Conventions fixed here:
//! * `I_i(M)` always means the degree-i term of the minimal injective
//!   coresolution of M; absent terms are zero and vacuously included.
//! * R_n and the cogenerator test compare type SETS (the ambient
//!   coproduct absorbs multiplicities); the short-exact-sequence lemma
//!   compares type MULTISETS (finite direct sums there).
//! * G_n(k) uses the inclusive bound pd I_i <= i + k. The strict variant
//!   disagrees exactly when some pd I_i equals i + k, and every report
//!   carries a `strict_disagrees` flag so both readings stay visible.
//! * Side::Left is the algebra as given; Side::Right is its opposite.
//!   Nothing is normalized silently — callers pick the side.

use crate::homological::{
    ext_module_regular, ext_table, is_n_torsionfree, torsionless_defect,
    Certificate, ThreeValued,
};
use crate::path_algebra::MonomialAlgebra;
use crate::rep::{injective_module, regular_module, Rep, RepMap, SimpleMultiset};
use crate::resolutions::{
    injective_envelope, min_resolution, proj_dim, DimOutcome, Direction,
};
use std::sync::Arc;
use thiserror::Error;

/// Default search cap for dimension computations inside the deciders.
pub const DEFAULT_CAP: usize = 16;

/// Which side of the algebra a condition is evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn ring(&self, alg: &Arc<MonomialAlgebra>) -> Arc<MonomialAlgebra> {
        match self {
            Side::Left => alg.clone(),
            Side::Right => Arc::new(alg.opposite()),
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// Flattened, render-ready view of any condition check.
#[derive(Debug, Clone)]
pub struct ConditionReport {
    pub condition: String,
    pub params: Vec<(String, String)>,
    pub verdict: ThreeValued,
    pub evidence: Vec<String>,
}

impl ConditionReport {
    pub fn lines(&self) -> Vec<String> {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let mut out = vec![format!("{}\t{}\t{}", self.condition, params, self.verdict)];
        out.extend(self.evidence.iter().map(|e| format!("  {e}")));
        out
    }
}

/// Types of the minimal injective coresolution terms I_0(M)..I_{depth-1}(M).
fn injective_term_types(m: &Rep, depth: usize) -> Vec<SimpleMultiset> {
    min_resolution(m, Direction::Injective, depth)
        .terms
        .into_iter()
        .map(|t| t.summands)
        .collect()
}

fn term(types: &[SimpleMultiset], i: usize, vertex_count: usize) -> SimpleMultiset {
    types.get(i).cloned().unwrap_or_else(|| SimpleMultiset::new(vertex_count))
}

/// One degree of the R_n check: the types of I_i(M) against the union of
/// the types of I_0(R)..I_i(R).
#[derive(Debug, Clone)]
pub struct RnDegree {
    pub i: usize,
    pub module_types: SimpleMultiset,
    pub allowed_types: SimpleMultiset,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct RnReport {
    pub n: usize,
    pub holds: bool,
    pub degrees: Vec<RnDegree>,
}

impl RnReport {
    pub fn first_violation(&self) -> Option<usize> {
        self.degrees.iter().find(|d| !d.ok).map(|d| d.i)
    }
}

/// M has the R_n property: for 0 <= i <= n-1 every indecomposable summand
/// type of I_i(M) already appears among the types of I_j(R) for some
/// j <= i. The ambient coproduct makes this a set comparison; n = 0 is
/// vacuous.
pub fn rn_property(m: &Rep, n: usize) -> RnReport {
    let vertex_count = m.alg().vertex_count();
    let module_terms = injective_term_types(m, n);
    let ring_terms = injective_term_types(&regular_module(m.alg()), n);
    let mut degrees = Vec::new();
    let mut allowed = SimpleMultiset::new(vertex_count);
    for i in 0..n {
        allowed = allowed.union(&term(&ring_terms, i, vertex_count));
        let module_types = term(&module_terms, i, vertex_count);
        let ok = module_types.is_subset_of(&allowed);
        degrees.push(RnDegree { i, module_types, allowed_types: allowed.clone(), ok });
    }
    RnReport { n, holds: degrees.iter().all(|d| d.ok), degrees }
}

#[derive(Debug, Clone)]
pub struct GnkReport {
    pub side: Side,
    pub n: usize,
    pub k: usize,
    pub verdict: ThreeValued,
    /// pd of each nonzero coresolution term I_0(R)..I_{n-1}(R).
    pub pd_table: Vec<DimOutcome>,
    /// True when some pd I_i equals i + k exactly, so the strict reading
    /// pd I_i < i + k would flip the verdict.
    pub strict_disagrees: bool,
}

/// The G_n(k) bound on the chosen side: pd I_i(R) <= i + k for
/// 0 <= i <= n-1, projective dimensions searched up to `cap`.
pub fn check_gnk(alg: &Arc<MonomialAlgebra>, side: Side, n: usize, k: usize, cap: usize) -> GnkReport {
    assert!(n >= 1, "G_n(k) starts at n = 1");
    let ring = side.ring(alg);
    let reg = regular_module(&ring);
    let cores = min_resolution(&reg, Direction::Injective, n);
    let mut pd_table = Vec::new();
    let mut strict_disagrees = false;
    let mut capped = false;
    let mut witness: Option<(usize, usize)> = None;
    for (i, t) in cores.terms.iter().enumerate() {
        let parts: Vec<Rep> = t
            .summands
            .counts()
            .iter()
            .enumerate()
            .flat_map(|(v, &mult)| (0..mult).map(move |_| v))
            .map(|v| injective_module(&ring, v))
            .collect();
        let refs: Vec<&Rep> = parts.iter().collect();
        let pd = proj_dim(&Rep::direct_sum(&refs), cap);
        match pd {
            DimOutcome::Finite(d) => {
                strict_disagrees |= d == i + k;
                if d > i + k && witness.is_none() {
                    witness = Some((i, d));
                }
            }
            DimOutcome::ExceedsCap { .. } => capped = true,
        }
        pd_table.push(pd);
    }
    let verdict = if let Some((i, d)) = witness {
        ThreeValued::No(Certificate::InjectiveTermPd { term: i, pd: d, bound: i + k })
    } else if capped {
        ThreeValued::Unknown(Certificate::CapExhausted { cap })
    } else {
        ThreeValued::Yes(Certificate::InjectiveTermsBounded { checked: pd_table.len() })
    };
    GnkReport { side, n, k, verdict, pd_table, strict_disagrees }
}

#[derive(Debug, Clone)]
pub struct GorensteinBothSides {
    pub n: usize,
    pub left: GnkReport,
    pub right: GnkReport,
    pub verdict: ThreeValued,
    /// Auslander symmetry: the two sides may not disagree when both are
    /// decided. A false value here is a bug, not a property of the input.
    pub agree: bool,
}

/// n-Gorenstein = G_n(0), evaluated on both sides.
pub fn is_n_gorenstein(alg: &Arc<MonomialAlgebra>, n: usize, cap: usize) -> GorensteinBothSides {
    let left = check_gnk(alg, Side::Left, n, 0, cap);
    let right = check_gnk(alg, Side::Right, n, 0, cap);
    let agree = !(left.verdict.is_yes() && right.verdict.is_no())
        && !(left.verdict.is_no() && right.verdict.is_yes());
    let verdict = if left.verdict.is_yes() && right.verdict.is_yes() {
        left.verdict.clone()
    } else if left.verdict.is_no() {
        left.verdict.clone()
    } else if right.verdict.is_no() {
        right.verdict.clone()
    } else {
        ThreeValued::Unknown(Certificate::CapExhausted { cap })
    };
    GorensteinBothSides { n, left, right, verdict, agree }
}

/// A certified double-Ext violation found by sampling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GnkViolation {
    pub module_index: usize,
    pub i: usize,
    pub j: usize,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SampleOutcome {
    /// Every sampled module passed; never a YES for the full category.
    SampledPass { modules: usize, checks: usize },
    Violation(GnkViolation),
}

impl SampleOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, SampleOutcome::SampledPass { .. })
    }
}

/// Necessary-condition sampling for g_n(k): for each sampled M checks
/// Ext^j_{op}(Ext^{i+k}(M, R), R^{op}) = 0 for 1 <= i <= n, 0 <= j <= i-1.
/// The first failure is returned as a certified violation.
pub fn check_gnk_sample(alg: &Arc<MonomialAlgebra>, n: usize, k: usize, sample: &[Rep]) -> SampleOutcome {
    let mut checks = 0;
    for (module_index, m) in sample.iter().enumerate() {
        assert_eq!(m.alg(), alg, "sample module over the wrong algebra");
        for i in 1..=n {
            let e = ext_module_regular(m, i + k);
            if e.is_zero() {
                checks += i;
                continue;
            }
            let reg_op = regular_module(e.alg());
            let table = ext_table(&e, &reg_op, i - 1);
            for j in 0..i {
                checks += 1;
                if table.dims[j] != 0 {
                    return SampleOutcome::Violation(GnkViolation { module_index, i, j, dim: table.dims[j] });
                }
            }
        }
    }
    SampleOutcome::SampledPass { modules: sample.len(), checks }
}

/// Is M an n-th syzygy? Decision ladder, each rung certified:
/// 1. n = 1 is decided exactly by the torsionless test.
/// 2. A torsionless defect refutes membership for every n (an n-th
///    syzygy is in particular a first syzygy).
/// 3. Construction provenance (`known_syzygy`) gives YES.
/// 4. n-torsionfree modules are n-th syzygies.
/// 5. An R_n failure refutes membership.
/// 6. Over a certified n-Gorenstein algebra, R_n membership decides.
/// Anything else is UNKNOWN.
pub fn syzygy_membership(m: &Rep, n: usize, known_syzygy: Option<usize>, cap: usize) -> ThreeValued {
    assert!(n >= 1, "syzygy membership starts at n = 1");
    match torsionless_defect(m) {
        Some((vertex, dim)) => return ThreeValued::No(Certificate::TorsionlessDefect { vertex, dim }),
        None if n == 1 => return ThreeValued::Yes(Certificate::TorsionfreeDegree { n: 1 }),
        None => {}
    }
    if let Some(k) = known_syzygy {
        if k >= n {
            return ThreeValued::Yes(Certificate::Provenance { n: k });
        }
    }
    if is_n_torsionfree(m, n) {
        return ThreeValued::Yes(Certificate::TorsionfreeDegree { n });
    }
    let rn = rn_property(m, n);
    if let Some(degree) = rn.first_violation() {
        return ThreeValued::No(Certificate::RnViolation { degree });
    }
    if is_n_gorenstein(m.alg(), n, cap).verdict.is_yes() {
        return ThreeValued::Yes(Certificate::GorensteinDecides { n });
    }
    ThreeValued::Unknown(Certificate::CriteriaExhausted)
}

#[derive(Debug, Clone)]
pub struct CogeneratorReport {
    pub n: usize,
    pub covers: bool,
    /// Union (as a multiset) of the types of I_0(R)..I_n(R).
    pub covered: SimpleMultiset,
    /// A vertex whose simple embeds into none of the listed terms.
    pub missing_vertex: Option<usize>,
}

/// Does I_0(R) + .. + I_n(R) cogenerate? Equivalently: does every vertex
/// appear among the term types?
pub fn cogenerator_check(alg: &Arc<MonomialAlgebra>, n: usize) -> CogeneratorReport {
    let vertex_count = alg.vertex_count();
    let terms = injective_term_types(&regular_module(alg), n + 1);
    let mut covered = SimpleMultiset::new(vertex_count);
    for t in &terms {
        covered = covered.union(t);
    }
    let missing_vertex = (0..vertex_count).find(|&v| covered.multiplicity(v) == 0);
    CogeneratorReport { n, covers: missing_vertex.is_none(), covered, missing_vertex }
}

#[derive(Debug, Error)]
pub enum SesError {
    #[error("maps must share the middle module")]
    MismatchedMiddle,
    #[error("composite B-map is nonzero")]
    CompositeNonzero,
    #[error("first map is not injective")]
    NotMono,
    #[error("second map is not surjective")]
    NotEpi,
    #[error("dimension vectors are not additive at vertex {0}")]
    NotAdditive(usize),
}

/// A short exact sequence 0 -> A -> B -> C -> 0 of representations,
/// validated on construction.
#[derive(Debug, Clone)]
pub struct Ses {
    incl: RepMap,
    proj: RepMap,
}

impl Ses {
    pub fn new(incl: RepMap, proj: RepMap) -> Result<Ses, SesError> {
        if incl.tgt() != proj.src() {
            return Err(SesError::MismatchedMiddle);
        }
        if !incl.then(&proj).is_zero() {
            return Err(SesError::CompositeNonzero);
        }
        if incl.rank() != incl.src().total_dim() {
            return Err(SesError::NotMono);
        }
        if proj.rank() != proj.tgt().total_dim() {
            return Err(SesError::NotEpi);
        }
        for v in 0..incl.src().alg().vertex_count() {
            if incl.src().dims()[v] + proj.tgt().dims()[v] != incl.tgt().dims()[v] {
                return Err(SesError::NotAdditive(v));
            }
        }
        Ok(Ses { incl, proj })
    }

    /// The split sequence 0 -> A -> A + C -> C -> 0.
    pub fn split(a: &Rep, c: &Rep) -> Ses {
        let b = Rep::direct_sum(&[a, c]);
        let field = a.alg().field();
        let incl_blocks = (0..a.alg().vertex_count())
            .map(|v| {
                crate::linalg::mat::Mat::from_fn(field, b.dims()[v], a.dims()[v], |r, c2| {
                    u64::from(r == c2)
                })
            })
            .collect();
        let proj_blocks = (0..a.alg().vertex_count())
            .map(|v| {
                crate::linalg::mat::Mat::from_fn(field, c.dims()[v], b.dims()[v], |r, c2| {
                    u64::from(c2 == r + a.dims()[v])
                })
            })
            .collect();
        let incl = RepMap::new(a.clone(), b.clone(), incl_blocks).expect("split inclusion");
        let proj = RepMap::new(b, c.clone(), proj_blocks).expect("split projection");
        Ses::new(incl, proj).expect("split sequence is exact")
    }

    pub fn a(&self) -> &Rep {
        self.incl.src()
    }

    pub fn b(&self) -> &Rep {
        self.incl.tgt()
    }

    pub fn c(&self) -> &Rep {
        self.proj.tgt()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma21Violation {
    pub degree: usize,
    pub clause: u8,
    pub lhs: SimpleMultiset,
    pub rhs: SimpleMultiset,
}

#[derive(Debug, Clone)]
pub struct Lemma21Report {
    pub depth: usize,
    pub ok: bool,
    pub violation: Option<Lemma21Violation>,
}

/// Check the three injective-term multiset inclusions attached to a short
/// exact sequence, for 0 <= i <= depth, with I_{-1} = 0:
///   (1) I_i(B) <= I_i(A) + I_i(C)
///   (2) I_i(C) <= I_i(B) + I_{i+1}(A) + I_{i-1}(A) + I_{i-1}(C)
///   (3) I_i(A) <= I_i(B) + I_{i-1}(A) + I_{i-1}(C)
pub fn verify_lemma21(s: &Ses, depth: usize) -> Lemma21Report {
    let vc = s.a().alg().vertex_count();
    let ia = injective_term_types(s.a(), depth + 2);
    let ib = injective_term_types(s.b(), depth + 1);
    let ic = injective_term_types(s.c(), depth + 1);
    let at = |types: &[SimpleMultiset], i: isize| -> SimpleMultiset {
        if i < 0 {
            SimpleMultiset::new(vc)
        } else {
            term(types, i as usize, vc)
        }
    };
    for i in 0..=depth as isize {
        let clauses: [(u8, SimpleMultiset, SimpleMultiset); 3] = [
            (1, at(&ib, i), at(&ia, i).union(&at(&ic, i))),
            (
                2,
                at(&ic, i),
                at(&ib, i).union(&at(&ia, i + 1)).union(&at(&ia, i - 1)).union(&at(&ic, i - 1)),
            ),
            (3, at(&ia, i), at(&ib, i).union(&at(&ia, i - 1)).union(&at(&ic, i - 1))),
        ];
        for (clause, lhs, rhs) in clauses {
            if !lhs.is_submultiset_of(&rhs) {
                return Lemma21Report {
                    depth,
                    ok: false,
                    violation: Some(Lemma21Violation { degree: i as usize, clause, lhs, rhs }),
                };
            }
        }
    }
    Lemma21Report { depth, ok: true, violation: None }
}

#[derive(Debug, Clone)]
pub struct Prop27Report {
    pub n: usize,
    pub pd: DimOutcome,
    /// None when the hypothesis pd M <= n fails and the check is skipped.
    pub ok: Option<bool>,
    pub module_types: SimpleMultiset,
    pub allowed_types: SimpleMultiset,
}

/// For pd M <= n, the socle types of M must embed into the first n+1
/// injective terms of the regular module.
pub fn verify_prop27(m: &Rep, n: usize) -> Prop27Report {
    let vc = m.alg().vertex_count();
    let pd = proj_dim(m, n);
    let (_, socle_types) = injective_envelope(m);
    let mut module_types = SimpleMultiset::new(vc);
    for v in socle_types {
        module_types.add(v, 1);
    }
    let ring_terms = injective_term_types(&regular_module(m.alg()), n + 1);
    let mut allowed_types = SimpleMultiset::new(vc);
    for t in &ring_terms {
        allowed_types = allowed_types.union(t);
    }
    let ok = match pd.is_at_most(n) {
        Some(true) => Some(module_types.is_subset_of(&allowed_types)),
        _ => None,
    };
    Prop27Report { n, pd, ok, module_types, allowed_types }
}

#[derive(Debug, Clone)]
pub struct GorensteinSummary {
    pub id_left: DimOutcome,
    pub id_right: DimOutcome,
    /// pd of each injective coresolution term, per side.
    pub pd_left: Vec<DimOutcome>,
    pub pd_right: Vec<DimOutcome>,
    /// Gorenstein with this self-injective dimension: requires finite id
    /// on both sides and finite pd for every term.
    pub gorenstein: Option<usize>,
    /// Finite injective dimensions must agree across sides; None when
    /// either side exceeded the cap.
    pub symmetric: Option<bool>,
    /// Whether the algebra is also id-Gorenstein in the Auslander sense.
    pub auslander_at_id: Option<bool>,
}

/// Whole-algebra summary: injective dimension of the regular module on
/// both sides, projective dimensions of all coresolution terms, and the
/// combined Gorenstein verdict.
pub fn gorenstein_summary(alg: &Arc<MonomialAlgebra>, cap: usize) -> GorensteinSummary {
    let pd_terms = |ring: &Arc<MonomialAlgebra>| -> Vec<DimOutcome> {
        let reg = regular_module(ring);
        min_resolution(&reg, Direction::Injective, cap + 1)
            .terms
            .iter()
            .map(|t| {
                let parts: Vec<Rep> = t
                    .summands
                    .counts()
                    .iter()
                    .enumerate()
                    .flat_map(|(v, &mult)| (0..mult).map(move |_| v))
                    .map(|v| injective_module(ring, v))
                    .collect();
                let refs: Vec<&Rep> = parts.iter().collect();
                proj_dim(&Rep::direct_sum(&refs), cap)
            })
            .collect()
    };
    let op = Side::Right.ring(alg);
    let id_left = crate::resolutions::inj_dim(&regular_module(alg), cap);
    let id_right = crate::resolutions::inj_dim(&regular_module(&op), cap);
    let pd_left = pd_terms(alg);
    let pd_right = pd_terms(&op);
    let all_finite =
        pd_left.iter().chain(&pd_right).all(|d| matches!(d, DimOutcome::Finite(_)));
    let (gorenstein, symmetric) = match (id_left.as_finite(), id_right.as_finite()) {
        (Some(l), Some(r)) => {
            let g = if all_finite { Some(l.max(r)) } else { None };
            (g, Some(l == r))
        }
        _ => (None, None),
    };
    let auslander_at_id =
        gorenstein.map(|d| is_n_gorenstein(alg, d.max(1), cap).verdict.is_yes());
    GorensteinSummary { id_left, id_right, pd_left, pd_right, gorenstein, symmetric, auslander_at_id }
}
