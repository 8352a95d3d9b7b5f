//! Minimal projective resolutions and injective coresolutions.
//!
//! Projective covers are built by lifting a basis of the top; injective
//! envelopes are the k-duals of projective covers over the opposite
//! algebra, so one construction drives both directions. Resolution term
//! types (which P(v) / I(v) appear, with multiplicity) are read off the
//! construction itself — the top or socle of the module at that stage —
//! never from after-the-fact isomorphism testing.
//!
//! Projectivity and injectivity tests are exact dimension comparisons: the
//! cover P(top M) ->> M is an isomorphism iff the dimensions agree, because
//! its kernel is the only thing that can make them differ.

use crate::path_algebra::MonomialAlgebra;
use crate::rep::hom::top;
use crate::rep::{k_dual, proj_sum, projective_module, ProjBasis, Rep, RepMap, SimpleMultiset};
use crate::linalg::mat::Mat;
use std::sync::Arc;

/// A homological dimension, possibly unresolved at the search cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimOutcome {
    Finite(usize),
    ExceedsCap { cap: usize },
}

impl DimOutcome {
    pub fn as_finite(&self) -> Option<usize> {
        match self {
            DimOutcome::Finite(n) => Some(*n),
            DimOutcome::ExceedsCap { .. } => None,
        }
    }

    pub fn is_at_most(&self, bound: usize) -> Option<bool> {
        match self {
            DimOutcome::Finite(n) => Some(*n <= bound),
            DimOutcome::ExceedsCap { cap } => {
                // pd > cap >= bound settles "not <= bound"; otherwise unknown
                if *cap >= bound {
                    Some(false)
                } else {
                    None
                }
            }
        }
    }
}

impl std::fmt::Display for DimOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DimOutcome::Finite(n) => write!(f, "{n}"),
            DimOutcome::ExceedsCap { cap } => write!(f, ">{cap}"),
        }
    }
}

/// The projective cover P ->> M together with the path-coordinate layout
/// of P. The summand list realizes the top of M in vertex order.
pub fn projective_cover(m: &Rep) -> (RepMap, ProjBasis) {
    let alg = m.alg().clone();
    let field = alg.field();
    let (top_rep, proj) = top(m);
    let mut summands = Vec::new();
    for v in 0..alg.vertex_count() {
        summands.extend(std::iter::repeat(v).take(top_rep.dims()[v]));
    }
    let (p, layout) = proj_sum(&alg, &summands);
    // lift each top basis vector through the projection M ->> top M
    let lifts: Vec<Mat> = (0..alg.vertex_count())
        .map(|v| {
            proj.block(v)
                .solve(&Mat::identity(field, top_rep.dims()[v]))
                .expect("the projection onto the top is surjective")
        })
        .collect();
    let gen_image: Vec<Mat> = summands
        .iter()
        .enumerate()
        .map(|(s, &v)| {
            let copy = summands[..s].iter().filter(|&&w| w == v).count();
            lifts[v].column(copy)
        })
        .collect();
    let blocks: Vec<Mat> = (0..alg.vertex_count())
        .map(|w| {
            let mut blk = Mat::zero(field, m.dims()[w], layout.coords[w].len());
            for (c, &(s, path_idx)) in layout.coords[w].iter().enumerate() {
                let col = m.path_matrix(&alg.basis()[path_idx]).mul(&gen_image[s]);
                for r in 0..m.dims()[w] {
                    blk.set(r, c, col.get(r, 0));
                }
            }
            blk
        })
        .collect();
    let cover = RepMap::new(p, m.clone(), blocks).expect("top lifts assemble to a module map");
    debug_assert!(cover.cokernel().0.is_zero(), "top lifts generate by Nakayama");
    (cover, layout)
}

/// The injective envelope M >-> I, as the k-dual of a projective cover
/// over the opposite algebra. Returns the envelope and the vertices of its
/// indecomposable summands (the socle type of M, in vertex order).
pub fn injective_envelope(m: &Rep) -> (RepMap, Vec<usize>) {
    let alg = m.alg().clone();
    let op = Arc::new(alg.opposite());
    let dm = k_dual(m, &op);
    let (cover, layout) = projective_cover(&dm);
    let inj = k_dual(cover.src(), &alg);
    let blocks = cover.blocks().iter().map(Mat::transpose).collect();
    let env = RepMap::new(m.clone(), inj, blocks).expect("the dual of a cover is an envelope");
    (env, layout.summands)
}

/// First syzygy: the kernel of the projective cover.
pub fn syzygy(m: &Rep) -> Rep {
    projective_cover(m).0.kernel().0
}

/// First cosyzygy: the cokernel of the injective envelope.
pub fn cosyzygy(m: &Rep) -> Rep {
    injective_envelope(m).0.cokernel().0
}

pub fn syzygy_n(m: &Rep, n: usize) -> Rep {
    let mut cur = m.clone();
    for _ in 0..n {
        cur = syzygy(&cur);
    }
    cur
}

pub fn cosyzygy_n(m: &Rep, n: usize) -> Rep {
    let mut cur = m.clone();
    for _ in 0..n {
        cur = cosyzygy(&cur);
    }
    cur
}

/// Exact projectivity test: the cover of M is an isomorphism iff its
/// source has the same total dimension as M.
pub fn is_projective(m: &Rep) -> bool {
    let (top_rep, _) = top(m);
    let alg = m.alg();
    let cover_dim: usize = (0..alg.vertex_count())
        .map(|v| top_rep.dims()[v] * projective_module(alg, v).total_dim())
        .sum();
    cover_dim == m.total_dim()
}

/// Exact injectivity test, dual to `is_projective`.
pub fn is_injective(m: &Rep) -> bool {
    let op = Arc::new(m.alg().opposite());
    is_projective(&k_dual(m, &op))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Projective,
    Injective,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionTerm {
    /// Multiplicities of the indecomposable P(v) (or I(v)) in this term.
    pub summands: SimpleMultiset,
    pub dim: usize,
}

/// A truncated minimal resolution (projective) or coresolution (injective).
/// `terms[i]` describes the degree-i term; no zero terms are recorded.
/// `terminated` says the resolution is complete as listed, and `tail` is
/// the first unresolved (co)syzygy (zero exactly when terminated).
#[derive(Debug, Clone)]
pub struct MinResolution {
    pub direction: Direction,
    pub terms: Vec<ResolutionTerm>,
    pub terminated: bool,
    pub tail: Rep,
}

pub fn min_resolution(m: &Rep, direction: Direction, depth: usize) -> MinResolution {
    let vertex_count = m.alg().vertex_count();
    let mut terms = Vec::new();
    let mut current = m.clone();
    for _ in 0..depth {
        if current.is_zero() {
            break;
        }
        let (vertices, dim, next) = match direction {
            Direction::Projective => {
                let (cover, layout) = projective_cover(&current);
                (layout.summands, cover.src().total_dim(), cover.kernel().0)
            }
            Direction::Injective => {
                let (env, summands) = injective_envelope(&current);
                (summands, env.tgt().total_dim(), env.cokernel().0)
            }
        };
        let mut multiset = SimpleMultiset::new(vertex_count);
        for v in vertices {
            multiset.add(v, 1);
        }
        terms.push(ResolutionTerm { summands: multiset, dim });
        current = next;
    }
    MinResolution { direction, terminated: current.is_zero(), tail: current, terms }
}

fn dim_search(m: &Rep, cap: usize, step: impl Fn(&Rep) -> Rep, done: impl Fn(&Rep) -> bool) -> DimOutcome {
    let mut current = m.clone();
    for n in 0..=cap {
        if done(&current) {
            return DimOutcome::Finite(n);
        }
        current = step(&current);
    }
    DimOutcome::ExceedsCap { cap }
}

/// Projective dimension, searched up to `cap` (inclusive).
pub fn proj_dim(m: &Rep, cap: usize) -> DimOutcome {
    dim_search(m, cap, syzygy, is_projective)
}

/// Injective dimension, searched up to `cap` (inclusive).
pub fn inj_dim(m: &Rep, cap: usize) -> DimOutcome {
    dim_search(m, cap, cosyzygy, is_injective)
}

/// One stage of a minimal projective resolution, with everything the Ext
/// and transpose machinery needs: the cover, its layout, and the inclusion
/// of the next syzygy.
#[derive(Debug, Clone)]
pub struct CoverStep {
    pub cover: RepMap,
    pub layout: ProjBasis,
    pub kernel: Rep,
    pub kernel_incl: RepMap,
}

/// The first `depth` stages of the minimal projective resolution of M,
/// stopping early once a syzygy is zero. The degree-i differential
/// P_i -> P_{i-1} is `steps[i].cover.then(&steps[i-1].kernel_incl)`.
pub fn cover_steps(m: &Rep, depth: usize) -> Vec<CoverStep> {
    let mut steps = Vec::new();
    let mut current = m.clone();
    for _ in 0..depth {
        if current.is_zero() && !steps.is_empty() {
            break;
        }
        let (cover, layout) = projective_cover(&current);
        let (kernel, kernel_incl) = cover.kernel();
        current = kernel.clone();
        steps.push(CoverStep { cover, layout, kernel, kernel_incl });
    }
    steps
}

/// Regular module helper used throughout the condition checks.
pub fn regular(alg: &Arc<MonomialAlgebra>) -> Rep {
    crate::rep::regular_module(alg)
}
