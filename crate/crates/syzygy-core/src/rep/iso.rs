//! Deciding isomorphism of representations, and splitting off projective
//! summands.
//!
//! Isomorphism testing looks for an invertible element of Hom(M, N):
//!
//! 1. a handful of seeded random combinations of the hom basis (cheap, and
//!    catches almost every isomorphic pair immediately);
//! 2. if the coefficient space is small (q^h <= 2^16), an exhaustive sweep,
//!    which decides the question with certainty;
//! 3. otherwise polynomial identity testing over an extension field
//!    F_{p^e}: M and N are isomorphic over the ground field iff they are
//!    isomorphic over an extension, and the determinant-product of a
//!    generic hom combination is a nonzero polynomial exactly when an
//!    isomorphism exists. Enough random evaluations push the false-negative
//!    probability below 2^-40. False positives cannot occur: any combination
//!    reported invertible has been verified invertible exactly.
//!
//! All randomness is drawn from a caller-seeded ChaCha stream, so results
//! are reproducible.

use super::hom::{hom_basis, top_type};
use super::{projective_module, Rep, RepMap, SimpleMultiset};
use crate::linalg::field::{Field, MAX_EXT_DEGREE};
use crate::linalg::mat::Mat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PROBES: usize = 32;
const EXHAUSTIVE_LIMIT: u128 = 1 << 16;
const CONFIDENCE_BITS: f64 = 40.0;

/// Blocks of the hom basis, lifted from a prime field into an extension:
/// residues embed as constant polynomials.
fn lift_blocks(basis: &[RepMap], ext: Field) -> Vec<Vec<Mat>> {
    basis
        .iter()
        .map(|f| {
            f.blocks()
                .iter()
                .map(|b| Mat::from_fn(ext, b.rows(), b.cols(), |r, c| ext.from_prime_subfield(b.get(r, c))))
                .collect()
        })
        .collect()
}

fn clone_blocks(basis: &[RepMap]) -> Vec<Vec<Mat>> {
    basis.iter().map(|f| f.blocks().to_vec()).collect()
}

fn combo_is_invertible(blocks: &[Vec<Mat>], coeffs: &[u64], field: Field) -> bool {
    let vertex_count = blocks[0].len();
    for v in 0..vertex_count {
        let mut acc = Mat::zero(field, blocks[0][v].rows(), blocks[0][v].cols());
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                acc = acc.add(&blocks[i][v].scale(c));
            }
        }
        if !acc.is_invertible() {
            return false;
        }
    }
    true
}

fn random_trials(blocks: &[Vec<Mat>], field: Field, trials: usize, rng: &mut ChaCha8Rng) -> bool {
    let q = field.order();
    for _ in 0..trials {
        let coeffs: Vec<u64> = (0..blocks.len()).map(|_| rng.gen_range(0..q)).collect();
        if combo_is_invertible(blocks, &coeffs, field) {
            return true;
        }
    }
    false
}

/// ceil(40 / log2(q / d)) trials drive the miss probability below 2^-40.
fn trials_for(q: u64, total_dim: usize) -> Option<usize> {
    let ratio = q as f64 / total_dim.max(1) as f64;
    if ratio <= 1.0 {
        return None;
    }
    Some((CONFIDENCE_BITS / ratio.log2()).ceil() as usize)
}

/// Decide whether two representations are isomorphic. Deterministic for a
/// fixed seed; an affirmative answer is always certified by an explicit
/// invertible map, and a negative answer is exact whenever the exhaustive
/// sweep ran (otherwise it holds up to probability 2^-40).
pub fn is_isomorphic(m: &Rep, n: &Rep, seed: u64) -> bool {
    assert_eq!(m.alg(), n.alg(), "isomorphism requires a common algebra");
    if m.dims() != n.dims() {
        return false;
    }
    if m.is_zero() {
        return true;
    }
    let basis = hom_basis(m, n);
    if basis.is_empty() {
        return false;
    }
    let field = m.alg().field();
    let q = field.order();
    let h = basis.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ground_blocks = clone_blocks(&basis);
    if random_trials(&ground_blocks, field, PROBES, &mut rng) {
        return true;
    }
    // exhaustive sweep when the coefficient space is small
    let space = (q as u128).checked_pow(h.min(127) as u32).unwrap_or(u128::MAX);
    if space <= EXHAUSTIVE_LIMIT {
        let mut coeffs = vec![0u64; h];
        for _ in 1..space {
            // odometer increment in base q
            for digit in coeffs.iter_mut() {
                *digit += 1;
                if *digit == q {
                    *digit = 0;
                } else {
                    break;
                }
            }
            if combo_is_invertible(&ground_blocks, &coeffs, field) {
                return true;
            }
        }
        return false;
    }
    // polynomial identity testing; over prime fields move to an extension
    // large enough that each trial hits with probability >= 1/2
    let d = m.total_dim();
    if field.degree() == 1 {
        for e in 2..=MAX_EXT_DEGREE as u32 {
            if let Ok(ext) = Field::extension(field.characteristic(), e) {
                if let Some(trials) = trials_for(ext.order(), 2 * d) {
                    let lifted = lift_blocks(&basis, ext);
                    return random_trials(&lifted, ext, trials, &mut rng);
                }
            }
        }
    } else if let Some(trials) = trials_for(q, 2 * d) {
        return random_trials(&ground_blocks, field, trials, &mut rng);
    }
    // the field cannot outgrow the degree bound: exhaust (sound, possibly slow)
    let mut coeffs = vec![0u64; h];
    loop {
        let mut carried = true;
        for digit in coeffs.iter_mut() {
            *digit += 1;
            if *digit == q {
                *digit = 0;
            } else {
                carried = false;
                break;
            }
        }
        if carried {
            return false;
        }
        if combo_is_invertible(&ground_blocks, &coeffs, field) {
            return true;
        }
    }
}

/// Split off indecomposable projective direct summands greedily until none
/// remain, returning the projective-free core and the multiset of stripped
/// P(v). Complete by Krull-Schmidt: P(v) is a summand of M iff some pair
/// from the hom bases composes to a unit of the local ring End P(v), so
/// scanning basis pairs never misses a summand.
pub fn strip_projective_summands(m: &Rep) -> (Rep, SimpleMultiset) {
    let alg = m.alg().clone();
    let mut current = m.clone();
    let mut stripped = SimpleMultiset::new(alg.vertex_count());
    'again: loop {
        if current.is_zero() {
            break;
        }
        let t = top_type(&current);
        for v in 0..alg.vertex_count() {
            if t.multiplicity(v) == 0 {
                continue;
            }
            let pv = projective_module(&alg, v);
            let into = hom_basis(&pv, &current);
            let out = hom_basis(&current, &pv);
            for f in &into {
                for g in &out {
                    let u = f.then(g);
                    if !u.is_isomorphism_map() {
                        continue;
                    }
                    let u_inv = u.inverse().expect("checked invertible");
                    let e = g.then(&u_inv).then(f);
                    let (rest, _) = e.kernel();
                    stripped.add(v, 1);
                    current = rest;
                    continue 'again;
                }
            }
        }
        break;
    }
    (current, stripped)
}
