//! Randomized structural properties of the transpose and the duality:
//! Tr Tr is a stable involution, the k-dual exchanges projective and
//! injective dimensions, and over self-injective algebras every module
//! is totally reflexive.

use std::sync::Arc;
use syzygy_core::corpus::{cyclic_nakayama, entries, loop_algebra, random_module};
use syzygy_core::homological::{gorenstein_dim_zero, is_n_torsionfree, transpose, Bound};
use syzygy_core::rep::iso::{is_isomorphic, strip_projective_summands};
use syzygy_core::rep::k_dual;
use syzygy_core::resolutions::{inj_dim, proj_dim};
use syzygy_core::Field;

#[test]
fn double_transpose_is_a_stable_involution_on_random_modules() {
    let field = Field::prime(2).unwrap();
    let mut checked = 0;
    for entry in entries(field) {
        for seed in 0..30 {
            let m = random_module(&entry.alg, 3, seed);
            let (core, _) = strip_projective_summands(&m);
            if core.is_zero() {
                continue;
            }
            let trtr = transpose(&transpose(&core));
            let (trtr_core, _) = strip_projective_summands(&trtr);
            assert!(
                is_isomorphic(&trtr_core, &core, seed.wrapping_mul(97).wrapping_add(1)),
                "{}: seed {seed}, dims {:?} vs {:?}",
                entry.name,
                core.dims(),
                trtr_core.dims()
            );
            checked += 1;
        }
    }
    assert!(checked >= 30, "the corpus sweep went almost entirely projective ({checked})");
}

#[test]
fn k_dual_exchanges_projective_and_injective_dimension() {
    let field = Field::prime(3).unwrap();
    for entry in entries(field) {
        let op = Arc::new(entry.alg.opposite());
        for seed in 100..106 {
            let m = random_module(&entry.alg, 3, seed);
            if m.is_zero() {
                continue;
            }
            let dual = k_dual(&m, &op);
            assert_eq!(proj_dim(&m, 8), inj_dim(&dual, 8), "{} seed {seed}", entry.name);
            assert_eq!(inj_dim(&m, 8), proj_dim(&dual, 8), "{} seed {seed}", entry.name);
        }
    }
}

#[test]
fn self_injective_algebras_make_every_module_totally_reflexive() {
    let field = Field::prime(2).unwrap();
    for alg in [loop_algebra(2, field), loop_algebra(3, field), cyclic_nakayama(3, 2, field)] {
        for seed in 0..10 {
            let m = random_module(&alg, 3, seed);
            if m.is_zero() {
                continue;
            }
            let verdict = gorenstein_dim_zero(&m, Bound::Certified(0), Bound::Certified(0));
            assert!(verdict.is_yes(), "dims {:?}", m.dims());
            assert!(is_n_torsionfree(&m, 3), "dims {:?}", m.dims());
        }
    }
}
