//! Randomized consistency checks for the condition deciders: every
//! constructed syzygy has the R_n property, the R_n categories are
//! resolving, torsionfree modules are never refuted as syzygies, and the
//! G_n(k) bound transfers from the algebra to its syzygy modules.

use std::sync::Arc;
use syzygy_core::conditions::{check_gnk, rn_property, syzygy_membership, verify_lemma21, Side};
use syzygy_core::corpus::{entries, linear_an, loop_algebra, random_module, random_ses};
use syzygy_core::homological::{is_n_torsionfree, is_torsionless};
use syzygy_core::rep::{injective_module, projective_module, regular_module, Rep};
use syzygy_core::resolutions::{min_resolution, proj_dim, syzygy_n, Direction};
use syzygy_core::Field;

#[test]
fn constructed_syzygies_have_the_rn_property() {
    let field = Field::prime(2).unwrap();
    for entry in entries(field) {
        for seed in 0..6 {
            let m = random_module(&entry.alg, 3, seed);
            for n in 1..=3 {
                let a = syzygy_n(&m, n);
                if a.is_zero() {
                    continue;
                }
                let report = rn_property(&a, n);
                assert!(report.holds, "{} seed {seed} n {n}", entry.name);
            }
        }
    }
}

#[test]
fn torsionfree_modules_are_never_refuted_as_syzygies() {
    let field = Field::prime(2).unwrap();
    for entry in entries(field) {
        for seed in 50..56 {
            let m = random_module(&entry.alg, 3, seed);
            if m.is_zero() {
                continue;
            }
            for n in 1..=3 {
                if is_n_torsionfree(&m, n) {
                    let verdict = syzygy_membership(&m, n, None, 8);
                    assert!(!verdict.is_no(), "{} seed {seed} n {n}", entry.name);
                }
            }
        }
    }
}

#[test]
fn rn_categories_are_resolving() {
    let field = Field::prime(2).unwrap();
    for entry in entries(field) {
        // contain the projectives
        for v in 0..entry.alg.vertex_count() {
            for n in 1..=4 {
                assert!(rn_property(&projective_module(&entry.alg, v), n).holds);
            }
        }
        // extension closure, and kernels of epimorphisms in the sharper
        // form: B in R_n and C in R_{n-1} put A in R_n
        for seed in 0..12 {
            let s = random_ses(&entry.alg, 3, seed);
            for n in 1..=3 {
                if rn_property(s.a(), n).holds && rn_property(s.c(), n).holds {
                    assert!(rn_property(s.b(), n).holds, "{} seed {seed} n {n}", entry.name);
                }
                if rn_property(s.b(), n).holds && rn_property(s.c(), n - 1).holds {
                    assert!(rn_property(s.a(), n).holds, "{} seed {seed} n {n}", entry.name);
                }
            }
        }
    }
}

#[test]
fn random_sequences_pass_the_injective_term_inclusions() {
    let field = Field::prime(2).unwrap();
    for entry in entries(field) {
        for seed in 200..217 {
            let s = random_ses(&entry.alg, 3, seed);
            let r = verify_lemma21(&s, 3);
            assert!(r.ok, "{} seed {seed}: {:?}", entry.name, r.violation);
        }
    }
}

fn term_modules(m: &Rep, depth: usize) -> Vec<Rep> {
    min_resolution(m, Direction::Injective, depth)
        .terms
        .iter()
        .map(|t| {
            let parts: Vec<Rep> = t
                .summands
                .counts()
                .iter()
                .enumerate()
                .flat_map(|(v, &mult)| (0..mult).map(move |_| v))
                .map(|v| injective_module(m.alg(), v))
                .collect();
            let refs: Vec<&Rep> = parts.iter().collect();
            Rep::direct_sum(&refs)
        })
        .collect()
}

#[test]
fn gnk_bounds_transfer_to_syzygy_modules() {
    // once pd I_j(R) <= j + k holds for the algebra, every n-th syzygy A
    // inherits pd I_i(A) <= i + k in the checked range
    let field = Field::prime(2).unwrap();
    let n = 3;
    for entry in entries(field) {
        let table = check_gnk(&entry.alg, Side::Left, n, 9, 8);
        assert!(table.verdict.is_yes(), "{}: k = 9 should absorb everything", entry.name);
        let k = table
            .pd_table
            .iter()
            .enumerate()
            .map(|(i, d)| d.as_finite().unwrap().saturating_sub(i))
            .max()
            .unwrap_or(0);
        for seed in 0..6 {
            let a = syzygy_n(&random_module(&entry.alg, 3, seed), n);
            if a.is_zero() {
                continue;
            }
            for (i, term) in term_modules(&a, n).into_iter().enumerate() {
                let pd = proj_dim(&term, 8).as_finite();
                assert!(
                    pd.is_some() && pd.unwrap() <= i + k,
                    "{} seed {seed}: pd I_{i} = {pd:?} > {i} + {k}",
                    entry.name
                );
            }
        }
    }
}

#[test]
fn gorenstein_algebras_equate_rn_and_torsionless_in_degree_one() {
    // the sampled shadow of the category equality R_1 = Omega_1 = T_1
    // over algebras that are G_n(1) on the relevant side
    let field = Field::prime(2).unwrap();
    for alg in [linear_an(2, field), loop_algebra(2, field), loop_algebra(3, field)] {
        assert!(check_gnk(&alg, Side::Left, 2, 1, 8).verdict.is_yes());
        for seed in 0..12 {
            let m = random_module(&alg, 3, seed);
            if m.is_zero() {
                continue;
            }
            assert_eq!(rn_property(&m, 1).holds, is_torsionless(&m), "dims {:?}", m.dims());
        }
    }
    // sanity: the regular module always witnesses both sides positively
    let alg = linear_an(2, field);
    let reg = regular_module(&alg);
    assert!(rn_property(&reg, 1).holds && is_torsionless(&reg));
    let _ = Arc::strong_count(&alg);
}
