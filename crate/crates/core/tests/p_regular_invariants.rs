//! Regularity-structure invariants: the alternating-sum test across the
//! small grid, closure of the regular-function ring under products, lifted
//! congruences at two levels agreeing with each other, full polynomial-fit
//! sweeps, and the 2-adic congruences over the whole supported range.

mod common;

use common::prime;
use num_integer::Integer;
use std::str::FromStr;
use usequence_core::exactnum::{Int, Rat};
use usequence_core::p_regular::{
    check_cor42, check_p_regular, check_regular_values, check_thm41, check_thm43, check_thm45,
    f42, fit_thm44, Cor42Part, RegularFunctionSpec,
};
use usequence_core::report::params;
use usequence_core::SeqStore;

#[test]
fn regular_grid_n4() {
    let store = SeqStore::new();
    for p in [3u64, 5, 7] {
        for b in [0u32, 2, 4] {
            let spec = RegularFunctionSpec::new(prime(p), b);
            let r = check_p_regular(&store, &spec, 4);
            assert!(r.pass, "p={p} b={b}: {} vs {}", r.lhs, r.rhs);
        }
    }
}

#[test]
fn product_of_regular_functions_is_regular() {
    let store = SeqStore::new();
    let spec = RegularFunctionSpec::new(prime(5), 0);
    let squares: Vec<Rat> = (0..=3u32).map(|k| {
        let v = f42(&store, &spec, k);
        &v * &v
    }).collect();
    let r = check_regular_values(
        "ring-closure",
        params([("p", "5".into()), ("b", "0".into())]),
        &prime(5),
        &squares,
        3,
    );
    assert!(r.pass, "{} vs {}", r.lhs, r.rhs);
}

#[test]
fn lifted_congruence_grid() {
    let store = SeqStore::new();
    for p in [3u64, 5, 7] {
        for b in [0u32, 2, 4] {
            for m in 1..=2u32 {
                for k in 1..=5u32 {
                    let r = check_thm43(&store, &prime(p), k, m, 1, b);
                    assert!(r.pass, "p={p} k={k} m={m} b={b}: {} vs {}", r.lhs, r.rhs);
                }
            }
        }
    }
    //  higher orders, k >= n
    for p in [3u64, 5, 7] {
        for b in [0u32, 2] {
            for m in 1..=2u32 {
                for n in 2..=3u32 {
                    for k in n..=5u32 {
                        let r = check_thm43(&store, &prime(p), k, m, n, b);
                        assert!(r.pass, "p={p} k={k} m={m} n={n} b={b}");
                    }
                }
            }
        }
    }
}

#[test]
fn one_step_lift_agrees_with_bottom_congruence() {
    let store = SeqStore::new();
    for p in [3u64, 5, 7] {
        for b in [0u32, 2] {
            for m in 1..=2u32 {
                for k in 1..=3u32 {
                    let lift = check_thm45(&store, &prime(p), k, m, b);
                    let bottom = check_thm43(&store, &prime(p), k, m, 1, b);
                    assert!(lift.pass && bottom.pass, "p={p} k={k} m={m} b={b}");
                    //  the lifted residue reduced one level down must equal
                    //  the bottom congruence's U-residue
                    let lifted = Int::from_str(&lift.lhs).unwrap();
                    let bottom_u =
                        Int::from_str(bottom.lhs.split(';').nth(1).unwrap()).unwrap();
                    let pm = Int::from(p).pow(m);
                    assert_eq!(lifted.mod_floor(&pm), bottom_u, "p={p} k={k} m={m} b={b}");
                }
            }
        }
    }
}

#[test]
fn polynomial_fit_sweep() {
    let store = SeqStore::new();
    for p in [3u64, 5, 7] {
        for b in [0u32, 2] {
            for n in 1..=(p.min(4) as u32) {
                let fit = fit_thm44(&store, &prime(p), n, b).unwrap();
                assert_eq!(fit.coefficients.len(), n as usize);
            }
        }
    }
}

#[test]
fn two_adic_full_range() {
    let store = SeqStore::new();
    store.u(400);
    for n in 3..=200u32 {
        let r = check_thm41(&store, n);
        assert!(r.pass, "n={n}: {} vs {}", r.lhs, r.rhs);
    }
}

#[test]
fn explicit_polynomials_to_50() {
    let store = SeqStore::new();
    store.u(202);
    for k in 1..=50u32 {
        assert!(check_cor42(&store, k, Cor42Part::I).pass, "part i k={k}");
        assert!(check_cor42(&store, k, Cor42Part::III).pass, "part iii k={k}");
        if k >= 2 {
            assert!(check_cor42(&store, k, Cor42Part::II).pass, "part ii k={k}");
        }
    }
}
