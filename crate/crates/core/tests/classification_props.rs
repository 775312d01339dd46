mod common;

use proptest::prelude::*;
use trivlim_core::classification::{
    h1_of_square, is_globally_generated, is_limit_of_trivial, is_simple, lemma1_h0_formula,
    simple_decomposition, split_criterion, LimitReason,
};
use trivlim_core::riemann_roch::hyperelliptic_divisor;
use trivlim_core::sampling::{random_divisor, random_effective_divisor, random_principal_divisor, random_simple_divisor, rng};
use trivlim_core::{h0, Divisor, DivisorClass, Error};

#[test]
fn simple_twist_formula_against_solver() {
    let mut count = 0;
    for (ci, c) in common::curves().iter().enumerate() {
        let g = c.genus();
        let mut r = rng(1000 + ci as u64, 0);
        for i in 0..40 {
            let k = (i as i64) % (g + 1);
            let d = random_simple_divisor(c, (i as i64 / 3) % (g - k + 1), &mut r).unwrap();
            assert!(is_simple(c, &d).unwrap());
            let expected = lemma1_h0_formula(c, k, &d).unwrap();
            assert_eq!(h0(c, &(&hyperelliptic_divisor(k) + &d)).unwrap(), expected, "k = {k}, D = {d}");
            count += 1;
        }
    }
    assert!(count >= 200);
}

#[test]
fn decomposition_is_unique() {
    for (ci, c) in common::curves().iter().enumerate() {
        let mut r = rng(1100 + ci as u64, 0);
        for i in 0..20 {
            let l = random_effective_divisor(c, (i % (c.genus() as usize + 1)) as i64, &mut r).unwrap();
            let dec = simple_decomposition(c, &l).unwrap();
            assert!(is_simple(c, &dec.d).unwrap());
            assert_eq!(dec.d.degree() + 2 * dec.k, l.degree());
            let rebuilt = &hyperelliptic_divisor(dec.k) + &dec.d;
            assert_eq!(c.class_of(&rebuilt).unwrap(), c.class_of(&l).unwrap());
            let again = simple_decomposition(c, &rebuilt).unwrap();
            assert_eq!((again.k, again.class), (dec.k, dec.class));
        }
    }
}

#[test]
fn brute_force_scan_agrees() {
    let c = common::test_curve(101, 3);
    let dec = simple_decomposition(&c, &Divisor::infinity(3)).unwrap();
    let mut j = 0;
    while h0(&c, &(&Divisor::infinity(3) - &hyperelliptic_divisor(j + 1))).unwrap() > 0 {
        j += 1;
    }
    assert_eq!((dec.k, dec.d), (j, Divisor::infinity(1)));
    let c2 = common::test_curve(101, 2);
    assert!(matches!(simple_decomposition(&c2, &Divisor::infinity(3)), Err(Error::Hypothesis(_))));
}

#[test]
fn global_generation_sieve() {
    for (ci, c) in common::curves().iter().enumerate() {
        let mut r = rng(1200 + ci as u64, 0);
        for i in 0..25 {
            let deg = (i % (c.genus() as usize + 1)) as i64;
            let l = random_divisor(c, deg, &mut r).unwrap();
            let power = c.class_of(&l).unwrap().is_power_of_h().is_some();
            let gg = is_globally_generated(c, &l).unwrap();
            assert!(!gg || power, "L = {l} is gg but not a power of H");
            if power {
                // |kH| with 2k <= g is the pullback pencil system, base point free
                assert!(gg, "L = {l}");
            }
        }
    }
}

#[test]
fn count_for_powers_of_h() {
    for c in common::curves() {
        for k in 0..=c.genus() / 2 {
            let e = h0(&c, &hyperelliptic_divisor(2 * k)).unwrap() + h0(&c, &Divisor::zero()).unwrap();
            assert_eq!(e, 2 * k + 2);
            assert_eq!(h0(&c, &hyperelliptic_divisor(k)).unwrap(), k + 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn verdict_is_invariant_under_equivalence(seed in any::<u64>(), ci in 0usize..6, deg in -5i64..=6) {
        let c = &common::curves()[ci];
        let mut r = rng(seed, 3);
        let d = random_divisor(c, deg, &mut r).unwrap();
        if let Some((_, div)) = random_principal_divisor(c, &mut r).unwrap() {
            let a = is_limit_of_trivial(c, &c.class_of(&d).unwrap()).unwrap();
            let b = is_limit_of_trivial(c, &c.class_of(&(&d + &div)).unwrap()).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn verdict_is_coherent(seed in any::<u64>(), ci in 0usize..6, deg in -5i64..=9) {
        let c = &common::curves()[ci];
        let a = trivlim_core::picard::random_class(c, deg, seed).unwrap();
        let v = is_limit_of_trivial(c, &a).unwrap();
        let pos = if deg < 0 { c.class_neg(&a).unwrap() } else { a.clone() };
        match v.reason {
            LimitReason::PowerOfH => prop_assert_eq!(v.k, pos.is_power_of_h()),
            LimitReason::DegreeAtLeastGPlus1 => prop_assert!(deg.abs() > c.genus()),
            LimitReason::NotClassified => {
                prop_assert!(deg.abs() <= c.genus() && pos.is_power_of_h().is_none())
            }
        }
        prop_assert_eq!(v.is_limit, v.reason != LimitReason::NotClassified);
    }

    #[test]
    fn split_criterion_matches_solver(seed in any::<u64>(), ci in 0usize..6, deg in -2i64..=9) {
        let c = &common::curves()[ci];
        let mut r = rng(seed, 4);
        let d = random_divisor(c, deg, &mut r).unwrap();
        let crit = split_criterion(c, &c.class_of(&d).unwrap()).unwrap();
        prop_assert_eq!(crit, h1_of_square(c, &d).unwrap() == 0);
        if deg >= c.genus() {
            prop_assert!(crit);
        }
    }
}

#[test]
fn split_criterion_on_powers_of_h() {
    for c in common::curves() {
        let g = c.genus();
        for k in 1..g {
            let crit = split_criterion(&c, &DivisorClass::h_power(&c, k)).unwrap();
            assert_eq!(crit, h1_of_square(&c, &hyperelliptic_divisor(k)).unwrap() == 0);
            // K - 2kH = (g - 1 - 2k) H is effective exactly when 2k <= g - 1
            assert_eq!(crit, 2 * k > g - 1, "g = {g}, k = {k}");
        }
    }
}
