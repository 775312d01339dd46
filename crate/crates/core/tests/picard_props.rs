mod common;

use proptest::prelude::*;
use trivlim_core::picard::{class_space_basis, h0_of_class, random_class};
use trivlim_core::riemann_roch::contains;
use trivlim_core::sampling::{random_divisor, random_principal_divisor, rng};
use trivlim_core::{h0, Divisor, DivisorClass};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn group_axioms(seed in any::<u64>(), ci in 0usize..6) {
        let c = &common::curves()[ci];
        let mut r = rng(seed, 0);
        let mut draw = |deg: i64| c.class_of(&random_divisor(c, deg, &mut r).unwrap()).unwrap();
        let (a, b, e) = (draw(1), draw(-2), draw(3));
        let id = DivisorClass::trivial_part(c, 0);
        prop_assert_eq!(
            c.class_add(&c.class_add(&a, &b).unwrap(), &e).unwrap(),
            c.class_add(&a, &c.class_add(&b, &e).unwrap()).unwrap()
        );
        prop_assert_eq!(c.class_add(&a, &b).unwrap(), c.class_add(&b, &a).unwrap());
        prop_assert_eq!(c.class_add(&a, &id).unwrap(), a.clone());
        prop_assert_eq!(c.class_add(&a, &c.class_neg(&a).unwrap()).unwrap(), id);
        prop_assert_eq!(c.class_mul(&a, 3).unwrap(), c.class_add(&a, &c.class_add(&a, &a).unwrap()).unwrap());
        prop_assert!(a.u().deg() <= c.genus());
    }

    #[test]
    fn linear_equivalence_invariance(seed in any::<u64>(), ci in 0usize..6) {
        let c = &common::curves()[ci];
        let mut r = rng(seed, 1);
        let d = random_divisor(c, 2, &mut r).unwrap();
        if let Some((_, div)) = random_principal_divisor(c, &mut r).unwrap() {
            prop_assert_eq!(c.class_of(&(&d + &div)).unwrap(), c.class_of(&d).unwrap());
        }
    }

    #[test]
    fn class_of_is_additive(seed in any::<u64>(), ci in 0usize..6) {
        let c = &common::curves()[ci];
        let mut r = rng(seed, 2);
        let d1 = random_divisor(c, 1, &mut r).unwrap();
        let d2 = random_divisor(c, -1, &mut r).unwrap();
        prop_assert_eq!(
            c.class_of(&(&d1 + &d2)).unwrap(),
            c.class_add(&c.class_of(&d1).unwrap(), &c.class_of(&d2).unwrap()).unwrap()
        );
    }
}

#[test]
fn power_of_h_matches_h0_in_degree_two() {
    for (ci, c) in common::curves().iter().enumerate() {
        let places = c.affine_places();
        let mut r = rng(700 + ci as u64, 0);
        let mut positives = 0;
        for i in 0..60 {
            // every third sample is a full fiber
            let d = if i % 3 == 0 {
                let p = places[i % places.len()];
                &Divisor::point(p) + &Divisor::point(c.involution(&p).unwrap())
            } else {
                random_divisor(c, 2, &mut r).unwrap()
            };
            let is_h = c.class_of(&d).unwrap().is_power_of_h() == Some(1);
            assert_eq!(is_h, h0(c, &d).unwrap() == 2, "D = {d}");
            positives += is_h as usize;
        }
        assert!(positives >= 20);
    }
}

#[test]
fn odd_degree_is_never_a_power_of_h() {
    let c = common::test_curve(101, 3);
    for seed in 0..30 {
        for deg in [-3, -1, 1, 3, 5] {
            assert_eq!(random_class(&c, deg, seed).unwrap().is_power_of_h(), None);
        }
    }
    for k in 0..=c.genus() {
        assert_eq!(DivisorClass::h_power(&c, k).is_power_of_h(), Some(k));
    }
}

#[test]
fn mumford_basis_lies_in_representative_space() {
    for (ci, c) in common::curves().iter().enumerate() {
        let mut r = rng(800 + ci as u64, 0);
        for i in 0..12 {
            let deg = (i % (2 * c.genus() as usize + 2)) as i64;
            let a = c.class_of(&random_divisor(c, deg, &mut r).unwrap()).unwrap();
            let Ok(rep) = a.representative(c) else { continue };
            assert_eq!(c.class_of(&rep).unwrap(), a);
            let basis = class_space_basis(c, &a).unwrap();
            assert_eq!(basis.len() as i64, h0_of_class(c, &a).unwrap());
            assert_eq!(basis.len() as i64, h0(c, &rep).unwrap());
            for h in &basis {
                assert!(contains(c, &rep, h).unwrap(), "{h} not in L({rep})");
            }
        }
    }
}

#[test]
fn degree_field_and_determinism() {
    let c = common::test_curve(101, 2);
    for d in -4..=6 {
        let a = random_class(&c, d, 9).unwrap();
        assert_eq!(a.degree(), d);
        assert_eq!(a, random_class(&c, d, 9).unwrap());
    }
}
