//! Randomized cross-module properties.

use cnt_core::geometry::{embed, inner, pairing, periodicity_vectors, FRAME_A, KVector};
use cnt_core::lattice::{honeycomb_generators, LatticePoint, TranslationVector};
use cnt_core::nanotube::{analyze, canonicalize, same_class, word_coords, ChiralityData, TubeClass};
use cnt_core::spectrum::{dispersion, dispersion_cos};
use cnt_core::symgroup::SymGroup;
use proptest::prelude::*;

fn lattice_point() -> impl Strategy<Value = LatticePoint> {
    (-60i64..=60, -60i64..=60, 0i64..=1)
        .prop_map(|(v0, v1, s)| LatticePoint::new(v0, v1, s - v0 - v1).unwrap())
}

fn translation() -> impl Strategy<Value = TranslationVector> {
    (-100i64..=100, -100i64..=100)
        .prop_map(|(u0, u1)| TranslationVector::new(u0, u1, -u0 - u1).unwrap())
}

fn chiral_tube() -> impl Strategy<Value = ChiralityData> {
    (-200i64..=200, -200i64..=200)
        .prop_filter_map("chiral, bounded components", |(a, b)| {
            let c = TranslationVector::new(a, b, -a - b).ok()?;
            if c.is_zero() || c.coords().iter().any(|x| x.abs() > 200) {
                return None;
            }
            let cd = analyze(&c).ok()?;
            (cd.tube_class == TubeClass::Chiral).then_some(cd)
        })
}

fn zero_sum_k() -> impl Strategy<Value = KVector> {
    (
        -core::f64::consts::PI..core::f64::consts::PI,
        -core::f64::consts::PI..core::f64::consts::PI,
    )
        .prop_map(|(a, b)| KVector::new(a, b, -(a + b)).unwrap())
}

proptest! {
    #[test]
    fn metric_is_a_generator_invariant_metric(
        x in lattice_point(),
        y in lattice_point(),
        z in lattice_point(),
    ) {
        prop_assert_eq!(x.distance(&y), y.distance(&x));
        prop_assert_eq!(x.distance(&y) == 0, x == y);
        prop_assert!(x.distance(&z) <= x.distance(&y) + y.distance(&z));
        for g in honeycomb_generators() {
            prop_assert_eq!(g.apply(&x).distance(&g.apply(&y)), x.distance(&y));
        }
    }

    #[test]
    fn translations_are_isometries(
        x in lattice_point(),
        y in lattice_point(),
        u in translation(),
    ) {
        prop_assert_eq!(x.translate(&u).distance(&y.translate(&u)), x.distance(&y));
        prop_assert_eq!(x.translate(&u).epsilon(), x.epsilon());
    }

    #[test]
    fn inner_product_matches_embedding(u in translation(), v in translation()) {
        let lhs = inner(&u, &v);
        let rhs = FRAME_A * FRAME_A * embed(u.coords()).dot(&embed(v.coords()));
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + lhs.abs()));
    }

    #[test]
    fn periodicity_vectors_pair_integrally(u in translation()) {
        for (i, b) in periodicity_vectors().iter().enumerate() {
            let p = pairing(b, u.coords());
            let expect = 2.0 * core::f64::consts::PI * u.coords()[i] as f64;
            prop_assert!((p - expect).abs() <= 1e-9 * (1.0 + expect.abs()));
        }
    }

    #[test]
    fn chirality_invariant_chain(cd in chiral_tube()) {
        let c = cd.c.coords();
        let ct = cd.c_tilde.coords();
        // gcd and direction
        prop_assert_eq!(cd.c_tilde.scaled(cd.n), cd.c);
        // R rule
        let expect_r = if (ct[2] - ct[1]).rem_euclid(3) == 0 { 3 * cd.n } else { cd.n };
        prop_assert_eq!(cd.r, expect_r);
        // q in nZ and q~ consistency
        prop_assert_eq!(cd.q % cd.n, 0);
        prop_assert_eq!(cd.q_tilde * cd.n, cd.q);
        // q w - n t lands in Zc
        let lhs = cd.w.scaled(cd.q).sub(&cd.t.scaled(cd.n));
        prop_assert_eq!(lhs.coords()[0] % c[0], 0);
        prop_assert_eq!(lhs, cd.c.scaled(lhs.coords()[0] / c[0]));
        // R^2 |t|^2 = 3 |c|^2 exactly
        let t = cd.t.coords();
        let r2t2: i128 =
            (cd.r as i128).pow(2) * t.iter().map(|x| (*x as i128).pow(2)).sum::<i128>();
        let three_c2: i128 = 3 * c.iter().map(|x| (*x as i128).pow(2)).sum::<i128>();
        prop_assert_eq!(r2t2, three_c2);
    }

    #[test]
    fn factor_space_respects_chirality_shifts(
        cd in chiral_tube(),
        v in lattice_point(),
        j in -5i64..=5,
    ) {
        let shifted = v.translate(&cd.c.scaled(j));
        prop_assert!(same_class(&v, &shifted, &cd));
        prop_assert_eq!(canonicalize(&v, &cd), canonicalize(&shifted, &cd));
        let wc = word_coords(&v, &cd);
        let shift = cd.w.scaled(wc.s).add(&cd.c_tilde.scaled(wc.m)).add(&cd.c.scaled(wc.j));
        prop_assert_eq!(LatticePoint::new(wc.p, 0, 0).unwrap().translate(&shift), v);
        prop_assert!(0 <= wc.m && wc.m < cd.n);
    }

    #[test]
    fn group_action_is_a_homomorphism(
        cd in chiral_tube(),
        s1 in -20i64..=20, m1 in 0i64..=199, p1 in 0i64..=1,
        s2 in -20i64..=20, m2 in 0i64..=199, p2 in 0i64..=1,
        v in lattice_point(),
    ) {
        let group = SymGroup::new(&cd).unwrap();
        let g = group.word(s1, m1, p1);
        let h = group.word(s2, m2, p2);
        let x = canonicalize(&v, &cd);
        let gh = group.compose(&g, &h).unwrap();
        prop_assert_eq!(
            group.act(&gh, &x).unwrap(),
            group.act(&g, &group.act(&h, &x).unwrap()).unwrap()
        );
        prop_assert_eq!(group.compose(&g, &group.inverse(&g)).unwrap(), group.identity());
        prop_assert_eq!(group.factorize(&group.orbit_of_origin(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn dispersion_symmetries(k in zero_sum_k()) {
        let e = dispersion(&k);
        prop_assert!((0.0..=3.0 + 1e-12).contains(&e));
        prop_assert!((e - dispersion(&k.neg())).abs() <= 1e-12);
        prop_assert!((e - dispersion_cos(&k)).abs() <= 1e-12);
        for b in periodicity_vectors() {
            prop_assert!((e - dispersion(&k.add(&b))).abs() <= 1e-12);
        }
    }
}
