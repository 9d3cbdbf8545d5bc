//! Randomized property suites: transformation identities, the quasimodular
//! transformation law, modular relations, coefficient oracles, interval
//! soundness of the ball arithmetic, and recognition round-trips.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use onepi_core::algebraic::{rat, AlgebraicNumber, Rat};
use onepi_core::approx::AC;
use onepi_core::dyadic::Mag;
use onepi_core::hypergeom::{check_transformation, HGParams, Transformation};
use onepi_core::modular::{self, CaseTag};
use onepi_core::recognize::recognize_quadratic;
use onepi_core::series::{coefficient, CoefficientKind};

fn tol(digits: u32) -> Mag {
    Mag::from_rational(&Rat::new(BigInt::one(), BigInt::from(10).pow(digits)))
}

fn assert_residual_small(res: &AC, digits: u32, what: &str) {
    assert!(res.contains_zero(), "{what}: residual excludes zero");
    assert!(
        tol(digits).cmp_value(&res.mag_upper()) != std::cmp::Ordering::Less,
        "{what}: residual above 1e-{digits}"
    );
}

/// Random z with |z| <= 3/4 and moderate height.
fn z_strategy() -> impl Strategy<Value = Rat> {
    (-24i64..=24, 33i64..64).prop_map(|(n, d)| rat(n, d))
}

fn ab_strategy() -> impl Strategy<Value = (Rat, Rat)> {
    prop::sample::select(vec![
        (rat(1, 4), rat(1, 4)),
        (rat(1, 6), rat(1, 3)),
        (rat(1, 8), rat(3, 8)),
        (rat(1, 3), rat(1, 3)),
        (rat(1, 2), rat(1, 2)),
    ])
}

fn tau_strategy(prec: u32) -> impl Strategy<Value = AC> {
    ((-8i64..=8), (17i64..32)).prop_map(move |(re, im)| {
        AC::from_parts(&rat(re, 16), &rat(im, 16), prec)
    })
}

/// Random word in the generators of the unimodular group.
fn gamma_strategy() -> impl Strategy<Value = [i64; 4]> {
    prop::collection::vec(0u8..3, 1..5).prop_map(|word| {
        let (mut a, mut b, mut c, mut d) = (1i64, 0i64, 0i64, 1i64);
        for w in word {
            let (ga, gb, gc, gd) = match w {
                0 => (1, 1, 0, 1),  // translation
                1 => (1, -1, 0, 1), // inverse translation
                _ => (0, -1, 1, 0), // inversion
            };
            let (na, nb) = (a * ga + b * gc, a * gb + b * gd);
            let (nc, nd) = (c * ga + d * gc, c * gb + d * gd);
            (a, b, c, d) = (na, nb, nc, nd);
        }
        [a, b, c, d]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn clausen_identity_holds((a, b) in ab_strategy(), z in z_strategy()) {
        let res = check_transformation(&Transformation::Clausen { a, b, z }, 256).unwrap();
        assert_residual_small(&res, 60, "clausen");
    }

    #[test]
    fn euler_and_pfaff_transformations_hold((a, b) in ab_strategy(), z in z_strategy()) {
        let params = HGParams::new(a, b, Rat::one());
        let res = check_transformation(
            &Transformation::Euler { params: params.clone(), z: z.clone() },
            256,
        )
        .unwrap();
        assert_residual_small(&res, 60, "euler");
        let res = check_transformation(&Transformation::Pfaff { params, z }, 256).unwrap();
        assert_residual_small(&res, 60, "pfaff");
    }

    #[test]
    fn e2_transformation_law_holds(tau in tau_strategy(192), g in gamma_strategy()) {
        let res = modular::e2_transformation_residual(&tau, g, 192).unwrap();
        assert_residual_small(&res, 25, "e2 law");
    }

    #[test]
    fn modular_relations_hold(case_idx in 0usize..6, tau in tau_strategy(192)) {
        let case = CaseTag::all()[case_idx];
        let res = modular::modular_relation_residual(case, &tau, 192).unwrap();
        assert_residual_small(&res, 25, case.name());
    }

    #[test]
    fn coefficients_match_pochhammer_oracles(kind_idx in 0usize..4, n in 0usize..40) {
        // closed-form kinds against an independently coded rising-factorial
        // oracle: growth^n (x1)_n (x2)_n (x3)_n / n!^3
        let table: [(&str, i64, (i64, i64), (i64, i64), (i64, i64)); 4] = [
            ("binom2n3", 64, (1, 2), (1, 2), (1, 2)),
            ("binom4n", 256, (1, 4), (1, 2), (3, 4)),
            ("binom3n", 108, (1, 3), (1, 2), (2, 3)),
            ("factorial6", 1728, (1, 6), (1, 2), (5, 6)),
        ];
        let (name, growth, x1, x2, x3) = table[kind_idx];
        let kind = CoefficientKind::parse(name).unwrap();
        let mut oracle = Rat::one();
        for j in 0..n as i64 {
            let jr = rat(j, 1);
            oracle *= (rat(x1.0, x1.1) + &jr) * (rat(x2.0, x2.1) + &jr) * (rat(x3.0, x3.1) + &jr);
            oracle /= rat(j + 1, 1).pow(3);
            oracle *= rat(growth, 1);
        }
        prop_assert!(oracle.is_integer(), "{name} oracle not integral at n={n}");
        prop_assert_eq!(coefficient(kind, n), oracle.to_integer());
    }

    #[test]
    fn ball_arithmetic_contains_exact_values(
        pn in -50i64..=50, pd in 1i64..20, qn in -50i64..=50, qd in 1i64..20,
    ) {
        let p = rat(pn, pd);
        let q = rat(qn, qd);
        let zero = Rat::new(BigInt::from(0), BigInt::one());
        let pa = AC::from_rational(&p, 128);
        let qa = AC::from_rational(&q, 128);
        prop_assert!(pa.mul(&qa).contains_point(&(&p * &q), &zero));
        prop_assert!(pa.add(&qa).contains_point(&(&p + &q), &zero));
        prop_assert!(pa.sub(&qa).contains_point(&(&p - &q), &zero));
        if !q.numer().is_zero() {
            prop_assert!(pa.div(&qa).unwrap().contains_point(&(&p / &q), &zero));
        }
        // squaring a square root must recover the radicand
        let abs_p = if pn < 0 { -p } else { p };
        let root = AC::from_rational(&abs_p, 128).sqrt().unwrap();
        prop_assert!(root.mul(&root).contains_point(&abs_p, &zero));
    }

    #[test]
    fn quadratic_recognition_roundtrip(
        pn in -9i64..=9, qn in 1i64..=9, m_idx in 0usize..5,
    ) {
        let m = [2i64, 3, 5, 6, 7][m_idx];
        let planted = AlgebraicNumber::new(rat(pn, 7), rat(qn, 11), m);
        let x = planted.embed(320, 1).unwrap();
        let found = recognize_quadratic(&x, &BigInt::from(1_000_000u64))
            .unwrap()
            .expect("planted value not recognized");
        prop_assert_eq!(found, planted);
    }

    #[test]
    fn enclosures_shrink_monotonically(tau in tau_strategy(128)) {
        // the same quantity at doubled precision stays inside the coarse
        // enclosure
        let coarse = modular::s2(&tau, 128);
        prop_assume!(coarse.is_ok());
        let coarse = coarse.unwrap();
        let fine = modular::s2(&tau.with_prec(256), 256).unwrap();
        prop_assert!(
            coarse.contains_point(&fine.re.to_rational(), &fine.im.to_rational())
        );
    }
}
