mod common;

use num_traits::One;
use scb_core::analyzer::select_root;
use scb_core::arith::{rat, Rational};
use scb_core::methods::{catalog, known_value, KnownValue, RootSelector};
use scb_core::poly::{isolate_real_roots, root_condition, schur_cohn_strict, RationalPoly, RootCondition};

#[test]
fn sturm_and_root_counts_on_random_polys() {
    common::random_poly_suite(500, 7).unwrap();
}

#[test]
fn constructed_rational_roots_are_found() {
    common::constructed_roots(200, 11).unwrap();
}

#[test]
fn bdf3_polynomial_roots() {
    let Some(KnownValue::RootOf { poly, .. }) = known_value("bdf3") else { panic!() };
    let roots: Vec<f64> = isolate_real_roots(&poly).iter().map(|r| r.refine(&rat(1, 1_000_000_000)).approx()).collect();
    let want = [0.831264155297, 1.22747, 6.42689, 95.556];
    assert_eq!(roots.len(), want.len());
    for (r, w) in roots.iter().zip(want) {
        assert!((r - w).abs() < 1e-3 * w.max(1.0), "{r} vs {w}");
    }
}

#[test]
fn known_selectors_pick_known_values() {
    for name in ["bdf3", "bdf4", "bdf5", "bdf6"] {
        let Some(KnownValue::RootOf { poly, selector, approx }) = known_value(name) else { panic!() };
        let r = select_root(&poly, selector).unwrap().refine(&rat(1, 1_000_000_000_000_000));
        let a = scb_core::arith::parse_rational(approx).unwrap();
        // the reference digits are rounded down
        assert!(r.lo >= a && r.hi <= &a + common::last_place(approx), "{name}");
    }
    let Some(KnownValue::RootOf { poly, .. }) = known_value("bdf5") else { panic!() };
    assert!(select_root(&poly, RootSelector::Unique).is_err());
}

#[test]
fn bdf4_char_poly_double_root_only_at_seven_twelfths() {
    let m = catalog("bdf4").unwrap();
    let disc = m.char_param_poly().discriminant();
    let positive: Vec<_> = isolate_real_roots(&disc.to_integer_primitive())
        .into_iter()
        .filter(|r| r.cmp_rational(&Rational::from_integer(0.into())).is_gt())
        .collect();
    assert_eq!(positive.len(), 1);
    assert!(positive[0].contains(&rat(7, 12)) || positive[0].is_root_of(&RationalPoly::from_ascending(vec![rat(-7, 12), Rational::one()])));
    let p = m.char_poly_mu(&rat(7, 12)).unwrap();
    assert!(p.gcd(&p.derivative()).deg() >= 1);
}

fn from_roots(roots: &[(Rational, usize)]) -> RationalPoly {
    let mut p = RationalPoly::one();
    for (r, m) in roots {
        for _ in 0..*m {
            p = p.mul(&RationalPoly::from_ascending(vec![-r.clone(), Rational::one()]));
        }
    }
    p
}

/// `z^2 - 2 a z + r^2` has the conjugate pair of modulus `r`.
fn pair(a: Rational, r2: Rational) -> RationalPoly {
    RationalPoly::from_ascending(vec![r2, rat(-2, 1) * a, Rational::one()])
}

#[test]
fn root_condition_against_constructed_roots() {
    let inside = from_roots(&[(rat(1, 2), 1), (rat(-9, 10), 2)]).mul(&pair(rat(1, 3), rat(1, 4)));
    assert_eq!(root_condition(&inside), RootCondition::SatisfiedStrictly);
    assert!(schur_cohn_strict(&inside));

    let simple_on_circle = from_roots(&[(rat(1, 1), 1), (rat(-1, 1), 1)]).mul(&pair(rat(3, 5), rat(1, 1)));
    assert_eq!(root_condition(&simple_on_circle), RootCondition::Satisfied);
    assert!(!schur_cohn_strict(&simple_on_circle));

    let double_on_circle = from_roots(&[(rat(1, 1), 2), (rat(1, 5), 1)]);
    assert_eq!(root_condition(&double_on_circle), RootCondition::Violated);

    let double_pair = pair(rat(0, 1), rat(1, 1)).pow(2);
    assert_eq!(root_condition(&double_pair), RootCondition::Violated);

    let outside = from_roots(&[(rat(101, 100), 1), (rat(1, 2), 1)]);
    assert_eq!(root_condition(&outside), RootCondition::Violated);
    assert!(!schur_cohn_strict(&outside));

    let double_inside = from_roots(&[(rat(1, 2), 3)]).mul(&pair(rat(-1, 2), rat(99, 100)));
    assert_eq!(root_condition(&double_inside), RootCondition::SatisfiedStrictly);
}

#[test]
fn catalog_rho_satisfies_root_condition() {
    for name in scb_core::methods::catalog::NAMES {
        let rho = catalog(name).unwrap().generating_polys().rho;
        assert_eq!(root_condition(&rho), RootCondition::Satisfied, "{name}");
    }
}
