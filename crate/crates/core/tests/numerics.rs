#![allow(clippy::excessive_precision)]

use approx::assert_relative_eq;
use proptest::prelude::*;
use qdot_core::numerics::{
    bessel_i0, bessel_i0_scaled, bessel_i1, bessel_i1_over_x_scaled, bessel_i1_scaled, elliptic_e, elliptic_k,
    elliptic_ke, gaussian_moment, integrate_1d, integrate_2d_polar, integrate_semi_infinite, EllipticModulus,
    NumericsError, PolarDomain, QuadSpec,
};
use qdot_core::wavefunction::DEFAULT_OMEGA;
use std::f64::consts::{FRAC_1_SQRT_2, PI};

// Values from a 40-digit evaluation of the defining power series.
const BESSEL_TABLE: [(f64, f64, f64); 6] = [
    (1.0, 1.266065877752008335598245, 0.565159103992485027207696),
    (2.0, 2.279585302336067267437204, 1.590636854637329063382254),
    (10.0, 2815.716628466254471469811, 2670.988303701254654341032),
    (15.0, 339649.3732979138795217016, 328124.9219702063967336982),
    (20.0, 43558282.55955353327210666, 42454973.38512777018140991),
    (30.0, 781672297823.9774897173898, 768532038938.9569994942947),
];

fn spec() -> QuadSpec {
    QuadSpec::default()
}

#[test]
fn bessel_at_zero() {
    assert_eq!(bessel_i0(0.0).unwrap(), 1.0);
    assert_eq!(bessel_i1(0.0).unwrap(), 0.0);
    assert_eq!(bessel_i1_over_x_scaled(0.0), 0.5);
}

#[test]
fn bessel_matches_high_precision_values() {
    for &(x, i0, i1) in &BESSEL_TABLE {
        assert_relative_eq!(bessel_i0(x).unwrap(), i0, max_relative = 2e-14);
        assert_relative_eq!(bessel_i1(x).unwrap(), i1, max_relative = 2e-14);
        assert_relative_eq!(bessel_i0_scaled(x), i0 * (-x).exp(), max_relative = 2e-14);
        assert_relative_eq!(bessel_i1_scaled(x), i1 * (-x).exp(), max_relative = 2e-14);
    }
}

#[test]
fn bessel_series_oracle_below_crossover() {
    // plain 60-term power series summed in f64
    let series = |x: f64, nu: i32| {
        let mut term = if nu == 0 { 1.0 } else { 0.5 * x };
        let mut sum = term;
        for k in 1..60 {
            term *= 0.25 * x * x / (k as f64 * (k + nu) as f64);
            sum += term;
        }
        sum
    };
    for x in [0.001, 0.3, 1.0, 4.5, 10.0, 14.99] {
        assert_relative_eq!(bessel_i0(x).unwrap(), series(x, 0), max_relative = 1e-14);
        assert_relative_eq!(bessel_i1(x).unwrap(), series(x, 1), max_relative = 1e-14);
    }
}

#[test]
fn bessel_derivative_identity() {
    // I0' = I1 at x = 2, central difference with one Richardson step
    let d = |h: f64| (bessel_i0(2.0 + h).unwrap() - bessel_i0(2.0 - h).unwrap()) / (2.0 * h);
    let est = (4.0 * d(5e-4) - d(1e-3)) / 3.0;
    assert_relative_eq!(est, bessel_i1(2.0).unwrap(), max_relative = 1e-10);
}

#[test]
fn bessel_recurrence_on_log_grid() {
    // I0 − I1′ − I1/x = 0, with I1′ from a five-point stencil
    for k in 0..20 {
        let x = 1e-3 * (30.0f64 / 1e-3).powf(k as f64 / 19.0);
        let h = 1e-3 * x.min(1.0);
        let i1 = |t: f64| bessel_i1(t).unwrap();
        let d = (i1(x - 2.0 * h) - 8.0 * i1(x - h) + 8.0 * i1(x + h) - i1(x + 2.0 * h)) / (12.0 * h);
        let i0 = bessel_i0(x).unwrap();
        let residual = (i0 - d - i1(x) / x) / i0;
        assert!(residual.abs() < 1e-10, "x = {x}: relative residual {residual:e}");
    }
}

#[test]
fn bessel_errors() {
    assert!(matches!(bessel_i0(-1.0), Err(NumericsError::Domain(_))));
    assert!(matches!(bessel_i1(800.0), Err(NumericsError::Range(_))));
    assert!(matches!(bessel_i0(f64::NAN), Err(NumericsError::Domain(_))));
}

#[test]
fn elliptic_at_zero_modulus() {
    let m = EllipticModulus::new(0.0).unwrap();
    assert_relative_eq!(elliptic_k(m), PI / 2.0, max_relative = 1e-15);
    assert_relative_eq!(elliptic_e(m), PI / 2.0, max_relative = 1e-15);
}

#[test]
fn elliptic_matches_high_precision_values() {
    let table = [
        (0.5, 1.685750354812596042871204, 1.467462209339427155459795),
        (FRAC_1_SQRT_2, 1.85407467730137191843385, 1.350643881047675502520175),
        (0.9, 2.280549138422770204613752, 1.171697052781614141185914),
    ];
    for (p, k, e) in table {
        let (kk, ee) = elliptic_ke(EllipticModulus::new(p).unwrap());
        assert_relative_eq!(kk, k, max_relative = 1e-14);
        assert_relative_eq!(ee, e, max_relative = 1e-14);
    }
}

#[test]
fn elliptic_matches_defining_integrals() {
    for p in [0.1, 0.5, FRAC_1_SQRT_2, 0.95] {
        let m = EllipticModulus::new(p).unwrap();
        let k = integrate_1d(|t| 1.0 / (1.0 - p * p * t.sin().powi(2)).sqrt(), 0.0, PI / 2.0, &spec()).unwrap();
        let e = integrate_1d(|t| (1.0 - p * p * t.sin().powi(2)).sqrt(), 0.0, PI / 2.0, &spec()).unwrap();
        assert!((k.value - elliptic_k(m)).abs() < 1e-12);
        assert!((e.value - elliptic_e(m)).abs() < 1e-12);
    }
}

#[test]
fn elliptic_domain() {
    assert!(EllipticModulus::new(1.0).is_err());
    assert!(EllipticModulus::new(-0.1).is_err());
    assert!(EllipticModulus::from_complement(0.0).is_err());
    let m = EllipticModulus::from_complement(1e-12).unwrap();
    // K ≈ ln(4/p′) near p = 1
    assert_relative_eq!(elliptic_k(m), (4.0f64 / 1e-12).ln(), max_relative = 1e-10);
}

proptest! {
    #[test]
    fn elliptic_e_never_exceeds_k(p in 0.0f64..0.999_999) {
        let (k, e) = elliptic_ke(EllipticModulus::new(p).unwrap());
        prop_assert!(e <= k);
        prop_assert!(e > 0.0);
    }

    #[test]
    fn polynomials_to_degree_twelve_are_exact(
        coeffs in prop::collection::vec(-1.0f64..1.0, 13),
        a in -2.0f64..0.0,
        width in 0.1f64..3.0,
    ) {
        let b = a + width;
        let f = |x: f64| coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c);
        let exact: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| c * (b.powi(k as i32 + 1) - a.powi(k as i32 + 1)) / (k as f64 + 1.0))
            .sum();
        let scale: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| c.abs() * (b.abs().max(a.abs())).powi(k as i32 + 1) / (k as f64 + 1.0))
            .sum();
        let got = integrate_1d(f, a, b, &spec()).unwrap().value;
        prop_assert!((got - exact).abs() <= 1e-12 * scale.max(1.0), "got {got}, exact {exact}");
    }
}

#[test]
fn trivial_quadratures() {
    assert_relative_eq!(integrate_1d(|_| 1.0, 0.0, 1.0, &spec()).unwrap().value, 1.0, max_relative = 1e-15);
    assert_eq!(integrate_1d(|_| 0.0, 0.0, 5.0, &spec()).unwrap().value, 0.0);
    assert_eq!(integrate_1d(|x| x.exp(), 2.0, 2.0, &spec()).unwrap().value, 0.0);
    let fwd = integrate_1d(|x| x * x, 0.0, 2.0, &spec()).unwrap().value;
    let rev = integrate_1d(|x| x * x, 2.0, 0.0, &spec()).unwrap().value;
    assert_relative_eq!(fwd, 8.0 / 3.0, max_relative = 1e-15);
    assert_eq!(rev, -fwd);
}

#[test]
fn gaussian_integrals() {
    let half = integrate_semi_infinite(|x| (-x * x).exp(), 0.0, &spec()).unwrap();
    assert!((half.value - PI.sqrt() / 2.0).abs() < 1e-12);
    let w = DEFAULT_OMEGA;
    let first = integrate_semi_infinite(|x| (-w * x * x).exp() * x, 0.0, &spec()).unwrap();
    assert!((first.value - 1.0 / (2.0 * w)).abs() < 1e-12);
    for n in 0..8 {
        let got = integrate_semi_infinite(|x| (-w * x * x).exp() * x.powi(n), 0.0, &spec()).unwrap();
        assert_relative_eq!(got.value, gaussian_moment(n as u32, w), max_relative = 1e-10);
    }
}

#[test]
fn quadrature_cross_checks_elliptic_k() {
    let k = integrate_1d(|t| 1.0 / (1.0 - 0.25 * t.sin().powi(2)).sqrt(), 0.0, PI / 2.0, &spec()).unwrap();
    assert!((k.value - elliptic_k(EllipticModulus::new(0.5).unwrap())).abs() < 1e-13);
}

#[test]
fn truncation_doubling_is_invisible() {
    let w = DEFAULT_OMEGA;
    let f = |x: f64| (-w * x * x).exp() * (1.0 + x + x.powi(4));
    let s = spec();
    let doubled = QuadSpec { truncation_radius: 2.0 * s.truncation_radius, ..s };
    let a = integrate_semi_infinite(f, 0.0, &s).unwrap().value;
    let b = integrate_semi_infinite(f, 0.0, &doubled).unwrap().value;
    assert!((a - b).abs() <= s.abs_tol.max(s.rel_tol * a.abs()), "{a} vs {b}");
}

#[test]
fn disk_area() {
    let area = integrate_2d_polar(|_| 1.0, &PolarDomain::disk((0.3, -0.2), 1.0), &spec()).unwrap();
    assert!((area.value - PI).abs() < 1e-12);
}

#[test]
fn invalid_spec_is_rejected() {
    let bad = spec().with_tolerances(0.0, 1e-12);
    assert!(bad.validate().is_err());
    assert!(integrate_1d(|x| x, 0.0, 1.0, &bad).is_err());
}

#[test]
fn non_finite_integrand_is_reported() {
    let r = integrate_1d(|x| if x > 0.5 { f64::NAN } else { 1.0 }, 0.0, 1.0, &spec());
    assert!(matches!(r, Err(NumericsError::NonFinite { .. })));
}
