mod common;

use common::asymptotic_coefficient;
use proptest::prelude::*;
use qdot_core::numerics::{bessel_i0, bessel_i1, integrate_semi_infinite};
use qdot_core::{QuadSpec, TripletParams, TripletState};

fn state() -> TripletState {
    TripletState::default()
}

fn spec() -> QuadSpec {
    QuadSpec::default()
}

#[test]
fn every_field_vanishes_at_origin() {
    let s = state();
    let b = s.field_bundle(0.0, &spec()).unwrap();
    for (name, v) in [
        ("e_ee", b.e_ee),
        ("e_H", b.e_h),
        ("e_xc", b.e_xc),
        ("Z", b.z),
        ("D", b.d),
        ("L", b.l),
        ("I_m", b.i_m),
        ("M", b.m),
    ] {
        assert!(v.abs() <= 1e-10, "{name} = {v}");
    }
    assert_eq!(s.kinetic_tensor(0.0).f, 0.0);
}

#[test]
fn bundle_invariants() {
    let s = state();
    for r in [0.3, 1.0, 2.0, 4.0, 6.0] {
        let b = s.field_bundle(r, &spec()).unwrap();
        assert!((b.e_ee - b.e_h - b.e_xc).abs() <= 1e-8);
        assert!((b.m + b.l + b.i_m).abs() <= 1e-12);
        let t = s.kinetic_tensor(r);
        let (xx, xy, yy) = t.cartesian(0.7);
        assert!((xx + yy - t.trace()).abs() <= 1e-14 * t.trace().abs());
        // off-diagonal element of (r_α r_β / r²) f
        assert!((xy - 0.7f64.sin() * 0.7f64.cos() * t.f).abs() <= 1e-15);
        let (xx0, xy0, yy0) = t.cartesian(0.0);
        assert_eq!((xx0, xy0, yy0), (t.f + t.k, 0.0, t.k));
    }
}

#[test]
fn small_r_electron_interaction_field() {
    let r: f64 = 0.2;
    assert!((state().field_ee(r) - (0.137 * r - 0.0360 * r.powi(3))).abs() < 1e-4);
}

#[test]
fn large_r_field_series() {
    let s = state();
    let r: f64 = 20.0;
    let ee = 1.0 / r.powi(2) - 0.0754 / r.powi(3) - 24.0 / r.powi(4);
    let h = 2.0 / r.powi(2) - 0.0287 / r.powi(3) + 16.3 / r.powi(4);
    let xc = -1.0 / r.powi(2) - 0.0467 / r.powi(3) - 40.3 / r.powi(4);
    assert!((s.field_ee(r) / ee - 1.0).abs() < 0.01);
    assert!((s.field_hartree(r, &spec()).unwrap().value / h - 1.0).abs() < 0.01);
    assert!((s.field_xc(r, &spec()).unwrap() / xc - 1.0).abs() < 0.01);
}

#[test]
fn hartree_field_tends_to_two_over_r_squared() {
    let s = state();
    let r: f64 = 30.0;
    assert!((s.field_hartree(r, &spec()).unwrap().value * r * r - 2.0).abs() < 0.04);
}

#[test]
#[ignore = "the 1/r^3 and 1/r^4 corrections still shift r^2 E_ee and r^2 E_xc by about 3% and 5% at r = 30"]
fn interaction_and_xc_fields_reach_their_limits_at_thirty() {
    let s = state();
    let r: f64 = 30.0;
    let ee = s.field_ee(r) * r * r;
    let xc = s.field_xc(r, &spec()).unwrap() * r * r;
    assert!((ee - 1.0).abs() < 0.02, "r² E_ee = {ee}");
    assert!((xc + 1.0).abs() < 0.02, "r² E_xc = {xc}");
}

#[test]
fn asymptotic_fields_approach_their_limits() {
    // the printed series with its own leading corrections accounts for the gap at r = 30
    let s = state();
    let r: f64 = 30.0;
    let ee = s.field_ee(r) * r * r;
    let xc = s.field_xc(r, &spec()).unwrap() * r * r;
    assert!((ee - (1.0 - 0.0754 / r - 24.0 / (r * r))).abs() < 0.002, "r² E_ee = {ee}");
    assert!((xc - (-1.0 - 0.0467 / r - 40.3 / (r * r))).abs() < 0.005, "r² E_xc = {xc}");
    let far: f64 = 45.0;
    let series = 1.0 - 0.0754 / far - 24.0 / (far * far);
    assert!((s.field_ee(far) * far * far - series).abs() < 0.001);
}

#[test]
fn hartree_field_matches_planar_coulomb_integral() {
    let s = state();
    for r in [0.5, 1.0, 2.0] {
        let ring = s.field_hartree(r, &spec()).unwrap().value;
        let direct = s.field_hartree_oracle(r, &spec()).unwrap().value;
        assert!((ring - direct).abs() < 1e-5, "r = {r}: {ring} vs {direct}");
    }
}

#[test]
fn interaction_field_matches_coulomb_law() {
    let s = state();
    for r in [0.5, 1.0, 2.0, 4.0] {
        let closed = s.field_ee(r);
        let direct = s.field_ee_oracle(r, &spec()).unwrap().value;
        assert!((closed - direct).abs() < 1e-5, "r = {r}: {closed} vs {direct}");
    }
}

/// (g₁, g₀) at separation x.
fn g_pair(p: &TripletParams, x: f64) -> (f64, f64) {
    let g0 = x * (1.0 + p.c2 * x + p.c3 * x * x + p.c4 * x * x * x);
    let g1 = 1.0 / x + 2.0 * p.c2 + 3.0 * p.c3 * x + 4.0 * p.c4 * x * x;
    (g1, g0)
}

#[test]
fn kinetic_integrals_match_their_defining_quadratures() {
    let s = state();
    let p = s.params;
    let w = p.omega;
    for r in [0.5, 1.0, 2.0] {
        let (f1, f2, f3) = s.kinetic_integrals(r);
        let q1 = integrate_semi_infinite(
            |x| {
                if x == 0.0 {
                    return 0.0;
                }
                let (g1, g0) = g_pair(&p, x);
                (g1 * g1 - g0 * g0 / x.powi(4)) * (-w * x * x).exp() * x * x * bessel_i1(2.0 * w * r * x).unwrap()
            },
            0.0,
            &spec(),
        )
        .unwrap()
        .value
            / r;
        let q2 = integrate_semi_infinite(
            |x| {
                if x == 0.0 {
                    return 0.0;
                }
                let (g1, g0) = g_pair(&p, x);
                x * g1 * g0 * (-w * x * x).exp() * bessel_i0(2.0 * w * r * x).unwrap()
            },
            0.0,
            &spec(),
        )
        .unwrap()
        .value;
        let q3 = integrate_semi_infinite(
            |x| {
                if x == 0.0 {
                    return 0.0;
                }
                let (_, g0) = g_pair(&p, x);
                (-w * x * x).exp() * g0 * g0 / x * bessel_i0(2.0 * w * r * x).unwrap()
            },
            0.0,
            &spec(),
        )
        .unwrap()
        .value;
        assert!((f1 - q1).abs() < 1e-8, "f1({r}): {f1} vs {q1}");
        assert!((f2 - q2).abs() < 1e-8, "f2({r}): {f2} vs {q2}");
        assert!((f3 - q3).abs() < 1e-8, "f3({r}): {f3} vs {q3}");
    }
}

#[test]
fn kinetic_tensor_matches_density_matrix_differences() {
    let s = state();
    for r in [0.5, 1.0, 2.0] {
        let t = s.kinetic_tensor(r);
        let (xx, yy) = s.kinetic_tensor_oracle(r, 1e-2, &spec()).unwrap();
        assert!((xx - (t.f + t.k)).abs() < 1e-5, "t_xx({r}): {xx} vs {}", t.f + t.k);
        assert!((yy - t.k).abs() < 1e-5, "t_yy({r}): {yy} vs {}", t.k);
    }
}

#[test]
fn kinetic_force_matches_divergence_of_numerical_tensor() {
    let s = state();
    let h = 1e-2;
    let dr = 1e-2;
    let tensor = |r: f64| s.kinetic_tensor_oracle(r, h, &spec()).unwrap();
    for r in [0.5, 1.0, 2.0] {
        let (xx, yy) = tensor(r);
        let (xp, _) = tensor(r + dr);
        let (xm, _) = tensor(r - dr);
        let f = xx - yy;
        let z = 2.0 * ((xp - xm) / (2.0 * dr) + f / r);
        let closed = s.kinetic_force(r);
        assert!((z - closed).abs() < 1e-4, "z({r}): {z} vs {closed}");
    }
}

#[test]
fn small_r_kinetic_force() {
    let r: f64 = 0.2;
    let z = state().kinetic_force(r);
    assert!((z - (0.00174 * r + 0.00811 * r.powi(3))).abs() < 2e-5);
}

fn printed_kinetic_series(r: f64, omega: f64) -> f64 {
    (-omega * r * r).exp()
        * 1e-5
        * (-0.0116 * r.powi(11) - 0.0860 * r.powi(10) + 0.218 * r.powi(9) - 0.0700 * r.powi(8) + 5.55 * r.powi(7))
}

#[test]
#[ignore = "the printed r^8 coefficient -0.0700 of the kinetic force series disagrees with the closed form, which gives 3.18"]
fn large_r_kinetic_force() {
    let s = state();
    let r = 10.0;
    let series = printed_kinetic_series(r, s.params.omega);
    let rel = s.kinetic_force(r) / series - 1.0;
    assert!(rel.abs() < 0.05, "relative deviation {rel}");
}

#[test]
fn printed_kinetic_force_coefficients_are_reproduced() {
    let s = state();
    let z = &s.forms.z;
    for (k, printed) in [(11, -0.0116), (10, -0.0860), (9, 0.218), (7, 5.55)] {
        let c = asymptotic_coefficient(z, k) * 1e5;
        assert!((c - printed).abs() < 0.006 * printed.abs(), "z r^{k}: {c} vs {printed}");
    }
    let c8 = asymptotic_coefficient(z, 8) * 1e5;
    assert!((c8 - 3.18).abs() < 0.01, "z r^8: {c8}");
    // with the corrected coefficient the series tracks the closed form
    let r: f64 = 15.0;
    let corrected =
        printed_kinetic_series(r, s.params.omega) + (-s.params.omega * r * r).exp() * 1e-5 * (c8 + 0.0700) * r.powi(8);
    assert!((s.kinetic_force(r) / corrected - 1.0).abs() < 0.005);
}

#[test]
fn kinetic_field_grows_at_large_r() {
    let s = state();
    // the two singular fields grow with opposite signs and cancel in their sum
    let (z10, z12) = (s.kinetic_field(10.0), s.kinetic_field(12.0));
    let (d10, d12) = (s.differential_density_field(10.0), s.differential_density_field(12.0));
    assert!(z12 < z10 && z10 < 0.0, "{z10} {z12}");
    assert!(d12 > d10 && d10 > 0.0, "{d10} {d12}");
    assert!((z12 + d12).abs() < 0.05 * d12);
    assert_eq!(s.kinetic_field(1.0), s.kinetic_force(1.0) / s.density(1.0));
}

#[test]
fn differential_density_field_matches_finite_differences() {
    let s = state();
    let h = 1e-2;
    let five = |f: &dyn Fn(f64) -> f64, r: f64| {
        (f(r - 2.0 * h) - 8.0 * f(r - h) + 8.0 * f(r + h) - f(r + 2.0 * h)) / (12.0 * h)
    };
    let rho = |r: f64| s.density(r);
    let d1 = |r: f64| five(&rho, r);
    let lap = |r: f64| five(&d1, r) + d1(r) / r;
    for r in [0.5, 1.0, 2.0] {
        let d = -0.25 * five(&lap, r);
        let field = d / s.density(r);
        assert!(
            (field - s.differential_density_field(r)).abs() < 1e-6,
            "r = {r}: {field} vs {}",
            s.differential_density_field(r)
        );
    }
}

proptest! {
    #[test]
    fn magnetostatic_field_is_harmonic(r in 0.0f64..8.0, k in 0usize..4) {
        let wl = [0.0, 0.05, 0.1, 0.5][k];
        let s = TripletState::new(TripletParams::default().with_larmor(wl));
        prop_assert!((s.m_field(r) + wl * wl * r).abs() <= 1e-12);
        prop_assert!((s.lorentz_field(r) + s.internal_magnetic_field(r) + s.m_field(r)).abs() <= 1e-12);
    }
}

#[test]
fn magnetostatic_field_at_unit_radius() {
    let s = state();
    assert!((s.m_field(1.0) + 0.01).abs() <= 1e-15);
    assert_eq!(s.lorentz_field(0.0), 0.0);
    assert_eq!(s.internal_magnetic_field(0.0), 0.0);
}

#[test]
fn forces_vanish_far_out() {
    let s = state();
    let r = 15.0;
    let rho = s.density(r);
    let wl = s.params.omega_l;
    for (name, v) in [
        ("e_ee", s.force_ee(r)),
        ("z", s.kinetic_force(r)),
        ("d", s.differential_density_force(r)),
        ("l", 2.0 * wl * s.current_components(r).j_total),
        ("i_m", rho * s.internal_magnetic_field(r)),
    ] {
        assert!(v.abs() < 1e-12, "{name} = {v}");
    }
}
