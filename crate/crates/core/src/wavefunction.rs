//! The analytic triplet wave function
//! Ψ = N e^{iθ_u} e^{-Ω(r₁²+r₂²)/2} (u + c₂u² + c₃u³ + c₄u⁴), with u = |r₂ − r₁|.

use crate::closed_form::poly_mul;
use crate::numerics::{gaussian_moment, integrate_semi_infinite, NumericsError, QuadSpec};
use alloc::vec::Vec;
use core::f64::consts::PI;

/// Ω as printed for this state.
pub const DEFAULT_OMEGA: f64 = 0.268732;
/// Larmor frequency used throughout.
pub const DEFAULT_OMEGA_L: f64 = 0.1;
/// Printed normalization constant. It leaves the norm at 0.9999988, so the
/// default parameter set recomputes N instead.
pub const PUBLISHED_NORM: f64 = 0.02246632108;
/// Printed effective force constant (Ω² rounded to six digits).
pub const PUBLISHED_K_EFF: f64 = 0.072217;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TripletParams {
    pub norm: f64,
    pub m: i32,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
    pub omega: f64,
    pub omega_l: f64,
    pub k_eff: f64,
    pub omega0_sq: f64,
}

impl TripletParams {
    /// Parameter set for a given Ω. The polynomial coefficients follow from
    /// terminating the series solution in the relative coordinate
    /// (c₂ = 1/3, c₃ = (1/3 − 3Ω)/8, c₄ = (1 − 25Ω)/360), k_eff = Ω², and N
    /// normalises Ψ exactly.
    pub fn from_omega(omega: f64, omega_l: f64) -> Self {
        let c2 = 1.0 / 3.0;
        let c3 = (1.0 / 3.0 - 3.0 * omega) / 8.0;
        let c4 = (1.0 - 25.0 * omega) / 360.0;
        let mut p = Self {
            norm: 1.0,
            m: 1,
            c2,
            c3,
            c4,
            omega,
            omega_l,
            k_eff: omega * omega,
            omega0_sq: omega * omega - omega_l * omega_l,
        };
        p.norm = p.normalization_constant();
        p
    }

    /// Same state in a different magnetic field: Ω and k_eff held, ω₀² adjusted.
    pub fn with_larmor(mut self, omega_l: f64) -> Self {
        self.omega_l = omega_l;
        self.omega0_sq = self.k_eff - omega_l * omega_l;
        self
    }

    /// Coefficients of g₀(u)/u = 1 + c₂u + c₃u² + c₄u³.
    pub fn reduced_poly(&self) -> [f64; 4] {
        [1.0, self.c2, self.c3, self.c4]
    }

    /// Coefficients of g₀(u) = u + c₂u² + c₃u³ + c₄u⁴, lowest power first.
    pub fn g0_poly(&self) -> [f64; 5] {
        [0.0, 1.0, self.c2, self.c3, self.c4]
    }

    /// Coefficients of g₀(u)², powers 0..=8.
    pub fn g0_sq_poly(&self) -> Vec<f64> {
        let g = self.g0_poly();
        poly_mul(&g, &g)
    }

    pub fn g0(&self, u: f64) -> f64 {
        u * (1.0 + u * (self.c2 + u * (self.c3 + u * self.c4)))
    }

    /// N that makes ∫∫|Ψ|² = 1, from the separable centre-of-mass and
    /// relative Gaussian integrals.
    pub fn normalization_constant(&self) -> f64 {
        let a = 0.5 * self.omega;
        let rel: f64 = self.g0_sq_poly().iter().enumerate().map(|(j, &b)| b * gaussian_moment(j as u32 + 1, a)).sum();
        let integral = (PI / (2.0 * self.omega)) * 2.0 * PI * rel;
        1.0 / libm::sqrt(integral)
    }

    /// Invariant check: k_eff = Ω² and ω₀² = k_eff − ω_L², both to 1e-9.
    pub fn check_invariants(&self) -> Result<(), &'static str> {
        if (self.omega * self.omega - self.k_eff).abs() > 1e-9 {
            return Err("k_eff differs from Ω²");
        }
        if (self.k_eff - self.omega_l * self.omega_l - self.omega0_sq).abs() > 1e-9 {
            return Err("ω₀² differs from k_eff − ω_L²");
        }
        if self.m != 1 {
            return Err("only m = +1 is supported");
        }
        Ok(())
    }
}

impl Default for TripletParams {
    fn default() -> Self {
        Self::from_omega(DEFAULT_OMEGA, DEFAULT_OMEGA_L)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PlanarPoint {
    pub r: f64,
    pub theta: f64,
}

impl PlanarPoint {
    pub fn new(r: f64, theta: f64) -> Self {
        debug_assert!(r >= 0.0);
        Self { r, theta }
    }

    pub fn from_xy(x: f64, y: f64) -> Self {
        Self { r: libm::hypot(x, y), theta: libm::atan2(y, x) }
    }

    pub fn xy(&self) -> (f64, f64) {
        let (s, c) = libm::sincos(self.theta);
        (self.r * c, self.r * s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ComplexAmplitude {
    pub re: f64,
    pub im: f64,
}

impl ComplexAmplitude {
    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(&self) -> f64 {
        libm::hypot(self.re, self.im)
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re, im: -self.im }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { re: self.re + o.re, im: self.im + o.im }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { re: self.re * s, im: self.im * s }
    }
}

/// Ψ at Cartesian positions.
///
/// With m = 1, u e^{iθ_u} is just (Δx + iΔy), so the phase is carried
/// without any angle evaluation and swapping the electrons flips the sign
/// bit for bit.
pub fn psi_xy(x1: f64, y1: f64, x2: f64, y2: f64, params: &TripletParams) -> ComplexAmplitude {
    let dx = x2 - x1;
    let dy = y2 - y1;
    let u = libm::hypot(dx, dy);
    let [_, c2, c3, c4] = params.reduced_poly();
    let poly = 1.0 + u * (c2 + u * (c3 + u * c4));
    let gauss = libm::exp(-0.5 * params.omega * (x1 * x1 + y1 * y1 + x2 * x2 + y2 * y2));
    let w = params.norm * gauss * poly;
    ComplexAmplitude { re: w * dx, im: w * dy }
}

pub fn psi(p1: PlanarPoint, p2: PlanarPoint, params: &TripletParams) -> ComplexAmplitude {
    let (x1, y1) = p1.xy();
    let (x2, y2) = p2.xy();
    psi_xy(x1, y1, x2, y2, params)
}

/// |Ψ(p1, p2) + Ψ(p2, p1)|.
pub fn antisymmetry_residual(p1: PlanarPoint, p2: PlanarPoint, params: &TripletParams) -> f64 {
    psi(p1, p2, params).add(&psi(p2, p1, params)).abs()
}

/// ∫∫|Ψ|² by separating centre-of-mass R = (r₁+r₂)/2 and relative u:
/// r₁² + r₂² = 2R² + u²/2, so the integral is
/// N² (π/2Ω) · 2π ∫ e^{-Ωu²/2} g₀(u)² u du.
pub fn norm_check(params: &TripletParams, spec: &QuadSpec) -> Result<f64, NumericsError> {
    let w = params.omega;
    let rel_spec = QuadSpec { truncation_radius: spec.truncation_radius * core::f64::consts::SQRT_2, ..*spec };
    let rel = integrate_semi_infinite(
        |u| {
            let g = params.g0(u);
            libm::exp(-0.5 * w * u * u) * g * g * u
        },
        0.0,
        &rel_spec,
    )?;
    Ok(params.norm * params.norm * (PI / (2.0 * w)) * 2.0 * PI * rel.value)
}

/// |Ψ(r₂ + u û, r₂)|/u along a direction, with the u → 0 limit.
#[derive(Debug, Clone, PartialEq)]
pub struct CoalescenceProfile {
    pub samples: Vec<(f64, f64)>,
    pub limit: f64,
}

pub fn coalescence_profile(
    p2: PlanarPoint,
    direction: f64,
    u_samples: &[f64],
    params: &TripletParams,
) -> CoalescenceProfile {
    let (x2, y2) = p2.xy();
    let (sn, cs) = libm::sincos(direction);
    let samples: Vec<(f64, f64)> = u_samples
        .iter()
        .map(|&u| {
            let a = psi_xy(x2 + u * cs, y2 + u * sn, x2, y2, params);
            (u, a.abs() / u)
        })
        .collect();
    // linear extrapolation through the two smallest separations
    let mut sorted = samples.clone();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
    let limit = match sorted.as_slice() {
        [] => f64::NAN,
        [(_, v)] => *v,
        [(u1, v1), (u2, v2), ..] => (u2 * v1 - u1 * v2) / (u2 - u1),
    };
    CoalescenceProfile { samples, limit }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum NodeComponent {
    Re,
    Im,
    /// Both parts vanish at a grid vertex.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NodeLocus {
    pub component: NodeComponent,
    pub r1: f64,
    pub r2: f64,
}

/// Sign changes of Re Ψ and Im Ψ on a uniform (r₁, r₂) grid for fixed
/// angles, refined by bisection along grid edges to 1e-10 in r.
pub fn node_scan(theta1: f64, theta2: f64, r_max: f64, grid_n: usize, params: &TripletParams) -> Vec<NodeLocus> {
    assert!(grid_n >= 16, "grid_n must be at least 16");
    let h = r_max / (grid_n - 1) as f64;
    let eval = |r1: f64, r2: f64| psi(PlanarPoint::new(r1, theta1), PlanarPoint::new(r2, theta2), params);
    let mut out = Vec::new();
    let grid: Vec<Vec<ComplexAmplitude>> =
        (0..grid_n).map(|i| (0..grid_n).map(|j| eval(i as f64 * h, j as f64 * h)).collect()).collect();
    for (i, row) in grid.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if v.re == 0.0 && v.im == 0.0 {
                out.push(NodeLocus { component: NodeComponent::Both, r1: i as f64 * h, r2: j as f64 * h });
            }
        }
    }
    type Part = fn(&ComplexAmplitude) -> f64;
    let parts: [(NodeComponent, Part); 2] = [(NodeComponent::Re, |a| a.re), (NodeComponent::Im, |a| a.im)];
    for (component, part) in parts {
        for i in 0..grid_n {
            for j in 0..grid_n {
                let a = part(&grid[i][j]);
                for (di, dj) in [(1usize, 0usize), (0, 1)] {
                    let (ni, nj) = (i + di, j + dj);
                    if ni >= grid_n || nj >= grid_n {
                        continue;
                    }
                    let b = part(&grid[ni][nj]);
                    if a == 0.0 || b == 0.0 || (a > 0.0) == (b > 0.0) {
                        continue;
                    }
                    let (r1a, r2a) = (i as f64 * h, j as f64 * h);
                    let (r1b, r2b) = (ni as f64 * h, nj as f64 * h);
                    let mut lo = 0.0;
                    let mut hi = 1.0;
                    let fa = a;
                    while (hi - lo) * h > 1e-10 {
                        let mid = 0.5 * (lo + hi);
                        let fm = part(&eval(r1a + mid * (r1b - r1a), r2a + mid * (r2b - r2a)));
                        if fm == 0.0 {
                            lo = mid;
                            hi = mid;
                            break;
                        }
                        if (fm > 0.0) == (fa > 0.0) {
                            lo = mid;
                        } else {
                            hi = mid;
                        }
                    }
                    let t = 0.5 * (lo + hi);
                    out.push(NodeLocus { component, r1: r1a + t * (r1b - r1a), r2: r2a + t * (r2b - r2a) });
                }
            }
        }
    }
    out
}

/// First positive root of 1 + c₂u + c₃u² + c₄u³, the relative-coordinate
/// node of the excited state, by bisection on [lo, hi].
pub fn polynomial_node(params: &TripletParams, lo: f64, hi: f64, tol: f64) -> Option<f64> {
    let f = |u: f64| params.g0(u) / u;
    let (mut a, mut b) = (lo, hi);
    let (fa, fb) = (f(a), f(b));
    if fa == 0.0 {
        return Some(a);
    }
    if (fa > 0.0) == (fb > 0.0) {
        return None;
    }
    while b - a > tol {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return Some(m);
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = m;
        } else {
            b = m;
        }
    }
    Some(0.5 * (a + b))
}
