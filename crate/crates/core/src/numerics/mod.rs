//! Special functions and quadrature.

pub mod bessel;
pub mod elliptic;
pub mod quad;

pub use bessel::{bessel_i0, bessel_i0_scaled, bessel_i1, bessel_i1_over_x_scaled, bessel_i1_scaled};
pub use elliptic::{elliptic_e, elliptic_k, elliptic_ke, EllipticModulus};
pub use quad::{
    integrate_1d, integrate_1d_points, integrate_2d_polar, integrate_semi_infinite, integrate_semi_infinite_points,
    PolarDomain, PolarSample, QuadResult, QuadSpec,
};

use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NumericsError {
    /// Argument outside the function's domain.
    Domain(&'static str),
    /// Result not representable as a finite f64.
    Range(&'static str),
    /// Adaptive refinement ran out of subdivisions.
    NoConvergence { estimate: f64, error: f64, subdivisions: usize },
    /// The integrand produced a non-finite value on [a, b].
    NonFinite { a: f64, b: f64 },
}

impl fmt::Display for NumericsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Domain(msg) => write!(f, "domain error: {msg}"),
            Self::Range(msg) => write!(f, "range error: {msg}"),
            Self::NoConvergence { estimate, error, subdivisions } => write!(
                f,
                "quadrature did not converge after {subdivisions} subdivisions \
                 (estimate {estimate:e}, error bound {error:e})"
            ),
            Self::NonFinite { a, b } => write!(f, "non-finite integrand on [{a}, {b}]"),
        }
    }
}

impl core::error::Error for NumericsError {}

/// ∫_0^∞ u^n e^{-a u²} du = Γ((n+1)/2) / (2 a^{(n+1)/2}).
pub fn gaussian_moment(n: u32, a: f64) -> f64 {
    // Γ at integer and half-integer points by recurrence from Γ(1) and Γ(1/2)
    let half = n + 1;
    let mut g = if half.is_multiple_of(2) { 1.0 } else { libm::sqrt(core::f64::consts::PI) };
    let mut x = if half.is_multiple_of(2) { 1.0 } else { 0.5 };
    let target = f64::from(half) * 0.5;
    while x < target {
        g *= x;
        x += 1.0;
    }
    g / (2.0 * libm::pow(a, target))
}
