//! Local sources (density, currents) from closed forms and nonlocal sources
//! (pair correlation, Fermi–Coulomb hole, density matrix) from the wave
//! function.

use crate::numerics::{
    bessel_i0_scaled, integrate_2d_polar, integrate_semi_infinite_points, NumericsError, PolarDomain, QuadResult,
    QuadSpec,
};
use crate::state::TripletState;
use crate::wavefunction::{psi_xy, ComplexAmplitude, PlanarPoint};
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

/// Sampled radial function.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RadialProfile {
    pub quantity: String,
    pub omega_l: f64,
    /// (r, value, estimated error)
    pub samples: Vec<(f64, f64, f64)>,
}

impl RadialProfile {
    pub fn new(quantity: impl Into<String>, omega_l: f64) -> Self {
        Self { quantity: quantity.into(), omega_l, samples: Vec::new() }
    }

    /// r strictly increasing and every value finite.
    pub fn is_valid(&self) -> bool {
        self.samples.windows(2).all(|w| w[1].0 > w[0].0) && self.samples.iter().all(|s| s.1.is_finite())
    }
}

/// Azimuthal current components at one radius.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CurrentDecomposition {
    pub j_p: f64,
    pub j_d: f64,
    pub j_m: f64,
    pub j_total: f64,
}

/// Which nonlocal source a pair grid holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum PairKind {
    PairCorrelation,
    XcHole,
}

/// A nonlocal source on a square grid for a reference point on the x-axis.
/// x′ runs along r̂ and y′ perpendicular to it.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PairGrid {
    pub kind: PairKind,
    pub reference_point: PlanarPoint,
    pub axis: Vec<f64>,
    /// values[i][j] at (x′ = axis[i], y′ = axis[j])
    pub values: Vec<Vec<f64>>,
}

/// Complex density matrix on an (r, r′) grid at fixed angles.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DensityMatrixGrid {
    pub theta: f64,
    pub theta_prime: f64,
    pub axis: Vec<f64>,
    /// values[i][j] = γ(axis[i] at θ, axis[j] at θ′)
    pub values: Vec<Vec<ComplexAmplitude>>,
}

/// Uniform axis of `n` points over [-half_width, half_width].
pub fn symmetric_axis(n: usize, half_width: f64) -> Vec<f64> {
    if n == 1 {
        return alloc::vec![0.0];
    }
    (0..n).map(|i| -half_width + 2.0 * half_width * i as f64 / (n - 1) as f64).collect()
}

impl TripletState {
    /// Electron density ρ(r).
    pub fn density(&self, r: f64) -> f64 {
        self.forms.rho[0].eval_damped(r)
    }

    /// [ρ, ρ′, ρ″, ρ‴] up to `order` (≤ 3). Odd orders are exactly 0 at r = 0.
    pub fn density_derivatives(&self, r: f64, order: usize) -> Vec<f64> {
        assert!(order <= 3, "density derivatives are available up to third order");
        (0..=order).map(|n| if r == 0.0 && n % 2 == 1 { 0.0 } else { self.forms.rho[n].eval_damped(r) }).collect()
    }

    /// ρ(r) from its defining integral
    /// 4πN² e^{-2Ωr²} ∫ e^{-Ωx²} x g₀(x)² I₀(2Ωrx) dx.
    pub fn density_oracle(&self, r: f64, spec: &QuadSpec) -> Result<QuadResult, NumericsError> {
        let p = &self.params;
        let w = p.omega;
        let f = |x: f64| {
            let g = p.g0(x);
            // e^{-2Ωr²} e^{-Ωx²} I0(2Ωrx) = e^{-Ω(x−r)² − Ωr²} i0e(2Ωrx)
            libm::exp(-w * (x - r) * (x - r) - w * r * r) * x * g * g * bessel_i0_scaled(2.0 * w * r * x)
        };
        let res = integrate_semi_infinite_points(f, r, &[r], spec)?;
        let c = 4.0 * PI * p.norm * p.norm;
        Ok(QuadResult { value: c * res.value, error: c * res.error })
    }

    pub fn current_components(&self, r: f64) -> CurrentDecomposition {
        if r == 0.0 {
            return CurrentDecomposition { j_p: 0.0, j_d: 0.0, j_m: 0.0, j_total: 0.0 };
        }
        let j_p = self.forms.j_p.eval_damped(r);
        let j_d = r * self.params.omega_l * self.density(r);
        let j_m = -0.5 * self.forms.rho[1].eval_damped(r);
        CurrentDecomposition { j_p, j_d, j_m, j_total: j_p + j_d + j_m }
    }

    /// Pair-correlation density g(r, r′) = 2|Ψ(r, r′)|²/ρ(r).
    pub fn pair_density(&self, reference: PlanarPoint, target: PlanarPoint) -> f64 {
        let (x1, y1) = reference.xy();
        let (x2, y2) = target.xy();
        self.pair_density_xy((x1, y1), (x2, y2), self.density(reference.r))
    }

    fn pair_density_xy(&self, a: (f64, f64), b: (f64, f64), rho_ref: f64) -> f64 {
        2.0 * psi_xy(a.0, a.1, b.0, b.1, &self.params).norm_sqr() / rho_ref
    }

    /// Fermi–Coulomb hole ρ_xc(r, r′) = g(r, r′) − ρ(r′).
    pub fn xc_hole(&self, reference: PlanarPoint, target: PlanarPoint) -> f64 {
        self.pair_density(reference, target) - self.density(target.r)
    }

    /// ∫ g(r, r′) d²r′ in polar coordinates about the reference point.
    pub fn pair_sum_rule(&self, reference_r: f64, spec: &QuadSpec) -> Result<QuadResult, NumericsError> {
        let rho_ref = self.density(reference_r);
        let domain = PolarDomain::disk((reference_r, 0.0), reference_r + spec.truncation_radius);
        integrate_2d_polar(|q| self.pair_density_xy((reference_r, 0.0), (q.x, q.y), rho_ref), &domain, spec)
    }

    /// ∫ ρ_xc(r, r′) d²r′ over the same polar domain.
    pub fn xc_hole_sum_rule(&self, reference_r: f64, spec: &QuadSpec) -> Result<QuadResult, NumericsError> {
        let rho_ref = self.density(reference_r);
        let domain = PolarDomain::disk((reference_r, 0.0), reference_r + spec.truncation_radius);
        integrate_2d_polar(
            |q| self.pair_density_xy((reference_r, 0.0), (q.x, q.y), rho_ref) - self.density(libm::hypot(q.x, q.y)),
            &domain,
            spec,
        )
    }

    /// ∫ ρ d²r as a planar polar integral.
    pub fn density_integral(&self, spec: &QuadSpec) -> Result<QuadResult, NumericsError> {
        let domain = PolarDomain::disk((0.0, 0.0), spec.truncation_radius);
        integrate_2d_polar(|q| self.density(q.s), &domain, spec)
    }

    /// One row of a pair grid: values at x′ = axis[i] for every y′.
    pub fn pair_grid_row(&self, kind: PairKind, reference_r: f64, axis: &[f64], i: usize) -> Vec<f64> {
        let rho_ref = self.density(reference_r);
        let x = axis[i];
        axis.iter()
            .map(|&y| {
                let g = self.pair_density_xy((reference_r, 0.0), (x, y), rho_ref);
                match kind {
                    PairKind::PairCorrelation => g,
                    PairKind::XcHole => g - self.density(libm::hypot(x, y)),
                }
            })
            .collect()
    }

    pub fn pair_grid(&self, kind: PairKind, reference_r: f64, n: usize, half_width: f64) -> PairGrid {
        let axis = symmetric_axis(n, half_width);
        let values = (0..n).map(|i| self.pair_grid_row(kind, reference_r, &axis, i)).collect();
        PairGrid { kind, reference_point: PlanarPoint::new(reference_r, 0.0), axis, values }
    }

    /// γ(r, r′) = 2 ∫ Ψ*(r, y) Ψ(r′, y) d²y with the e^{iθ_u} phases kept.
    /// Polar coordinates are centred at the midpoint of the two positions, so
    /// the two coalescence kinks sit on one break radius at opposite angles.
    pub fn density_matrix(
        &self,
        theta: f64,
        theta_prime: f64,
        r: f64,
        r_prime: f64,
        spec: &QuadSpec,
    ) -> Result<ComplexAmplitude, NumericsError> {
        let a = PlanarPoint::new(r, theta).xy();
        let b = PlanarPoint::new(r_prime, theta_prime).xy();
        self.density_matrix_xy(a, b, spec)
    }

    pub fn density_matrix_xy(
        &self,
        a: (f64, f64),
        b: (f64, f64),
        spec: &QuadSpec,
    ) -> Result<ComplexAmplitude, NumericsError> {
        let p = &self.params;
        let mid = (0.5 * (a.0 + b.0), 0.5 * (a.1 + b.1));
        let half = 0.5 * libm::hypot(b.0 - a.0, b.1 - a.1);
        let dir = libm::atan2(b.1 - a.1, b.0 - a.0);
        let radial = [half];
        let angular = [dir, dir + PI];
        let domain = PolarDomain {
            center: mid,
            s_max: libm::hypot(mid.0, mid.1) + spec.truncation_radius,
            radial_breaks: if half > 0.0 { &radial } else { &[] },
            angular_breaks: if half > 0.0 { &angular } else { &[] },
        };
        let part = |imag: bool| {
            integrate_2d_polar(
                |q| {
                    let pa = psi_xy(a.0, a.1, q.x, q.y, p);
                    let pb = psi_xy(b.0, b.1, q.x, q.y, p);
                    let prod = pa.conj().mul(&pb);
                    2.0 * if imag { prod.im } else { prod.re }
                },
                &domain,
                spec,
            )
        };
        let re = part(false)?;
        let im = if half == 0.0 { QuadResult { value: 0.0, error: 0.0 } } else { part(true)? };
        Ok(ComplexAmplitude::new(re.value, im.value))
    }

    pub fn density_matrix_grid(
        &self,
        theta: f64,
        theta_prime: f64,
        axis: &[f64],
        spec: &QuadSpec,
    ) -> Result<DensityMatrixGrid, NumericsError> {
        let mut values = Vec::with_capacity(axis.len());
        for &r in axis {
            let row: Result<Vec<_>, _> =
                axis.iter().map(|&rp| self.density_matrix(theta, theta_prime, r, rp, spec)).collect();
            values.push(row?);
        }
        Ok(DensityMatrixGrid { theta, theta_prime, axis: axis.to_vec(), values })
    }

    /// j_p from the density matrix: (1/2i)(∇″ − ∇′)γ(r′, r″) at r′ = r″ = r,
    /// azimuthal component by symmetric angle differences with one Richardson
    /// step.
    pub fn paramagnetic_oracle(&self, r: f64, base_angle: f64, spec: &QuadSpec) -> Result<f64, NumericsError> {
        let estimate = |h: f64| -> Result<f64, NumericsError> {
            let g = |t1: f64, t2: f64| self.density_matrix(base_angle + t1, base_angle + t2, r, r, spec);
            let fwd = g(0.0, h)?;
            let bwd = g(0.0, -h)?;
            let fwd_a = g(h, 0.0)?;
            let bwd_a = g(-h, 0.0)?;
            // ∂/∂θ″ and ∂/∂θ′ by central differences; the difference is 2i j_p r
            let d2 = (fwd.im - bwd.im) / (2.0 * h);
            let d1 = (fwd_a.im - bwd_a.im) / (2.0 * h);
            Ok(0.5 * (d2 - d1) / r)
        };
        let h = 0.08;
        let coarse = estimate(h)?;
        let fine = estimate(0.5 * h)?;
        Ok((4.0 * fine - coarse) / 3.0)
    }
}
