//! First-law residual and the fixed-point check of the self-consistent
//! form of the Schrödinger–Pauli equation.

use crate::numerics::{integrate_1d, NumericsError, QuadSpec};
use crate::sources::RadialProfile;
use crate::state::TripletState;
use crate::wavefunction::TripletParams;
use alloc::vec::Vec;
use core::fmt;

/// Tolerance on the pointwise first-law residual over the standard range.
pub const LAW_TOLERANCE: f64 = 1e-4;
/// Tolerance on the recovered ω₀² and on the harmonic-fit deviation.
pub const FIT_TOLERANCE: f64 = 1e-4;
/// Default fit window.
pub const FIT_WINDOW: (f64, f64) = (0.2, 5.0);
/// Default upper reference radius of the potential line integral.
pub const DEFAULT_R_REF: f64 = 8.0;

#[derive(Debug, Clone, PartialEq)]
pub enum ConsistencyError {
    EmptyGrid,
    GridOutOfRange(f64),
    TooFewSamples(usize),
    DegenerateWindow,
    Numerics(NumericsError),
}

impl fmt::Display for ConsistencyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyGrid => write!(f, "radial grid is empty"),
            Self::GridOutOfRange(r) => write!(f, "grid radius {r} outside [0.05, 8]"),
            Self::TooFewSamples(n) => write!(f, "need at least 8 samples in the fit window, got {n}"),
            Self::DegenerateWindow => write!(f, "fit window is degenerate"),
            Self::Numerics(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ConsistencyError {}

impl From<NumericsError> for ConsistencyError {
    fn from(e: NumericsError) -> Self {
        Self::Numerics(e)
    }
}

/// First law at one radius: lhs = −k_eff r, rhs = −ℰ_ee + 𝒵 + 𝒟.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LawResidual {
    pub r: f64,
    pub lhs: f64,
    pub rhs: f64,
    /// ℒ + ℐ_m, equal to ω_L² r.
    pub magnetic: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LawReport {
    pub max_residual: f64,
    pub points: Vec<LawResidual>,
    /// (r, 𝒟 + 𝒵)
    pub d_plus_z: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitKind {
    /// samples ≈ −k r
    Field,
    /// samples ≈ ½ k r²
    Potential,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HarmonicFit {
    pub k_fit: f64,
    pub max_abs_deviation: f64,
    pub fit_window: (f64, f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConsistencyReport {
    pub max_residual: f64,
    pub k_fit: f64,
    pub omega0_sq_recovered: f64,
    pub pass: bool,
    pub k_m_fit: f64,
    pub max_abs_deviation: f64,
    pub omega0_sq_expected: f64,
}

/// Least-squares k for samples y ≈ k·x(r) with x = −r or r²/2.
pub fn fit_harmonic(
    profile: &RadialProfile,
    window: (f64, f64),
    kind: FitKind,
) -> Result<HarmonicFit, ConsistencyError> {
    if window.1.partial_cmp(&window.0) != Some(core::cmp::Ordering::Greater) {
        return Err(ConsistencyError::DegenerateWindow);
    }
    let basis = |r: f64| match kind {
        FitKind::Field => -r,
        FitKind::Potential => 0.5 * r * r,
    };
    let pts: Vec<(f64, f64)> =
        profile.samples.iter().filter(|s| s.0 >= window.0 && s.0 <= window.1).map(|s| (s.0, s.1)).collect();
    if pts.len() < 8 {
        return Err(ConsistencyError::TooFewSamples(pts.len()));
    }
    let first = pts[0].0;
    if pts.iter().all(|p| p.0 == first) {
        return Err(ConsistencyError::DegenerateWindow);
    }
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for &(r, y) in &pts {
        let x = basis(r);
        sxy += x * y;
        sxx += x * x;
    }
    let k_fit = sxy / sxx;
    let max_abs_deviation = pts.iter().map(|&(r, y)| (y - k_fit * basis(r)).abs()).fold(0.0, f64::max);
    Ok(HarmonicFit { k_fit, max_abs_deviation, fit_window: window })
}

/// `n` uniformly spaced radii on [a, b].
pub fn uniform_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return alloc::vec![a];
    }
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}

impl TripletState {
    /// Internal electron-interaction, kinetic and differential-density sum.
    pub fn internal_field_sum(&self, r: f64) -> f64 {
        -self.field_ee(r) + self.kinetic_field(r) + self.differential_density_field(r)
    }

    pub fn law_residual(&self, r: f64) -> LawResidual {
        let lhs = -self.params.k_eff * r;
        let rhs = self.internal_field_sum(r);
        let magnetic = self.lorentz_field(r) + self.internal_magnetic_field(r);
        LawResidual { r, lhs, rhs, magnetic, residual: lhs - rhs }
    }

    pub fn law_report(&self, grid: &[f64]) -> Result<LawReport, ConsistencyError> {
        if grid.is_empty() {
            return Err(ConsistencyError::EmptyGrid);
        }
        if let Some(&r) = grid.iter().find(|&&r| !(0.05..=8.0).contains(&r)) {
            return Err(ConsistencyError::GridOutOfRange(r));
        }
        let points: Vec<LawResidual> = grid.iter().map(|&r| self.law_residual(r)).collect();
        let max_residual = points.iter().map(|p| p.residual.abs()).fold(0.0, f64::max);
        let d_plus_z = grid.iter().map(|&r| (r, self.differential_density_field(r) + self.kinetic_field(r))).collect();
        Ok(LawReport { max_residual, points, d_plus_z })
    }

    /// v_eff(r) = ∫ (ℰ_ee − 𝒟 − 𝒵) along a radial path, referenced at
    /// `r_ref` and shifted so v_eff(0) = 0.
    pub fn extract_veff(&self, r: f64, r_ref: f64, spec: &QuadSpec) -> Result<f64, NumericsError> {
        let force = |x: f64| -self.internal_field_sum(x);
        let tail = |a: f64| -> Result<f64, NumericsError> { Ok(-integrate_1d(force, a, r_ref, spec)?.value) };
        Ok(tail(r)? - tail(0.0)?)
    }

    /// v_m(r) = −∫₀^r 𝓜 dr′.
    pub fn extract_vm(&self, r: f64, spec: &QuadSpec) -> Result<f64, NumericsError> {
        Ok(-integrate_1d(|x| self.m_field(x), 0.0, r, spec)?.value)
    }

    pub fn veff_profile(&self, grid: &[f64], r_ref: f64, spec: &QuadSpec) -> Result<RadialProfile, NumericsError> {
        let mut prof = RadialProfile::new("v_eff", self.params.omega_l);
        for &r in grid {
            prof.samples.push((r, self.extract_veff(r, r_ref, spec)?, 0.0));
        }
        Ok(prof)
    }

    /// Fit v_eff and v_m over the window and recover ω₀² = k_eff − ω_L².
    pub fn recover_omega0_sq(
        &self,
        r_ref: f64,
        spec: &QuadSpec,
    ) -> Result<(HarmonicFit, HarmonicFit), ConsistencyError> {
        let grid = uniform_grid(FIT_WINDOW.0, FIT_WINDOW.1, 49);
        let veff = self.veff_profile(&grid, r_ref, spec)?;
        let mut vm = RadialProfile::new("v_m", self.params.omega_l);
        for &r in &grid {
            vm.samples.push((r, self.extract_vm(r, spec)?, 0.0));
        }
        Ok((fit_harmonic(&veff, FIT_WINDOW, FitKind::Potential)?, fit_harmonic(&vm, FIT_WINDOW, FitKind::Potential)?))
    }

    pub fn self_consistency_check(&self, spec: &QuadSpec) -> Result<ConsistencyReport, ConsistencyError> {
        let law = self.law_report(&uniform_grid(0.1, 6.0, 60))?;
        let (veff, vm) = self.recover_omega0_sq(DEFAULT_R_REF, spec)?;
        let recovered = veff.k_fit - vm.k_fit;
        let expected = self.params.omega0_sq;
        let pass = (recovered - expected).abs() <= FIT_TOLERANCE
            && veff.max_abs_deviation <= FIT_TOLERANCE
            && law.max_residual <= LAW_TOLERANCE;
        Ok(ConsistencyReport {
            max_residual: law.max_residual,
            k_fit: veff.k_fit,
            omega0_sq_recovered: recovered,
            pass,
            k_m_fit: vm.k_fit,
            max_abs_deviation: veff.max_abs_deviation,
            omega0_sq_expected: expected,
        })
    }
}

/// Convenience wrapper building the state from parameters.
pub fn self_consistency_check(params: &TripletParams, spec: &QuadSpec) -> Result<ConsistencyReport, ConsistencyError> {
    TripletState::new(*params).self_consistency_check(spec)
}
