//! Fields and 'forces' of the first law: electron interaction (Hartree and
//! Pauli–Coulomb parts), kinetic, differential density, Lorentz, internal
//! magnetic and their sum 𝓜. All are radial components.

use crate::numerics::{
    elliptic_ke, integrate_1d_points, integrate_2d_polar, EllipticModulus, NumericsError, PolarDomain, QuadResult,
    QuadSpec,
};
use crate::state::TripletState;
use crate::wavefunction::ComplexAmplitude;

/// Every per-electron field at one radius.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FieldBundle {
    pub r: f64,
    pub e_ee: f64,
    pub e_h: f64,
    pub e_xc: f64,
    pub z: f64,
    pub d: f64,
    pub l: f64,
    pub i_m: f64,
    pub m: f64,
    pub omega_l: f64,
}

/// t_αβ = (r_α r_β / r²) f + δ_αβ k.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct KineticTensorValue {
    pub r: f64,
    pub f: f64,
    pub k: f64,
}

impl KineticTensorValue {
    /// Cartesian components (t_xx, t_xy, t_yy) at polar angle θ.
    pub fn cartesian(&self, theta: f64) -> (f64, f64, f64) {
        let (s, c) = libm::sincos(theta);
        (c * c * self.f + self.k, s * c * self.f, s * s * self.f + self.k)
    }

    pub fn trace(&self) -> f64 {
        self.f + 2.0 * self.k
    }
}

/// Radial field of a unit-charge ring of radius `a` at in-plane radius `r`,
/// without the 1/(r − a) term (returned separately as its coefficient):
/// (1/πr)[K(p)/(r + a) + E(p)/(r − a)], p = 2√(ra)/(r + a).
fn ring_parts(r: f64, a: f64) -> (f64, f64) {
    let m = EllipticModulus::from_complement((r - a).abs() / (r + a)).expect("ring modulus");
    let (k, e) = elliptic_ke(m);
    (k / (r + a), e)
}

impl TripletState {
    /// ℰ_ee = (ρℰ_ee)/ρ from the closed form.
    pub fn field_ee(&self, r: f64) -> f64 {
        if r == 0.0 {
            return 0.0;
        }
        self.forms.rho_e_ee.eval_damped(r) / self.density(r)
    }

    /// ρ ℰ_ee.
    pub fn force_ee(&self, r: f64) -> f64 {
        if r == 0.0 {
            return 0.0;
        }
        self.forms.rho_e_ee.eval_damped(r)
    }

    /// ℰ_ee by Coulomb's law with the pair density,
    /// ∫ g(r, r′) (r − r′)/|r − r′|³ d²r′, angular integral first.
    pub fn field_ee_oracle(&self, r: f64, spec: &QuadSpec) -> Result<QuadResult, NumericsError> {
        if r == 0.0 {
            return Ok(QuadResult { value: 0.0, error: 0.0 });
        }
        let p = &self.params;
        let rho_ref = self.density(r);
        let domain = PolarDomain::disk((r, 0.0), r + spec.truncation_radius);
        integrate_2d_polar(
            |q| {
                let a = crate::wavefunction::psi_xy(r, 0.0, q.x, q.y, p);
                let g = 2.0 * a.norm_sqr() / rho_ref;
                -g * libm::cos(q.phi) / (q.s * q.s)
            },
            &domain,
            spec,
        )
    }

    /// Hartree field from ring sources with the elliptic-integral kernel.
    ///
    /// The E/(r − a) term is a principal value; it is evaluated by
    /// subtracting its value at a = r and adding back the analytic
    /// PV ∫ da/(r − a) = ln(r/(L − r)). The remaining K term has an
    /// integrable log singularity at a = r, which is a break point.
    pub fn field_hartree(&self, r: f64, spec: &QuadSpec) -> Result<QuadResult, NumericsError> {
        if r == 0.0 {
            return Ok(QuadResult { value: 0.0, error: 0.0 });
        }
        let l = r + spec.truncation_radius;
        let h_r = r * self.density(r);
        let integrand = |a: f64| {
            if a == 0.0 {
                return 0.0;
            }
            let (k_part, e) = ring_parts(r, a);
            let rho = self.density(a);
            a * rho * k_part + (a * rho * e - h_r) / (r - a)
        };
        let res = integrate_1d_points(integrand, 0.0, l, &[r], spec)?;
        let total = res.value + h_r * libm::log(r / (l - r));
        Ok(QuadResult { value: 2.0 * total / r, error: 2.0 * res.error / r })
    }

    /// Hartree field by brute-force planar quadrature of
    /// ∫ ρ(r′)(r − r′)/|r − r′|³ d²r′ about the field point.
    pub fn field_hartree_oracle(&self, r: f64, spec: &QuadSpec) -> Result<QuadResult, NumericsError> {
        if r == 0.0 {
            return Ok(QuadResult { value: 0.0, error: 0.0 });
        }
        let domain = PolarDomain::disk((r, 0.0), r + spec.truncation_radius);
        integrate_2d_polar(|q| -self.density(libm::hypot(q.x, q.y)) * libm::cos(q.phi) / (q.s * q.s), &domain, spec)
    }

    /// Hartree potential ∫ 4aρ(a) K(p)/(r + a) da.
    pub fn potential_hartree(&self, r: f64, spec: &QuadSpec) -> Result<QuadResult, NumericsError> {
        let l = r + spec.truncation_radius;
        let integrand = |a: f64| {
            if a == 0.0 && r == 0.0 {
                return 0.0;
            }
            let (k_part, _) = ring_parts(r, a);
            4.0 * a * self.density(a) * k_part
        };
        let points = if r > 0.0 { alloc::vec![r] } else { alloc::vec![] };
        integrate_1d_points(integrand, 0.0, l, &points, spec)
    }

    /// ℰ_xc = ℰ_ee − ℰ_H.
    pub fn field_xc(&self, r: f64, spec: &QuadSpec) -> Result<f64, NumericsError> {
        Ok(self.field_ee(r) - self.field_hartree(r, spec)?.value)
    }

    pub fn kinetic_tensor(&self, r: f64) -> KineticTensorValue {
        let f = if r == 0.0 { 0.0 } else { self.forms.f.eval_damped(r) };
        KineticTensorValue { r, f, k: self.forms.k.eval_damped(r) }
    }

    /// Undamped kinetic-tensor integrals (f₁, f₂, f₃).
    pub fn kinetic_integrals(&self, r: f64) -> (f64, f64, f64) {
        (self.forms.f1.eval(r), self.forms.f2.eval(r), self.forms.f3.eval(r))
    }

    /// Kinetic 'force' z = 2[(f + k)′ + f/r].
    pub fn kinetic_force(&self, r: f64) -> f64 {
        if r == 0.0 {
            return 0.0;
        }
        self.forms.z.eval_damped(r)
    }

    /// 𝒵 = z/ρ.
    pub fn kinetic_field(&self, r: f64) -> f64 {
        self.kinetic_force(r) / self.density(r)
    }

    /// d = −¼ d/dr(ρ″ + ρ′/r).
    pub fn differential_density_force(&self, r: f64) -> f64 {
        if r == 0.0 {
            return 0.0;
        }
        self.forms.d.eval_damped(r)
    }

    /// 𝒟 = d/ρ.
    pub fn differential_density_field(&self, r: f64) -> f64 {
        self.differential_density_force(r) / self.density(r)
    }

    /// ℒ = 2ω_L j/ρ.
    pub fn lorentz_field(&self, r: f64) -> f64 {
        if r == 0.0 {
            return 0.0;
        }
        2.0 * self.params.omega_l * self.current_components(r).j_total / self.density(r)
    }

    /// ℐ_m = −2ω_L j/ρ + ω_L² r.
    pub fn internal_magnetic_field(&self, r: f64) -> f64 {
        let wl = self.params.omega_l;
        wl * wl * r - self.lorentz_field(r)
    }

    /// 𝓜 = −(ℒ + ℐ_m).
    pub fn m_field(&self, r: f64) -> f64 {
        let l = self.lorentz_field(r);
        let wl = self.params.omega_l;
        -(l + (wl * wl * r - l))
    }

    pub fn field_bundle(&self, r: f64, spec: &QuadSpec) -> Result<FieldBundle, NumericsError> {
        let e_ee = self.field_ee(r);
        let e_h = self.field_hartree(r, spec)?.value;
        let l = self.lorentz_field(r);
        let i_m = self.internal_magnetic_field(r);
        Ok(FieldBundle {
            r,
            e_ee,
            e_h,
            e_xc: e_ee - e_h,
            z: self.kinetic_field(r),
            d: self.differential_density_field(r),
            l,
            i_m,
            m: -(l + i_m),
            omega_l: self.params.omega_l,
        })
    }

    /// Kinetic tensor from mixed finite differences of the quadrature
    /// density matrix at a point on the x-axis:
    /// t_αβ = ¼(∂′_α∂″_β + ∂′_β∂″_α)γ(r′, r″) at r′ = r″.
    /// Returns (t_xx, t_yy) = (f + k, k).
    pub fn kinetic_tensor_oracle(&self, r: f64, h: f64, spec: &QuadSpec) -> Result<(f64, f64), NumericsError> {
        let g = |a: (f64, f64), b: (f64, f64)| -> Result<ComplexAmplitude, NumericsError> {
            self.density_matrix_xy(a, b, spec)
        };
        // ∂′_α∂″_α γ by the four-point mixed difference
        let mixed = |ex: f64, ey: f64| -> Result<f64, NumericsError> {
            let pp = g((r + h * ex, h * ey), (r + h * ex, h * ey))?;
            let mm = g((r - h * ex, -h * ey), (r - h * ex, -h * ey))?;
            let pm = g((r + h * ex, h * ey), (r - h * ex, -h * ey))?;
            let mp = g((r - h * ex, -h * ey), (r + h * ex, h * ey))?;
            Ok((pp.re + mm.re - pm.re - mp.re) / (4.0 * h * h))
        };
        Ok((0.5 * mixed(1.0, 0.0)?, 0.5 * mixed(0.0, 1.0)?))
    }
}
