//! Energy components and expectation values, each by a closed form and by
//! an independent quadrature.

use crate::numerics::{
    elliptic_ke, gaussian_moment, integrate_semi_infinite, EllipticModulus, NumericsError, QuadResult, QuadSpec,
};
use crate::state::TripletState;
use core::f64::consts::{PI, SQRT_2};

/// Relative-coordinate normalisation factor of the kinetic-energy closed form.
pub const KINETIC_N_REL: f64 = 0.05431655771;
/// Centre-of-mass normalisation factor of the kinetic-energy closed form.
pub const KINETIC_N_CM: f64 = 0.4136182782;

/// Energies and expectation values in effective atomic units.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[allow(non_snake_case)]
pub struct EnergyReport {
    pub T: f64,
    pub E_H: f64,
    pub E_xc: f64,
    pub E_ee: f64,
    pub E_es_plus_mag: f64,
    pub E_total: f64,
    pub IP: f64,
    pub expect_r2: f64,
    pub expect_r: f64,
    pub expect_inv_r: f64,
    pub expect_delta: f64,
}

impl EnergyReport {
    /// (name, value) pairs in table order.
    pub fn rows(&self) -> [(&'static str, f64); 11] {
        [
            ("T", self.T),
            ("E_H", self.E_H),
            ("E_xc", self.E_xc),
            ("E_ee", self.E_ee),
            ("E_es_plus_mag", self.E_es_plus_mag),
            ("E_total", self.E_total),
            ("IP", self.IP),
            ("expect_r2", self.expect_r2),
            ("expect_r", self.expect_r),
            ("expect_inv_r", self.expect_inv_r),
            ("expect_delta", self.expect_delta),
        ]
    }
}

/// The four expectation values ⟨r²⟩, ⟨r⟩, ⟨1/r⟩, ⟨δ(r)⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Expectations {
    pub r2: f64,
    pub r: f64,
    pub inv_r: f64,
    pub delta: f64,
}

/// Kinetic energy by three routes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KineticRoutes {
    pub closed: f64,
    /// −½ ∫ r z(r) d²r
    pub virial: f64,
    /// ∫ (f + 2k) d²r, the trace of the kinetic tensor
    pub trace: f64,
}

impl TripletState {
    /// ∫ w(r) · value(r) d²r for a radial function, cut at the truncation radius.
    pub fn radial_integral<F: Fn(f64) -> f64>(&self, f: F, spec: &QuadSpec) -> Result<QuadResult, NumericsError> {
        let r = integrate_semi_infinite(|r| 2.0 * PI * r * f(r), 0.0, spec)?;
        Ok(r)
    }

    /// ⟨1/u⟩ from Gaussian moments of the relative coordinate.
    pub fn energy_ee(&self) -> f64 {
        let p = &self.params;
        let a = 0.5 * p.omega;
        let rel: f64 = p.g0_sq_poly().iter().enumerate().map(|(j, &b)| b * gaussian_moment(j as u32, a)).sum();
        p.norm * p.norm * (PI / (2.0 * p.omega)) * 2.0 * PI * rel
    }

    /// ∫ ρ r·ℰ_ee d²r.
    pub fn energy_ee_virial(&self, spec: &QuadSpec) -> Result<f64, NumericsError> {
        Ok(self.radial_integral(|r| r * self.force_ee(r), spec)?.value)
    }

    /// ⟨1/u⟩ by quadrature over the separated relative coordinate.
    pub fn energy_ee_relative(&self, spec: &QuadSpec) -> Result<f64, NumericsError> {
        let p = &self.params;
        let w = p.omega;
        let rel_spec = QuadSpec { truncation_radius: spec.truncation_radius * SQRT_2, ..*spec };
        let rel = integrate_semi_infinite(
            |u| {
                let g = p.g0(u);
                libm::exp(-0.5 * w * u * u) * g * g
            },
            0.0,
            &rel_spec,
        )?;
        Ok(p.norm * p.norm * (PI / (2.0 * w)) * 2.0 * PI * rel.value)
    }

    /// ∫ ρ r·ℰ_H d²r with the ring-kernel field.
    pub fn energy_hartree(&self, spec: &QuadSpec) -> Result<f64, NumericsError> {
        let inner = QuadSpec { rel_tol: spec.rel_tol * 0.1, abs_tol: spec.abs_tol * 0.1, ..*spec };
        let failure = core::cell::Cell::new(None);
        let v = self.radial_integral(
            |r| match self.field_hartree(r, &inner) {
                Ok(e) => r * self.density(r) * e.value,
                Err(err) => {
                    failure.set(Some(err));
                    0.0
                }
            },
            spec,
        )?;
        match failure.get() {
            Some(e) => Err(e),
            None => Ok(v.value),
        }
    }

    /// ½ ∫∫ ρ(r)ρ(r′)/|r − r′| d²r d²r′ through the ring potential.
    pub fn energy_hartree_double(&self, spec: &QuadSpec) -> Result<f64, NumericsError> {
        let inner = QuadSpec { rel_tol: spec.rel_tol * 0.1, abs_tol: spec.abs_tol * 0.1, ..*spec };
        let failure = core::cell::Cell::new(None);
        let v = self.radial_integral(
            |r| match self.potential_hartree(r, &inner) {
                Ok(vh) => 0.5 * self.density(r) * vh.value,
                Err(err) => {
                    failure.set(Some(err));
                    0.0
                }
            },
            spec,
        )?;
        match failure.get() {
            Some(e) => Err(e),
            None => Ok(v.value),
        }
    }

    /// E_xc = E_ee − E_H.
    pub fn energy_xc(&self, spec: &QuadSpec) -> Result<f64, NumericsError> {
        Ok(self.energy_ee() - self.energy_hartree(spec)?)
    }

    /// Closed form of the kinetic energy in terms of the centre-of-mass and
    /// relative normalisation factors.
    pub fn kinetic_energy_closed(&self) -> f64 {
        let p = &self.params;
        let (a, b, c, w) = (p.c2, p.c3, p.c4, p.omega);
        let s2p = libm::sqrt(2.0 * PI);
        let nr2 = KINETIC_N_REL * KINETIC_N_REL;
        KINETIC_N_CM * KINETIC_N_CM * PI / 4.0
            + nr2 * PI / libm::pow(w, 4.0)
                * (480.0 * c * c
                    + 12.0 * a * a * w * w
                    + 3.0 * a * libm::sqrt(PI / 2.0) * libm::pow(w, 1.5) * (13.0 * b + 3.0 * w)
                    + 1.5 * c * (85.0 * b * libm::sqrt(2.0 * PI * w) + 64.0 * a * w + 5.0 * s2p * libm::pow(w, 1.5))
                    + 4.0 * w * (16.0 * b * b + 4.0 * b * w + w * w))
    }

    pub fn kinetic_energy(&self, spec: &QuadSpec) -> Result<KineticRoutes, NumericsError> {
        let virial = -0.5 * self.radial_integral(|r| r * self.kinetic_force(r), spec)?.value;
        let trace = self.radial_integral(|r| self.kinetic_tensor(r).trace(), spec)?.value;
        Ok(KineticRoutes { closed: self.kinetic_energy_closed(), virial, trace })
    }

    /// Closed form of E_es + E_mag = ½ k_eff ⟨r²⟩ (per electron pair).
    pub fn energy_es_mag(&self) -> f64 {
        let p = &self.params;
        let (a, b, c, w, n) = (p.c2, p.c3, p.c4, p.omega, p.norm);
        let s2p = libm::sqrt(2.0 * PI);
        p.k_eff * PI * PI * n * n / (4.0 * libm::pow(w, 7.0))
            * (64.0 * w * w * (a * a + 2.0 * b)
                + 480.0 * w * (2.0 * a * c + b * b)
                + 135.0 * s2p * libm::pow(w, 1.5) * (a * b + c)
                + libm::sqrt(2.0 * PI * w) * (21.0 * a * w * w + 1155.0 * b * c)
                + 4608.0 * c * c
                + 12.0 * libm::pow(w, 3.0))
    }

    /// ∫ ρ ½ k_eff r² d²r.
    pub fn energy_es_mag_quadrature(&self, spec: &QuadSpec) -> Result<f64, NumericsError> {
        let k = self.params.k_eff;
        Ok(self.radial_integral(|r| 0.5 * k * r * r * self.density(r), spec)?.value)
    }

    /// Closed forms for ⟨r²⟩, ⟨r⟩, ⟨1/r⟩ and ⟨δ(r)⟩. K and E enter at modulus
    /// 1/√2, i.e. parameter m = p² = 1/2.
    pub fn expectation_values(&self) -> Expectations {
        let p = &self.params;
        let (a, b, c, w, n) = (p.c2, p.c3, p.c4, p.omega, p.norm);
        let n2 = n * n;
        let sp = libm::sqrt(PI);
        let s2p = libm::sqrt(2.0 * PI);
        let (kk, ee) = elliptic_ke(EllipticModulus::new(core::f64::consts::FRAC_1_SQRT_2).expect("modulus"));
        let pi2 = PI * PI;

        let r1 = pi2 * n2 / (2.0 * libm::pow(w, 6.5))
            * (47.0 / 2.0 * sp * w * w * (a * a + 2.0 * b)
                + 639.0 / 4.0 * sp * w * (2.0 * a * c + b * b)
                + SQRT_2 * libm::pow(w, 1.5) * (174.0 * ee - 47.0 * kk) * (a * b + c)
                + 2.0 * SQRT_2 * a * libm::pow(w, 2.5) * (15.0 * ee - 4.0 * kk)
                + 5.0 * libm::sqrt(2.0 * w) * b * c * (273.0 * ee - 74.0 * kk)
                + 11313.0 / 8.0 * sp * c * c
                + 5.0 * sp * libm::pow(w, 3.0));
        let r2 = pi2 * n2 / (2.0 * libm::pow(w, 7.0))
            * (4608.0 * c * c
                + 1155.0 * b * c * libm::sqrt(2.0 * PI * w)
                + 480.0 * (b * b + 2.0 * a * c) * w
                + 135.0 * (a * b + c) * s2p * libm::pow(w, 1.5)
                + 64.0 * (a * a + 2.0 * b) * w * w
                + 21.0 * a * s2p * libm::pow(w, 2.5)
                + 12.0 * libm::pow(w, 3.0));
        let inv_r = pi2 * n2 / (8.0 * libm::pow(w, 5.5))
            * (76.0 * sp * w * w * (a * a + 2.0 * b)
                + 378.0 * sp * w * (2.0 * a * c + b * b)
                + 48.0 * SQRT_2 * libm::pow(w, 1.5) * (9.0 * ee - 2.0 * kk) * (a * b + c)
                + 16.0 * SQRT_2 * a * libm::pow(w, 2.5) * (6.0 * ee - kk)
                + 8.0 * libm::sqrt(2.0 * w) * b * c * (336.0 * ee - 83.0 * kk)
                + 2601.0 * sp * c * c
                + 24.0 * sp * libm::pow(w, 3.0));
        let delta = n2 * PI / (4.0 * libm::pow(w, 5.0))
            * (3.0 * libm::sqrt(PI * w) * (35.0 * b * c + 10.0 * (a * b + c) * w + 4.0 * a * w * w)
                + 8.0
                    * (24.0 * c * c
                        + 6.0 * (b * b + 2.0 * a * c) * w
                        + 2.0 * (a * a + 2.0 * b) * w * w
                        + libm::pow(w, 3.0)));
        Expectations { r2, r: r1, inv_r, delta }
    }

    pub fn expectation_values_quadrature(&self, spec: &QuadSpec) -> Result<Expectations, NumericsError> {
        Ok(Expectations {
            r2: self.radial_integral(|r| r * r * self.density(r), spec)?.value,
            r: self.radial_integral(|r| r * self.density(r), spec)?.value,
            // ρ(r)/r · 2πr is finite at the origin
            inv_r: integrate_semi_infinite(|r| 2.0 * PI * self.density(r), 0.0, spec)?.value,
            delta: self.density(0.0),
        })
    }

    /// E = T + E_H + E_xc + E_es+mag from the given components.
    pub fn total_energy(t: f64, e_h: f64, e_xc: f64, e_es_mag: f64) -> f64 {
        t + e_h + e_xc + e_es_mag
    }

    /// IP = E(N = 1) − E(N = 2) with E(N = 1) = Ω.
    pub fn ionization_potential(&self, e_total: f64) -> f64 {
        self.params.omega - e_total
    }

    /// Report assembled from the closed forms (the Hartree energy from the
    /// ring-kernel virial integral).
    pub fn energy_report(&self, spec: &QuadSpec) -> Result<EnergyReport, NumericsError> {
        let t = self.kinetic_energy_closed();
        let e_ee = self.energy_ee();
        let e_h = self.energy_hartree(spec)?;
        let e_xc = e_ee - e_h;
        let e_es = self.energy_es_mag();
        let e = Self::total_energy(t, e_h, e_xc, e_es);
        let x = self.expectation_values();
        Ok(EnergyReport {
            T: t,
            E_H: e_h,
            E_xc: e_xc,
            E_ee: e_ee,
            E_es_plus_mag: e_es,
            E_total: e,
            IP: self.ionization_potential(e),
            expect_r2: x.r2,
            expect_r: x.r,
            expect_inv_r: x.inv_r,
            expect_delta: x.delta,
        })
    }

    /// Report assembled from quadratures only: virial kinetic energy,
    /// potential-route Hartree energy, virial E_ee and radial expectations.
    pub fn energy_report_quadrature(&self, spec: &QuadSpec) -> Result<EnergyReport, NumericsError> {
        let t = self.kinetic_energy(spec)?.virial;
        let e_ee = self.energy_ee_virial(spec)?;
        let e_h = self.energy_hartree_double(spec)?;
        let e_xc = e_ee - e_h;
        let e_es = self.energy_es_mag_quadrature(spec)?;
        let e = Self::total_energy(t, e_h, e_xc, e_es);
        let x = self.expectation_values_quadrature(spec)?;
        Ok(EnergyReport {
            T: t,
            E_H: e_h,
            E_xc: e_xc,
            E_ee: e_ee,
            E_es_plus_mag: e_es,
            E_total: e,
            IP: self.ionization_potential(e),
            expect_r2: x.r2,
            expect_r: x.r,
            expect_inv_r: x.inv_r,
            expect_delta: x.delta,
        })
    }
}

/// Published values of the table, in [`EnergyReport::rows`] order.
pub const PUBLISHED_TABLE: [(&str, f64); 11] = [
    ("T", 0.615577),
    ("E_H", 0.755497),
    ("E_xc", -0.501339),
    ("E_ee", 0.254158),
    ("E_es_plus_mag", 0.742657),
    ("E_total", 1.612391),
    ("IP", -1.343659),
    ("expect_r2", 20.567403),
    ("expect_r", 5.823553),
    ("expect_inv_r", 1.041717),
    ("expect_delta", 0.0555377),
];
