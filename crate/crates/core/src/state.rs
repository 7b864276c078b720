//! A parameter set together with every radial closed form derived from it.

use crate::closed_form::{poly_mul, GaussBessel, MomentTable};
use crate::wavefunction::TripletParams;
use alloc::vec::Vec;
use core::f64::consts::PI;

/// Closed forms, each standing for e^{-2Ωr²} times a moment combination
/// (see [`GaussBessel::eval_damped`]) unless noted.
#[derive(Debug, Clone)]
pub struct StateForms {
    /// ρ and its first three radial derivatives.
    pub rho: [GaussBessel; 4],
    /// ρ ℰ_ee, the electron-interaction force density.
    pub rho_e_ee: GaussBessel,
    /// Paramagnetic current j_p (azimuthal).
    pub j_p: GaussBessel,
    /// Kinetic tensor radial part f and isotropic part k.
    pub f: GaussBessel,
    pub k: GaussBessel,
    /// Kinetic force z = 2[(f + k)′ + f/r].
    pub z: GaussBessel,
    /// Differential density force d = −¼ (∇²ρ)′.
    pub d: GaussBessel,
    /// Undamped integrals f₁, f₂, f₃ of the kinetic tensor.
    pub f1: GaussBessel,
    pub f2: GaussBessel,
    pub f3: GaussBessel,
}

impl StateForms {
    pub fn new(p: &TripletParams) -> Self {
        let w = p.omega;
        let moments = MomentTable::new(w, 12);
        let n2 = p.norm * p.norm;
        let b = p.g0_sq_poly();

        let rho0 = moments.combine(0, &b, 1).scale(4.0 * PI * n2);
        let rho1 = rho0.damped_derivative();
        let rho2 = rho1.damped_derivative();
        let rho3 = rho2.damped_derivative();
        let rho_e_ee = moments.combine(1, &b, -1).scale(4.0 * PI * n2);
        let j_p = moments.combine(1, &b, 0).scale(4.0 * PI * n2);

        // (g₁² − g₀²/x⁴) x² with g₁ = g₀′/x, factored as
        // (g₁ − g₀/x²)(g₁ + g₀/x²) x² = (c₂ + 2c₃x + 3c₄x²)(2x + 3c₂x² + 4c₃x³ + 5c₄x⁴)
        let minus = [p.c2, 2.0 * p.c3, 3.0 * p.c4];
        let plus = [0.0, 2.0, 3.0 * p.c2, 4.0 * p.c3, 5.0 * p.c4];
        let f1 = moments.combine(1, &poly_mul(&minus, &plus), 0).shift(-1);
        // x g₁ g₀ = g₀ g₀′ = ½ (g₀²)′
        let half_deriv: Vec<f64> = (1..b.len()).map(|j| 0.5 * j as f64 * b[j]).collect();
        let f2 = moments.combine(0, &half_deriv, 0);
        let f3 = moments.combine(0, &b, -1);

        let pre = PI * n2;
        let f = f1
            .derivative()
            .shift(1)
            .scale(1.0 / w)
            .add(&f2.derivative().shift(1).scale(-2.0))
            .scale(pre)
            .add(&rho0.shift(2).scale(0.5 * w * w));
        let k = f1.scale(1.0 / w).add(&f3.scale(2.0)).scale(pre);
        let z = f.add(&k).damped_derivative().add(&f.shift(-1)).scale(2.0);
        let lap = rho2.add(&rho1.shift(-1));
        let d = lap.damped_derivative().scale(-0.25);

        Self { rho: [rho0, rho1, rho2, rho3], rho_e_ee, j_p, f, k, z, d, f1, f2, f3 }
    }
}

/// The state used by every source, field and energy routine.
#[derive(Debug, Clone)]
pub struct TripletState {
    pub params: TripletParams,
    pub forms: StateForms,
}

impl TripletState {
    pub fn new(params: TripletParams) -> Self {
        Self { forms: StateForms::new(&params), params }
    }
}

impl Default for TripletState {
    fn default() -> Self {
        Self::new(TripletParams::default())
    }
}
