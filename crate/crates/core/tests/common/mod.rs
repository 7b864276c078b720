#![allow(dead_code)]

use std::f64::consts::PI;

/// Leading coefficients of the large-r expansion e^{-Ωr²} Σ a_k r^k of a
/// closed form, from the Bessel asymptotics i0e(t), i1e(t) ≈ (2πt)^{-1/2}
/// [1 + (1/8t, −3/8t)] at t = Ωr²/2.
pub fn asymptotic_coefficient(g: &qdot_core::closed_form::GaussBessel, k: i32) -> f64 {
    let w = g.omega;
    let root = (PI * w).sqrt();
    // P and the Bessel part carry opposite parities, so at most one term is nonzero
    let lead = g.q.coeff(k + 1) + g.r.coeff(k + 1);
    let next = (g.q.coeff(k + 3) - 3.0 * g.r.coeff(k + 3)) / (4.0 * w);
    g.p.coeff(k) + (lead + next) / root
}
