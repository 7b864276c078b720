//! Invariant suite run by `selfcheck`: one named check per property, each
//! against its own tolerance.

use crate::format::sig9;
use qdot_core::consistency::{uniform_grid, LAW_TOLERANCE};
use qdot_core::wavefunction::{antisymmetry_residual, norm_check};
use qdot_core::{PlanarPoint, QuadSpec, TripletState};

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn bounded(name: &'static str, deviation: f64, tol: f64) -> CheckOutcome {
    CheckOutcome {
        name,
        pass: deviation <= tol,
        detail: format!("deviation {} (tolerance {})", sig9(deviation), sig9(tol)),
    }
}

fn failed(name: &'static str, message: impl ToString) -> CheckOutcome {
    CheckOutcome { name, pass: false, detail: message.to_string() }
}

type Check = fn(&TripletState, &QuadSpec) -> CheckOutcome;

const CHECKS: [Check; 11] = [
    parameters,
    normalisation,
    antisymmetry,
    density_routes,
    density_sum_rule,
    pair_sum_rules,
    hermiticity,
    magnetic_field,
    first_law,
    energy_routes,
    kinetic_routes,
];

pub fn run_suite(state: &TripletState, spec: &QuadSpec) -> Vec<CheckOutcome> {
    CHECKS.iter().map(|c| c(state, spec)).collect()
}

fn parameters(state: &TripletState, _: &QuadSpec) -> CheckOutcome {
    match state.params.check_invariants() {
        Ok(()) => CheckOutcome { name: "parameter invariants", pass: true, detail: "ok".into() },
        Err(e) => failed("parameter invariants", e),
    }
}

fn normalisation(state: &TripletState, spec: &QuadSpec) -> CheckOutcome {
    match norm_check(&state.params, spec) {
        Ok(n) => bounded("wave function normalisation", (n - 1.0).abs(), 1e-8),
        Err(e) => failed("wave function normalisation", e),
    }
}

fn antisymmetry(state: &TripletState, _: &QuadSpec) -> CheckOutcome {
    let pts = [(0.3, 0.1, 1.7, 2.9), (2.0, -1.0, 0.5, 0.25), (4.0, 3.0, 4.0, -3.0), (0.0, 0.0, 6.0, 1.0)];
    let worst = pts
        .iter()
        .map(|&(r1, t1, r2, t2)| {
            antisymmetry_residual(PlanarPoint::new(r1, t1), PlanarPoint::new(r2, t2), &state.params)
        })
        .fold(0.0, f64::max);
    bounded("exchange antisymmetry", worst, 1e-9)
}

fn density_routes(state: &TripletState, spec: &QuadSpec) -> CheckOutcome {
    let mut worst: f64 = 0.0;
    for r in [0.0, 0.5, 1.0, 2.5, 5.0, 8.0] {
        match state.density_oracle(r, spec) {
            Ok(q) => worst = worst.max((q.value - state.density(r)).abs()),
            Err(e) => return failed("density closed form vs integral", e),
        }
    }
    bounded("density closed form vs integral", worst, 1e-8)
}

fn density_sum_rule(state: &TripletState, spec: &QuadSpec) -> CheckOutcome {
    match state.density_integral(spec) {
        Ok(q) => bounded("density integrates to 2", (q.value - 2.0).abs(), 1e-6),
        Err(e) => failed("density integrates to 2", e),
    }
}

fn pair_sum_rules(state: &TripletState, spec: &QuadSpec) -> CheckOutcome {
    let mut worst: f64 = 0.0;
    for r in [0.0, 1.0, 3.0] {
        let g = state.pair_sum_rule(r, spec);
        let h = state.xc_hole_sum_rule(r, spec);
        match (g, h) {
            (Ok(g), Ok(h)) => worst = worst.max((g.value - 1.0).abs()).max((h.value + 1.0).abs()),
            (Err(e), _) | (_, Err(e)) => return failed("pair and hole sum rules", e),
        }
    }
    bounded("pair and hole sum rules", worst, 1e-5)
}

fn hermiticity(state: &TripletState, spec: &QuadSpec) -> CheckOutcome {
    let (a, b) = ((1.2, 0.4), (-0.3, 2.1));
    match (state.density_matrix_xy(a, b, spec), state.density_matrix_xy(b, a, spec)) {
        (Ok(ab), Ok(ba)) => {
            let d = ab.add(&ba.conj().scale(-1.0)).abs();
            bounded("density matrix hermiticity", d, 1e-9)
        }
        (Err(e), _) | (_, Err(e)) => failed("density matrix hermiticity", e),
    }
}

fn magnetic_field(state: &TripletState, _: &QuadSpec) -> CheckOutcome {
    let wl = state.params.omega_l;
    let worst =
        uniform_grid(0.1, 10.0, 50).into_iter().map(|r| (state.m_field(r) + wl * wl * r).abs()).fold(0.0, f64::max);
    bounded("magnetic field equals -omega_L^2 r", worst, 1e-12)
}

fn first_law(state: &TripletState, _: &QuadSpec) -> CheckOutcome {
    match state.law_report(&uniform_grid(0.1, 6.0, 60)) {
        Ok(r) => bounded("first law", r.max_residual, LAW_TOLERANCE),
        Err(e) => failed("first law", e),
    }
}

fn energy_routes(state: &TripletState, spec: &QuadSpec) -> CheckOutcome {
    match (state.energy_report(spec), state.energy_report_quadrature(spec)) {
        (Ok(c), Ok(q)) => {
            let worst = c.rows().iter().zip(q.rows().iter()).map(|(a, b)| (a.1 - b.1).abs()).fold(0.0, f64::max);
            bounded("energies closed form vs quadrature", worst, 1e-4)
        }
        (Err(e), _) | (_, Err(e)) => failed("energies closed form vs quadrature", e),
    }
}

fn kinetic_routes(state: &TripletState, spec: &QuadSpec) -> CheckOutcome {
    match state.kinetic_energy(spec) {
        Ok(k) => bounded("kinetic energy virial vs tensor trace", (k.virial - k.trace).abs(), 1e-8),
        Err(e) => failed("kinetic energy virial vs tensor trace", e),
    }
}
