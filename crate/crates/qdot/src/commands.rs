//! One function per subcommand. Each builds its whole document in memory,
//! then writes it in a single ordered step.

use crate::config::{Command, Format, RunConfig};
use crate::error::CliError;
use crate::format::{emit, gnuplot_script, json_bytes, round9, sig9, CsvDoc};
use crate::suite::{run_suite, CheckOutcome};
use qdot_core::consistency::{uniform_grid, DEFAULT_R_REF, LAW_TOLERANCE};
use qdot_core::energies::PUBLISHED_TABLE;
use qdot_core::sources::symmetric_axis;
use qdot_core::wavefunction::{DEFAULT_OMEGA, DEFAULT_OMEGA_L};
use qdot_core::{EnergyReport, PairKind, TripletParams, TripletState};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

/// Result of a command: whether its own checks passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
}

/// The state for a run: the default triplet with the requested Larmor
/// frequency.
pub fn build_state(config: &RunConfig) -> TripletState {
    let params = TripletParams::from_omega(DEFAULT_OMEGA, DEFAULT_OMEGA_L).with_larmor(config.omega_l);
    TripletState::new(params)
}

pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    let state = build_state(config);
    match config.command {
        Command::Table1 => cmd_table1(config, &state),
        Command::Profile => cmd_profile(config, &state),
        Command::Pair => cmd_pair(config, &state),
        Command::Dm => cmd_dm(config, &state),
        Command::Law => cmd_law(config, &state),
        Command::Selfcheck => cmd_selfcheck(config, &state),
    }
}

fn write_gnuplot(config: &RunConfig, title: &str, columns: &[(usize, &str)], surface: bool) -> Result<(), CliError> {
    if let (Some(script), Some(data)) = (&config.gnuplot, &config.output_path) {
        let text = gnuplot_script(data, title, columns, surface);
        emit(text.as_bytes(), Some(script))?;
    }
    Ok(())
}

fn rounded_report(r: &EnergyReport) -> Value {
    let mut v = serde_json::to_value(r).expect("report serialises");
    round_numbers(&mut v);
    v
}

fn round_numbers(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if let Some(x) = n.as_f64() {
                if n.is_f64() {
                    *v = json!(round9(x));
                }
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_numbers),
        Value::Object(o) => o.values_mut().for_each(round_numbers),
        _ => {}
    }
}

pub fn cmd_table1(config: &RunConfig, state: &TripletState) -> Result<Outcome, CliError> {
    let (closed, quad) =
        rayon::join(|| state.energy_report(&config.quad), || state.energy_report_quadrature(&config.quad));
    let (closed, quad) = (closed?, quad?);
    let rows_c = closed.rows();
    let rows_q = quad.rows();
    let bytes = match config.format {
        Format::Csv => {
            let mut doc = CsvDoc::new(&["quantity", "unit", "closed", "quadrature", "delta", "published"]);
            for i in 0..rows_c.len() {
                let (name, c) = rows_c[i];
                let q = rows_q[i].1;
                let published = PUBLISHED_TABLE[i].1;
                doc.row([name.to_string(), "(a.u.)*".into(), sig9(c), sig9(q), sig9((c - q).abs()), sig9(published)]);
            }
            doc.into_bytes()
        }
        Format::Json => {
            let delta = Map::from_iter(
                rows_c.iter().zip(rows_q.iter()).map(|((n, c), (_, q))| (n.to_string(), json!(round9((c - q).abs())))),
            );
            let published = Map::from_iter(PUBLISHED_TABLE.iter().map(|(n, v)| (n.to_string(), json!(*v))));
            json_bytes(&json!({
                "units": "(a.u.)*",
                "omega_l": config.omega_l,
                "closed": rounded_report(&closed),
                "quadrature": rounded_report(&quad),
                "delta": delta,
                "published": published,
            }))
        }
    };
    emit(&bytes, config.output_path.as_deref())?;
    Ok(Outcome::Pass)
}

pub fn cmd_profile(config: &RunConfig, state: &TripletState) -> Result<Outcome, CliError> {
    let quantity = config.quantity.expect("profile config carries a quantity");
    let grid = config.radial_grid();
    let samples: Vec<(f64, f64, f64)> = grid
        .par_iter()
        .map(|&r| quantity.evaluate(state, r, &config.quad).map(|(v, e)| (r, v, e)))
        .collect::<Result<_, _>>()?;
    let flagged = samples.iter().filter(|s| s.1.is_nan()).count();
    if flagged > 0 {
        eprintln!("qdot: {flagged} samples have density below the floor and are reported as nan");
    }
    let bytes = match config.format {
        Format::Csv => {
            let mut doc = CsvDoc::new(&["r", "value", "est_error"]);
            for &(r, v, e) in &samples {
                doc.numbers(&[r, v, e]);
            }
            doc.into_bytes()
        }
        Format::Json => {
            let rows: Vec<Value> = samples
                .iter()
                .map(|&(r, v, e)| json!({"r": round9(r), "value": finite_or_null(v), "est_error": finite_or_null(e)}))
                .collect();
            json_bytes(&json!({
                "quantity": quantity.name(),
                "units": "(a.u.)*",
                "omega_l": config.omega_l,
                "samples": rows,
            }))
        }
    };
    emit(&bytes, config.output_path.as_deref())?;
    write_gnuplot(config, quantity.name(), &[(2, quantity.name())], false)?;
    Ok(Outcome::Pass)
}

fn finite_or_null(x: f64) -> Value {
    if x.is_finite() {
        json!(round9(x))
    } else {
        Value::Null
    }
}

pub fn cmd_pair(config: &RunConfig, state: &TripletState) -> Result<Outcome, CliError> {
    let axis = symmetric_axis(config.samples, config.r_max);
    let rows: Vec<(Vec<f64>, Vec<f64>)> = (0..axis.len())
        .into_par_iter()
        .map(|i| {
            (
                state.pair_grid_row(PairKind::PairCorrelation, config.reference_r, &axis, i),
                state.pair_grid_row(PairKind::XcHole, config.reference_r, &axis, i),
            )
        })
        .collect();
    let bytes = match config.format {
        Format::Csv => {
            let mut doc = CsvDoc::new(&["x", "y", "g", "rho_xc"]);
            for (i, (g, xc)) in rows.iter().enumerate() {
                for j in 0..axis.len() {
                    doc.numbers(&[axis[i], axis[j], g[j], xc[j]]);
                }
            }
            doc.into_bytes()
        }
        Format::Json => {
            type Pick = fn(&(Vec<f64>, Vec<f64>)) -> &Vec<f64>;
            let round_grid = |pick: Pick| -> Vec<Vec<f64>> {
                rows.iter().map(|r| pick(r).iter().map(|&v| round9(v)).collect()).collect()
            };
            json_bytes(&json!({
                "units": "(a.u.)*",
                "reference_point": {"x": config.reference_r, "y": 0.0},
                "axis": axis.iter().map(|&a| round9(a)).collect::<Vec<_>>(),
                "g": round_grid(|r| &r.0),
                "rho_xc": round_grid(|r| &r.1),
            }))
        }
    };
    emit(&bytes, config.output_path.as_deref())?;
    write_gnuplot(config, "pair correlation g", &[(3, "g")], true)?;
    Ok(Outcome::Pass)
}

pub fn cmd_dm(config: &RunConfig, state: &TripletState) -> Result<Outcome, CliError> {
    let axis = uniform_grid(0.0, config.r_max, config.samples);
    let rows: Vec<Vec<(f64, f64)>> = axis
        .par_iter()
        .map(|&r| {
            axis.iter()
                .map(|&rp| {
                    state.density_matrix(config.theta, config.theta_prime, r, rp, &config.quad).map(|z| (z.re, z.im))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let bytes = match config.format {
        Format::Csv => {
            let mut doc = CsvDoc::new(&["r", "r_prime", "re", "im"]);
            for (i, row) in rows.iter().enumerate() {
                for (j, &(re, im)) in row.iter().enumerate() {
                    doc.numbers(&[axis[i], axis[j], re, im]);
                }
            }
            doc.into_bytes()
        }
        Format::Json => json_bytes(&json!({
            "units": "(a.u.)*",
            "theta_deg": round9(config.theta.to_degrees()),
            "theta_prime_deg": round9(config.theta_prime.to_degrees()),
            "axis": axis.iter().map(|&a| round9(a)).collect::<Vec<_>>(),
            "re": rows.iter().map(|r| r.iter().map(|z| round9(z.0)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "im": rows.iter().map(|r| r.iter().map(|z| round9(z.1)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })),
    };
    emit(&bytes, config.output_path.as_deref())?;
    write_gnuplot(config, "density matrix, real part", &[(3, "Re gamma")], true)?;
    Ok(Outcome::Pass)
}

pub fn cmd_law(config: &RunConfig, state: &TripletState) -> Result<Outcome, CliError> {
    if config.r_max <= 0.1 {
        return Err(CliError::Usage(format!("--r-max for law must exceed 0.1, got {}", config.r_max)));
    }
    let report = state.law_report(&uniform_grid(0.1, config.r_max, config.samples))?;
    let (veff, vm) = state.recover_omega0_sq(DEFAULT_R_REF, &config.quad)?;
    let pass = report.max_residual <= LAW_TOLERANCE;
    let bytes = match config.format {
        Format::Csv => {
            let mut doc = CsvDoc::new(&["r", "lhs", "rhs", "magnetic", "residual"]);
            for p in &report.points {
                doc.numbers(&[p.r, p.lhs, p.rhs, p.magnetic, p.residual]);
            }
            doc.into_bytes()
        }
        Format::Json => {
            let mut points = serde_json::to_value(&report.points).expect("points serialise");
            round_numbers(&mut points);
            json_bytes(&json!({
                "units": "(a.u.)*",
                "max_residual": round9(report.max_residual),
                "k_fit": round9(veff.k_fit),
                "omega0_sq_recovered": round9(veff.k_fit - vm.k_fit),
                "pass": pass,
                "points": points,
            }))
        }
    };
    emit(&bytes, config.output_path.as_deref())?;
    write_gnuplot(config, "first-law residual", &[(5, "residual")], false)?;
    Ok(if pass {
        Outcome::Pass
    } else {
        Outcome::Fail(format!("max first-law residual {} exceeds {LAW_TOLERANCE}", sig9(report.max_residual)))
    })
}

pub fn cmd_selfcheck(config: &RunConfig, state: &TripletState) -> Result<Outcome, CliError> {
    let report = state.self_consistency_check(&config.quad)?;
    let checks = run_suite(state, &config.quad);
    let mut all: Vec<CheckOutcome> = checks;
    all.push(CheckOutcome {
        name: "self-consistency fixed point",
        pass: report.pass,
        detail: format!(
            "omega0^2 recovered {} expected {}",
            sig9(report.omega0_sq_recovered),
            sig9(report.omega0_sq_expected)
        ),
    });
    let first_failure = all.iter().find(|c| !c.pass).map(|c| format!("{}: {}", c.name, c.detail));
    let pass = first_failure.is_none();
    let bytes = match config.format {
        Format::Csv => {
            let mut doc = CsvDoc::new(&["check", "pass", "detail"]);
            for c in &all {
                doc.row([c.name.to_string(), c.pass.to_string(), c.detail.clone()]);
            }
            doc.into_bytes()
        }
        Format::Json => json_bytes(&json!({
            "units": "(a.u.)*",
            "max_residual": round9(report.max_residual),
            "k_fit": round9(report.k_fit),
            "omega0_sq_recovered": round9(report.omega0_sq_recovered),
            "omega0_sq_expected": round9(report.omega0_sq_expected),
            "k_m_fit": round9(report.k_m_fit),
            "pass": pass,
            "checks": all.iter().map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail})).collect::<Vec<_>>(),
        })),
    };
    emit(&bytes, config.output_path.as_deref())?;
    Ok(match first_failure {
        None => Outcome::Pass,
        Some(f) => Outcome::Fail(f),
    })
}
