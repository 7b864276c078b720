//! Command-line arguments and the validated run configuration.

use crate::error::CliError;
use crate::quantity::Quantity;
use clap::{Parser, ValueEnum};
use qdot_core::QuadSpec;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Energies and expectation values by both routes
    Table1,
    /// A radial quantity on a uniform grid
    Profile,
    /// Pair-correlation density and Fermi–Coulomb hole grids
    Pair,
    /// Single-particle density matrix on an (r, r′) grid
    Dm,
    /// Residual of the first law
    Law,
    /// Invariant suite plus the self-consistency fixed point
    Selfcheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Sources, fields and energies of the triplet state of a two-electron
/// quantum dot in a magnetic field. All quantities in effective atomic units.
#[derive(Debug, Parser)]
#[command(name = "qdot", version)]
pub struct Args {
    #[arg(long, value_enum)]
    pub command: Command,
    /// Radial quantity for `profile`
    #[arg(long)]
    pub quantity: Option<String>,
    /// Larmor frequency ω_L; Ω and k_eff stay fixed and ω₀² = k_eff − ω_L²
    #[arg(long, default_value_t = qdot_core::wavefunction::DEFAULT_OMEGA_L, allow_negative_numbers = true)]
    pub omega_l: f64,
    /// Outer radius of the grid (half-width for `pair`)
    #[arg(long, allow_negative_numbers = true)]
    pub r_max: Option<f64>,
    /// Grid points per axis
    #[arg(long)]
    pub samples: Option<usize>,
    /// Radius of the reference electron on the x-axis for `pair`
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub reference_r: f64,
    /// Angle of the first argument of the density matrix, degrees
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub theta: f64,
    /// Angle of the second argument of the density matrix, degrees
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub theta_prime: f64,
    /// Output file; standard output when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Relative tolerance of the adaptive quadrature
    #[arg(long, allow_negative_numbers = true)]
    pub rel_tol: Option<f64>,
    /// Absolute tolerance of the adaptive quadrature
    #[arg(long, allow_negative_numbers = true)]
    pub abs_tol: Option<f64>,
    /// Also write a gnuplot script that plots the CSV output
    #[arg(long)]
    pub gnuplot: Option<PathBuf>,
}

/// Validated configuration shared by every command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub quantity: Option<Quantity>,
    pub omega_l: f64,
    pub r_max: f64,
    pub samples: usize,
    pub reference_r: f64,
    /// radians
    pub theta: f64,
    /// radians
    pub theta_prime: f64,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub quad: QuadSpec,
    pub gnuplot: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_args(args: Args) -> Result<Self, CliError> {
        let (default_r_max, default_samples) = match args.command {
            Command::Profile => (10.0, 200),
            Command::Pair => (8.0, 121),
            Command::Dm => (6.0, 25),
            Command::Law => (6.0, 60),
            Command::Table1 | Command::Selfcheck => (6.0, 60),
        };
        let r_max = args.r_max.unwrap_or(default_r_max);
        let samples = args.samples.unwrap_or(default_samples);
        if !(r_max > 0.0 && r_max.is_finite()) {
            return Err(CliError::Usage(format!("--r-max must be positive, got {r_max}")));
        }
        if samples < 2 {
            return Err(CliError::Usage(format!("--samples must be at least 2, got {samples}")));
        }
        if !(args.omega_l >= 0.0 && args.omega_l.is_finite()) {
            return Err(CliError::Usage(format!("--omega-l must be non-negative, got {}", args.omega_l)));
        }
        if !(args.reference_r >= 0.0 && args.reference_r.is_finite()) {
            return Err(CliError::Usage(format!("--reference-r must be non-negative, got {}", args.reference_r)));
        }
        if args.command == Command::Law && r_max > 8.0 {
            return Err(CliError::Usage(format!("--r-max for law must not exceed 8, got {r_max}")));
        }
        let quantity = match (args.command, args.quantity.as_deref()) {
            (Command::Profile, None) => {
                return Err(CliError::Usage(format!(
                    "profile needs --quantity; valid names: {}",
                    Quantity::names().join(", ")
                )))
            }
            (_, Some(name)) => Some(name.parse::<Quantity>()?),
            (_, None) => None,
        };
        let mut quad = QuadSpec::default();
        if args.rel_tol.is_some() || args.abs_tol.is_some() {
            quad = quad.with_tolerances(args.rel_tol.unwrap_or(quad.rel_tol), args.abs_tol.unwrap_or(quad.abs_tol));
        }
        quad.validate().map_err(|e| CliError::Usage(format!("quadrature tolerances: {e}")))?;
        if args.gnuplot.is_some() && (args.out.is_none() || args.format != Format::Csv) {
            return Err(CliError::Usage("--gnuplot needs --out and CSV output".into()));
        }
        Ok(Self {
            command: args.command,
            quantity,
            omega_l: args.omega_l,
            r_max,
            samples,
            reference_r: args.reference_r,
            theta: args.theta.to_radians(),
            theta_prime: args.theta_prime.to_radians(),
            output_path: args.out,
            format: args.format,
            quad,
            gnuplot: args.gnuplot,
        })
    }

    /// Uniform grid on (0, r_max] with `samples` points.
    pub fn radial_grid(&self) -> Vec<f64> {
        (1..=self.samples).map(|i| self.r_max * i as f64 / self.samples as f64).collect()
    }
}

/// Size of the worker pool from `QDOT_THREADS`, if set.
pub fn thread_cap() -> Result<Option<usize>, CliError> {
    match std::env::var("QDOT_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!("QDOT_THREADS must be a positive integer, got {v:?}"))),
        },
        Err(_) => Ok(None),
    }
}
