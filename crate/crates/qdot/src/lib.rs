//! Command-line driver for the triplet quantum-dot library: configuration,
//! commands, the invariant suite and output formatting.

pub mod commands;
pub mod config;
pub mod error;
pub mod format;
pub mod quantity;
pub mod suite;

pub use commands::{run, Outcome};
pub use config::{Args, RunConfig};
pub use error::CliError;
