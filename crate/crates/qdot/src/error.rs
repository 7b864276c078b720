use qdot_core::consistency::ConsistencyError;
use qdot_core::NumericsError;
use std::path::PathBuf;
use thiserror::Error;

/// Everything a command can fail with, mapped onto process exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("check failed: {0}")]
    Check(String),
    #[error("cannot write {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("numerical failure: {0}")]
    Numerics(#[from] NumericsError),
}

impl From<ConsistencyError> for CliError {
    fn from(e: ConsistencyError) -> Self {
        match e {
            ConsistencyError::Numerics(n) => Self::Numerics(n),
            other => Self::Check(other.to_string()),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Io { .. } => 2,
            _ => 1,
        }
    }
}
