use std::path::PathBuf;

use thiserror::Error;

/// Failure of a CLI command, carrying the process exit code it maps to.
#[derive(Debug, Error)]
pub enum CliError {
    /// Rejected before any algorithm ran.
    #[error("invalid configuration: {0}")]
    Validation(String),
    /// An algorithm failed on valid input.
    #[error("algorithm failed: {0}")]
    Runtime(#[from] quasiroute::Error),
    /// Some rows of a comparison failed; the table was still written.
    #[error("{failed} of {total} algorithm runs failed")]
    PartialFailure { failed: usize, total: usize },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Runtime(_) | CliError::PartialFailure { .. } => 3,
            CliError::Io { .. } => 4,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        CliError::Validation(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
