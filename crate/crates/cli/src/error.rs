use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const MISMATCH: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const NUMERIC: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error(transparent)]
    Input(diffnorm_core::Error),

    #[error("numeric oracle failed: {0}")]
    Numeric(diffnorm_core::Error),
}

impl From<diffnorm_core::Error> for CliError {
    fn from(err: diffnorm_core::Error) -> Self {
        if err.is_numeric() {
            CliError::Numeric(err)
        } else {
            CliError::Input(err)
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Numeric(_) => exit::NUMERIC,
            _ => exit::USAGE,
        }
    }
}
