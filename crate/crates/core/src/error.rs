use thiserror::Error;

/// Errors produced by the exact and numeric routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid recurrence: {coeffs} coefficients but {init} initial terms")]
    InvalidRecurrence { coeffs: usize, init: usize },

    #[error("index {value} outside supported range {min}..={max}")]
    Range { value: usize, min: usize, max: usize },

    #[error("index error: {0}")]
    Index(String),

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("cannot parse token {position} ({token:?}) as an integer")]
    Parse { token: String, position: usize },

    #[error("precision error: {0}")]
    Precision(String),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal residual {residual:e})")]
    Convergence { sweeps: usize, residual: f64 },
}

impl Error {
    /// True for failures of the floating-point oracle rather than of the input.
    pub fn is_numeric(&self) -> bool {
        matches!(self, Error::Precision(_) | Error::Convergence { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
