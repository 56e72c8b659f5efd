//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BhdError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("superoperator dimension {required} exceeds the configured cap {cap}")]
    CapacityExceeded { required: usize, cap: usize },

    #[error("eigensolver did not converge: {0}")]
    NotConverged(String),

    #[error("unsupported zero-eigenvalue degeneracy {0} (expected 1 or 2)")]
    UnsupportedDegeneracy(usize),

    #[error("ill-conditioned steady-state remixing system: {0}")]
    IllConditioned(String),

    #[error("integration failure at t = {t}: {msg}")]
    Integration { t: f64, msg: String },

    #[error("state blow-up at t = {t}: |y| = {norm:.3e}")]
    BlowUp { t: f64, norm: f64 },

    #[error("undefined correlation: mode occupation {0:.3e} below detection threshold")]
    UndefinedCorrelation(f64),

    #[error("limit cycle not converged: envelope drift {drift:.3e} exceeds {tol:.3e}")]
    LimitCycleNotConverged { drift: f64, tol: f64 },

    #[error("linear-algebra backend error: {0}")]
    Linalg(String),
}

pub type Result<T> = std::result::Result<T, BhdError>;
