//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not Hermitian: max asymmetry {max_asymmetry:.3e}")]
    NotHermitian { max_asymmetry: f64 },

    #[error("matrix is not unitary: max deviation {deviation:.3e}")]
    NotUnitary { deviation: f64 },

    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:.6e} below -{tol:.1e}")]
    NotPsd { eigenvalue: f64, tol: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size cap exceeded: {0}")]
    SizeCap(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("simulator bug: {0}")]
    SimulatorBug(String),

    #[error("solver stalled: {0}")]
    SolverStall(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
