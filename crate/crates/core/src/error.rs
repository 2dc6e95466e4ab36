use thiserror::Error;

/// Errors shared by every pipeline in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix entry ({row},{col}) is not finite")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not square: {rows} rows, row {row} has {cols} columns")]
    NotSquare { rows: usize, row: usize, cols: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("eigenvalue {value:.17e} is outside the domain of `{function}`")]
    Domain { function: String, value: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.17e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("matrix is not a contraction (spectral norm {norm:.17e})")]
    NotContraction { norm: f64 },

    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("invalid function spec `{spec}`: {reason}")]
    Spec { spec: String, reason: String },

    #[error("{0}")]
    Precondition(String),

    #[error("invalid matrix file: {0}")]
    MatrixFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
