use thiserror::Error;

/// Errors raised by the lattice, discriminant-form and polynomial routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("bilinear form is degenerate (radical of dimension {radical})")]
    Degenerate { radical: usize },
    #[error("lattice is odd: diagonal entry {index} is odd")]
    OddLattice { index: usize },
    #[error("lattice is not definite (signature ({positive},{negative}))")]
    Indefinite { positive: usize, negative: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("input too large: {0}")]
    Oversize(String),
    #[error("2-Sylow subgroup is not 2-elementary (cyclic factor of order {order})")]
    NotTwoElementary { order: u64 },
    #[error("invalid finite quadratic form: {0}")]
    InvalidForm(String),
    #[error("coefficient lambda_{index} is zero")]
    ZeroCoefficient { index: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("verification failed: {0}")]
    CheckFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
