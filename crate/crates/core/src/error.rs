use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("unsupported term depth: five generators with a single inner triple is the largest shape")]
    UnsupportedDepth,

    #[error("associator coefficients must be some ordering of 1, w, w^2")]
    InvalidAssociatorCoefficients,

    #[error("basis vectors are linearly dependent")]
    DependentBasis,

    #[error("triple product leaves the span at basis triple ({0}, {1}, {2})")]
    NotClosed(usize, usize, usize),

    #[error("structure tensor is not omega-symmetric")]
    NotOmegaSymmetric,

    #[error("wrong dimension: expected {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },

    #[error("invalid {what}: {detail}")]
    Invalid { what: &'static str, detail: String },

    #[error("size over budget: {0}")]
    OverBudget(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
