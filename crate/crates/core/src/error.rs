use thiserror::Error;

use crate::scalar::Scalar;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("evaluation at a pole: {point}")]
    Pole { point: Scalar },

    #[error("variable mismatch: `{left}` vs `{right}`")]
    VariableMismatch { left: String, right: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("basis index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("power exponent must be at least 1 (the algebra has no unit)")]
    ZeroPower,

    #[error("unsupported identity for this operation: {0}")]
    UnsupportedIdentity(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A closed-form family hits a pole or a vanishing denominator.
    #[error("singular parameter at index {index}: {detail}")]
    SingularParameter { index: usize, detail: String },

    #[error("unclassified regime: {0}")]
    UnclassifiedRegime(String),

    #[error("unsupported symbolic step: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
