//! Error type shared by the exact arithmetic layer.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid minimal polynomial: {0}")]
    InvalidMinimalPolynomial(String),
    #[error("invalid isolating interval: {0}")]
    InvalidInterval(String),
    #[error("elements belong to different number fields")]
    FieldMismatch,
}
