use thiserror::Error;

use crate::element::Mode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra mode mismatch: {0:?} vs {1:?}")]
    ModeMismatch(Mode, Mode),
    #[error("operands live in different field-symbol spaces")]
    SpaceMismatch,
    #[error("map is not an involution on W")]
    NotInvolutive,
    #[error("map is not invertible on W")]
    NotInvertible,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid field-symbol space: {0}")]
    InvalidSpace(String),
}
