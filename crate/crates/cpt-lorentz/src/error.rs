use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LorentzError {
    #[error("signature ({0},{1}) needs p ≥ 1 and q ≥ 1")]
    BadSignature(usize, usize),
    #[error("matrix is not a real isometry of the metric")]
    NotIsometry,
    #[error("invalid cover element: {0}")]
    InvalidCover(String),
    #[error("null vector has no reflection")]
    NullVector,
    #[error("Pin factors must have η(v,v) = ±1")]
    NotUnit,
}
