use cpt_algebra::AlgebraError;
use cpt_lorentz::LorentzError;
use cpt_reps::RepError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ActionError {
    #[error("invalid field declaration: {0}")]
    InvalidField(String),
    #[error("element is outside the acting group: {0}")]
    OutsideGroup(String),
    #[error("# must be an involution of V commuting with the representation: {0}")]
    BadHash(String),
    #[error("map is not invertible on W")]
    NotInvertible,
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Lorentz(#[from] LorentzError),
}
