use cpt_lorentz::{Component, CoverComponent, LorentzError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RepError {
    #[error("spinor representations need signature (1,3)")]
    SpinorSignature,
    #[error("spinor representations need a cover element")]
    NeedsCover,
    #[error("group element has shape {0}×{0}, expected {1}×{1}")]
    Shape(usize, usize),
    #[error("ρ is defined on the orthochronous component only (got {0})")]
    NotOrthochronous(String),
    #[error("element of component {0} is outside the domain of this representation")]
    OutsideDomain(String),
    #[error("representation has no complex structure: {0}")]
    NotComplex(String),
    #[error("cover element of determinant −1 is outside the complexified group")]
    OutsideComplexification,
    #[error(transparent)]
    Lorentz(#[from] LorentzError),
}

impl RepError {
    pub(crate) fn component(c: Component) -> String {
        c.symbol().to_string()
    }

    pub(crate) fn cover(c: CoverComponent) -> String {
        c.to_string()
    }
}
