//! Classical and quantum actions of Lorentz-group elements on formula algebras, their
//! infinitesimal version, the involutions $ ∈ {id, *, #, *#}, and PT/CPT classification.

pub mod action;
pub mod charge;
pub mod error;
pub mod kinematics;

pub use action::{ActionKind, Extension, InvolutionSpec};
pub use charge::{classify_charge, ChargeClass};
pub use error::ActionError;
pub use kinematics::{FieldDecl, Kinematics, Spacetime};
