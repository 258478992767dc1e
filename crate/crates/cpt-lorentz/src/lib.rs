//! Spacetime isometry groups: components, Lie algebras, sampling, the four-dimensional
//! covers and the Clifford/Pin realization used to check the PT axioms.

pub mod axioms;
pub mod clifford;
pub mod cover;
pub mod error;
pub mod galilean;
pub mod lie;
pub mod signature;

pub use axioms::{verify_axioms, verify_axioms_galilean, AxiomCheck, AxiomReport, Verdict};
pub use clifford::{pin_element, pin_project, CliffordElement, Metric};
pub use cover::{sample_cover, CoverComponent, CoverElement};
pub use error::LorentzError;
pub use lie::{expm, lie_basis, sample_proper_ortho, LorentzElement};
pub use signature::{classify_component, is_isometry, Component, Signature};
