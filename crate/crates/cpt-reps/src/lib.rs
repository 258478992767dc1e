//! Representations of L↑+ and its four-dimensional cover: tensor functors in any signature,
//! Weyl and Dirac spinors, complexification, the grading by τ, and the canonical extension
//! ρ′ to the non-orthochronous component.

pub mod dirac;
pub mod error;
pub mod rep;
pub mod spec;
pub mod spin;

pub use error::RepError;
pub use rep::{standard_complex_structure, GroupArg, Rep};
pub use spec::RepSpec;
