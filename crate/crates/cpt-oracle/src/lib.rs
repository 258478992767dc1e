//! Classical field-theory oracle: formulas as differential operators on polynomial fields.

pub mod dirac;
pub mod error;
pub mod field;
pub mod operator;
pub mod poly;

pub use error::OracleError;
pub use field::{exponents, PolyField};
pub use operator::{apply_operator, correspondence, correspondences, pullback_transform, transform_field, Correspondence};
pub use poly::Poly;
