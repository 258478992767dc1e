//! Free, commutative and supercommutative complex algebras generated by field symbols.
//!
//! Elements are kept in a canonical form so that equality of formulae is equality of
//! coefficient maps. Coefficients are exact Gaussian rationals ([`Gq`]) by default, with a
//! `Complex64` backend for sampled group elements.

pub mod element;
pub mod error;
pub mod maps;
pub mod matrix;
pub mod par;
pub mod scalar;
pub mod space;

pub use element::{canonical_order, normal_form, AlgebraElement, FieldSymbol, Mode, Monomial, RawElement};
pub use error::AlgebraError;
pub use maps::{conjugation_c, dagger, SymbolDerivation, SymbolMap, WMap};
pub use matrix::Matrix;
pub use par::Execution;
pub use scalar::{Gq, Scalar, DROP_TOL, REL_TOL};
pub use space::{BasisEntry, Charge, FieldSymbolSpace};
