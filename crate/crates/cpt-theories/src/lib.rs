//! Formal field theories as spans of formulae, with invariance checks and executable
//! versions of the PT, strong-reflection and CPT theorems.

pub mod counterexample;
pub mod error;
pub mod harness;
pub mod invariance;
pub mod membership;
pub mod theory;

pub use counterexample::{counterexample_2d, counterexample_galilean, Candidate, CounterexampleReport};
pub use error::TheoryError;
pub use harness::{orthochronous_sample, representative, symmetry_premise, theorem_harness, HarnessConfig, HarnessReport, Premise, TheoremKind};
pub use invariance::{check_invariance, check_span, is_hermitian, InvarianceReport, Step, Transformation, TransformationResult, Verdict};
pub use membership::{affine_membership, span_membership, Membership, MEMBERSHIP_TOL, SUPPORT_CAP};
pub use theory::{FormalTheory, Interpretation, Span, SymmetryGroup};
