//! Formal field theories presented by finitely many generators.

use std::fmt;
use std::sync::Arc;

use cpt_actions::Kinematics;
use cpt_algebra::{AlgebraElement, Charge, Gq, Mode, Scalar};
use serde::Serialize;

use crate::error::TheoryError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Interpretation {
    /// Generators are equations F = 0; the theory is their linear span.
    EquationSet,
    /// Generators are Lagrangian densities; the theory is their affine span.
    Density,
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Interpretation::EquationSet => "equations",
            Interpretation::Density => "density",
        })
    }
}

/// L↑+ acting on tensor fields, or its cover when spinors are present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SymmetryGroup {
    Proper,
    Cover,
}

#[derive(Debug, Clone)]
pub struct FormalTheory {
    name: String,
    kinematics: Arc<Kinematics>,
    generators: Vec<AlgebraElement<Gq>>,
    interpretation: Interpretation,
    identifications: Vec<AlgebraElement<Gq>>,
}

fn check_space(kin: &Kinematics, mode: Mode, x: &AlgebraElement<Gq>) -> Result<(), TheoryError> {
    if !Arc::ptr_eq(x.space(), kin.space()) && **x.space() != **kin.space() {
        return Err(TheoryError::Mismatch("formula uses a different symbol space".into()));
    }
    if x.mode() != mode {
        return Err(TheoryError::Mismatch(format!("expected {mode} mode, found {}", x.mode())));
    }
    Ok(())
}

impl FormalTheory {
    pub fn new(
        name: &str,
        kinematics: Arc<Kinematics>,
        generators: Vec<AlgebraElement<Gq>>,
        interpretation: Interpretation,
    ) -> Result<Self, TheoryError> {
        let first = generators.first().ok_or(TheoryError::Empty)?;
        let mode = first.mode();
        for g in &generators {
            check_space(&kinematics, mode, g)?;
        }
        Ok(FormalTheory { name: name.into(), kinematics, generators, interpretation, identifications: Vec::new() })
    }

    /// Formulae identified with zero on top of the generators, e.g. total derivatives.
    pub fn with_identifications(mut self, extra: Vec<AlgebraElement<Gq>>) -> Result<Self, TheoryError> {
        for x in &extra {
            check_space(&self.kinematics, self.mode(), x)?;
        }
        self.identifications = extra;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kinematics(&self) -> &Arc<Kinematics> {
        &self.kinematics
    }

    pub fn generators(&self) -> &[AlgebraElement<Gq>] {
        &self.generators
    }

    pub fn identifications(&self) -> &[AlgebraElement<Gq>] {
        &self.identifications
    }

    pub fn interpretation(&self) -> Interpretation {
        self.interpretation
    }

    pub fn mode(&self) -> Mode {
        self.generators[0].mode()
    }

    pub fn symmetry_group(&self) -> SymmetryGroup {
        if self.kinematics.fields().iter().any(|f| f.rep.is_spinorial()) {
            SymmetryGroup::Cover
        } else {
            SymmetryGroup::Proper
        }
    }

    /// Whether every formula lies in the subalgebra generated by the complex-linear symbols.
    pub fn is_holomorphic(&self) -> bool {
        let space = self.kinematics.space();
        self.generators.iter().chain(&self.identifications).all(|g| {
            g.terms().keys().all(|m| m.0.iter().all(|s| space.charge(s.lambda) == Charge::Plus))
        })
    }

    /// The presentation split into affine and linear parts, converted to the backend `S`.
    pub fn span<S: Scalar>(&self) -> Span<S> {
        let conv = |v: &[AlgebraElement<Gq>]| -> Vec<AlgebraElement<S>> {
            v.iter().map(|g| g.map_coeffs(S::from_gq)).collect()
        };
        let mut linear = conv(&self.identifications);
        match self.interpretation {
            Interpretation::Density => Span { affine: conv(&self.generators), linear },
            Interpretation::EquationSet => {
                let mut all = conv(&self.generators);
                all.append(&mut linear);
                Span { affine: Vec::new(), linear: all }
            }
        }
    }
}

/// {Σ aᵢ affineᵢ + Σ bⱼ linearⱼ : Σ aᵢ = 1}, or the linear span when `affine` is empty.
#[derive(Debug, Clone)]
pub struct Span<S: Scalar> {
    pub affine: Vec<AlgebraElement<S>>,
    pub linear: Vec<AlgebraElement<S>>,
}

impl<S: Scalar> Span<S> {
    /// The linear subspace of differences.
    pub fn directions(&self) -> Span<S> {
        let mut linear: Vec<AlgebraElement<S>> = match self.affine.split_first() {
            Some((g0, rest)) => rest.iter().map(|g| g.try_sub(g0).expect("same space")).collect(),
            None => Vec::new(),
        };
        linear.extend(self.linear.iter().cloned());
        Span { affine: Vec::new(), linear }
    }

    pub fn len(&self) -> usize {
        self.affine.len() + self.linear.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &AlgebraElement<S>> {
        self.affine.iter().chain(&self.linear)
    }
}
