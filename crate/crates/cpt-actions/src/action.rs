//! Group actions on the formula algebra induced by geometric actions on fields.

use std::fmt;
use std::str::FromStr;

use cpt_algebra::{Gq, Matrix, Scalar, SymbolDerivation, SymbolMap, WMap};
use cpt_lorentz::galilean::galilean_component;
use cpt_lorentz::lie_basis;
use cpt_reps::GroupArg;

use crate::error::ActionError;
use crate::kinematics::Kinematics;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionKind {
    Classical,
    Quantum,
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ActionKind::Classical => "classical",
            ActionKind::Quantum => "quantum",
        })
    }
}

impl FromStr for ActionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "classical" => Ok(ActionKind::Classical),
            "quantum" => Ok(ActionKind::Quantum),
            _ => Err(format!("unknown action kind {s:?}")),
        }
    }
}

/// Which representation of non-orthochronous elements to use on V.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Extension {
    /// ρ′, built from the complexification.
    #[default]
    Canonical,
    /// The declared representation of the full group, pseudo twists included.
    Full,
}

/// Named involutions of W.
#[derive(Debug, Clone, PartialEq)]
pub enum InvolutionSpec {
    Id,
    Star,
    Hash,
    StarHash,
    Custom(WMap<Gq>),
}

impl FromStr for InvolutionSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "id" => Ok(InvolutionSpec::Id),
            "star" | "*" => Ok(InvolutionSpec::Star),
            "hash" | "#" => Ok(InvolutionSpec::Hash),
            "starhash" | "*#" => Ok(InvolutionSpec::StarHash),
            _ => Err(format!("unknown involution {s:?}")),
        }
    }
}

impl fmt::Display for InvolutionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvolutionSpec::Id => "id",
            InvolutionSpec::Star => "star",
            InvolutionSpec::Hash => "hash",
            InvolutionSpec::StarHash => "starhash",
            InvolutionSpec::Custom(_) => "custom",
        })
    }
}

impl Kinematics {
    /// The matrix by which g acts on V.
    pub fn v_matrix<S: Scalar>(&self, g: &GroupArg<S>, ext: Extension) -> Result<Matrix<S>, ActionError> {
        if self.spacetime().is_galilean() {
            self.galilean_component(g)?;
            return Ok(Matrix::identity(self.rep().dim()));
        }
        match (ext, g) {
            (Extension::Full, GroupArg::Lorentz(m)) => Ok(self.rep().rho_full(m)?),
            _ => Ok(self.rep().rho_prime(g)?),
        }
    }

    fn galilean_component<S: Scalar>(&self, g: &GroupArg<S>) -> Result<cpt_lorentz::Component, ActionError> {
        match g {
            GroupArg::Lorentz(m) => galilean_component(m)
                .ok_or_else(|| ActionError::OutsideGroup("not a real Galilean transformation".into())),
            GroupArg::Cover(_) => Err(ActionError::OutsideGroup("cover elements act on Minkowski space only".into())),
        }
    }

    /// Whether ω(g) reverses the time orientation.
    pub fn reverses_time<S: Scalar>(&self, g: &GroupArg<S>) -> Result<bool, ActionError> {
        if self.spacetime().is_galilean() {
            return Ok(self.galilean_component(g)?.reverses_time());
        }
        g.component(self.spacetime().signature())
            .map(|c| c.reverses_time())
            .ok_or_else(|| ActionError::OutsideGroup("ω(g) is not a real Lorentz transformation".into()))
    }

    /// Φ^λ_{ξ…} ↦ Φ^{λ∘ρ(g⁻¹)}_{ω(g)ξ…}.
    pub fn classical_action<S: Scalar>(&self, g: &GroupArg<S>, ext: Extension) -> Result<SymbolMap<S>, ActionError> {
        let inv = g.inverse();
        let rho_inv = self.v_matrix(&inv, ext)?;
        let w = self.space().precompose(&rho_inv);
        Ok(SymbolMap::new(WMap::linear(w), Some(g.spacetime())))
    }

    /// C_* ∘ (classical action) when ω(g) reverses time, the classical action otherwise.
    pub fn quantum_action<S: Scalar>(&self, g: &GroupArg<S>, ext: Extension) -> Result<SymbolMap<S>, ActionError> {
        let classical = self.classical_action(g, ext)?;
        if self.reverses_time(g)? {
            Ok(classical.then(&SymbolMap::new(WMap::star(self.space()), None)))
        } else {
            Ok(classical)
        }
    }

    pub fn action<S: Scalar>(&self, kind: ActionKind, g: &GroupArg<S>, ext: Extension) -> Result<SymbolMap<S>, ActionError> {
        match kind {
            ActionKind::Classical => self.classical_action(g, ext),
            ActionKind::Quantum => self.quantum_action(g, ext),
        }
    }

    /// Derivative at t = 0 of the classical action of exp(tX): λ ↦ λ∘dρ(−X), ξ ↦ Xξ.
    pub fn infinitesimal_action<S: Scalar>(&self, x: &Matrix<S>) -> Result<SymbolDerivation<S>, ActionError> {
        let d = self.spacetime().dim();
        if (x.rows(), x.cols()) != (d, d) {
            return Err(ActionError::OutsideGroup(format!("Lie-algebra element must be {d}×{d}")));
        }
        let w = if self.spacetime().is_galilean() {
            Matrix::zeros(self.space().len(), self.space().len())
        } else {
            self.space().precompose(&self.rep().d_rho(x)?.neg())
        };
        Ok(SymbolDerivation::new(w, Some(x.clone())))
    }

    /// The action of ρ_hol on formulae, for representations with a complex structure.
    pub fn holomorphic_action<S: Scalar>(&self, g: &GroupArg<S>) -> Result<SymbolMap<S>, ActionError> {
        let rho_inv = self.rep().rho_hol(&g.inverse())?;
        let w = self.space().precompose(&rho_inv);
        Ok(SymbolMap::new(WMap::linear(w), Some(g.spacetime())))
    }

    /// Checks that # is an involution of V commuting with ρ(L↑+) and with the grading.
    pub fn check_hash(&self) -> Result<(), ActionError> {
        let h = self.hash();
        if !h.mul(h).is_identity() {
            return Err(ActionError::BadHash("#² ≠ 1".into()));
        }
        let rep = self.rep();
        let mut checks = vec![rep.grading().clone()];
        if !self.spacetime().is_galilean() {
            for f in lie_basis(self.spacetime().signature()) {
                checks.push(rep.d_rho(&f)?);
            }
        }
        if checks.iter().any(|m| m.mul(h) != h.mul(m)) {
            return Err(ActionError::BadHash("# does not commute with ρ".into()));
        }
        Ok(())
    }

    /// $ as a map of W.
    pub fn involution<S: Scalar>(&self, spec: &InvolutionSpec) -> Result<WMap<S>, ActionError> {
        let n = self.space().len();
        let hash = || -> Result<WMap<S>, ActionError> {
            self.check_hash()?;
            Ok(WMap::linear(self.space().precompose(&self.hash().map(S::from_gq))))
        };
        let w = match spec {
            InvolutionSpec::Id => WMap::identity(n),
            InvolutionSpec::Star => WMap::star(self.space()),
            InvolutionSpec::Hash => hash()?,
            InvolutionSpec::StarHash => WMap::star(self.space()).then(&hash()?),
            InvolutionSpec::Custom(m) => {
                if (m.matrix.rows(), m.matrix.cols()) != (n, n) {
                    return Err(ActionError::BadHash(format!("custom involution must be {n}×{n}")));
                }
                WMap { matrix: m.matrix.map(S::from_gq), antilinear: m.antilinear }
            }
        };
        w.require_involution()?;
        Ok(w)
    }
}
