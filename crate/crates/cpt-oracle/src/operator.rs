//! Differential operators D_F on polynomial fields and the correspondence
//! D_F(u(g)⁻¹Φ) = D_{ρ̄(g)F}(Φ)∘ω(g).

use std::collections::HashMap;

use cpt_actions::{Extension, Kinematics};
use cpt_algebra::{AlgebraElement, FieldSymbol, FieldSymbolSpace, Matrix, Mode, Scalar};
use cpt_reps::GroupArg;

use crate::error::OracleError;
use crate::field::PolyField;
use crate::poly::Poly;

/// D_F(Φ): each symbol λ⊗(ξ₁…ξₙ) becomes ∂_{ξ₁}…∂_{ξₙ}(λ∘Φ), products are pointwise.
pub fn apply_operator<S: Scalar>(f: &AlgebraElement<S>, phi: &PolyField<S>) -> Result<Poly<S>, OracleError> {
    let space = f.space();
    if phi.dim_v() != space.len() {
        return Err(OracleError::Shape { expected: space.len(), found: phi.dim_v() });
    }
    let d = space.spacetime_dim();
    if f.mode() == Mode::Supercommutative {
        if let Some(j) = f.terms().keys().flat_map(|m| m.0.iter()).map(|s| s.lambda).find(|&j| space.grade(j) == 1) {
            return Err(OracleError::OddSymbol(space.name(j).to_string()));
        }
    }
    let mut cache: HashMap<FieldSymbol, Poly<S>> = HashMap::new();
    let mut out = Poly::zero(d);
    for (mono, c) in f.terms() {
        let mut term = Poly::constant(d, c.clone());
        for s in &mono.0 {
            let v = cache.entry(s.clone()).or_insert_with(|| symbol_value(space, s, phi)).clone();
            term = term.mul(&v);
        }
        out = out.add(&term);
    }
    Ok(out)
}

fn symbol_value<S: Scalar>(space: &FieldSymbolSpace, s: &FieldSymbol, phi: &PolyField<S>) -> Poly<S> {
    let d = space.spacetime_dim();
    let functional = &space.entry(s.lambda).functional;
    let mut p = functional
        .iter()
        .zip(&phi.components)
        .filter(|(c, _)| !c.is_zero())
        .fold(Poly::zero(d), |acc, (c, comp)| acc.add(&comp.scale(&S::from_gq(c))));
    for &mu in &s.derivs {
        p = p.diff(mu as usize);
    }
    p
}

/// u(g)Φ = ρ(g)∘Φ∘ω(g)⁻¹ for explicit matrices ρ(g) on V and ω(g) on M.
pub fn pullback_transform<S: Scalar>(rho: &Matrix<S>, omega: &Matrix<S>, phi: &PolyField<S>) -> PolyField<S> {
    let inv = omega.inverse().expect("invertible spacetime map");
    phi.compose_linear(&inv).apply_matrix(rho)
}

/// u(g)Φ with ρ(g) taken from the kinematics.
pub fn transform_field<S: Scalar>(
    kin: &Kinematics,
    g: &GroupArg<S>,
    ext: Extension,
    phi: &PolyField<S>,
) -> Result<PolyField<S>, OracleError> {
    let rho = kin.v_matrix(g, ext)?;
    Ok(pullback_transform(&rho, &g.spacetime(), phi))
}

/// Both sides of the correspondence for one formula and one field.
#[derive(Debug, Clone)]
pub struct Correspondence<S: Scalar> {
    pub lhs: Poly<S>,
    pub rhs: Poly<S>,
}

impl<S: Scalar> Correspondence<S> {
    pub fn holds_exactly(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Largest relative pointwise discrepancy at the given points.
    pub fn max_relative_error(&self, points: &[Vec<S>]) -> f64 {
        points
            .iter()
            .map(|x| {
                let (a, b) = (self.lhs.eval(x), self.rhs.eval(x));
                (a.clone() - b.clone()).norm() / a.norm().max(b.norm()).max(1.0)
            })
            .fold(0.0, f64::max)
    }
}

pub fn correspondence<S: Scalar>(
    kin: &Kinematics,
    g: &GroupArg<S>,
    ext: Extension,
    f: &AlgebraElement<S>,
    phi: &PolyField<S>,
) -> Result<Correspondence<S>, OracleError> {
    Ok(correspondences(kin, g, ext, std::slice::from_ref(f), phi)?.remove(0))
}

/// Same as [`correspondence`] for several formulas, transforming Φ once.
pub fn correspondences<S: Scalar>(
    kin: &Kinematics,
    g: &GroupArg<S>,
    ext: Extension,
    formulas: &[AlgebraElement<S>],
    phi: &PolyField<S>,
) -> Result<Vec<Correspondence<S>>, OracleError> {
    let pulled = transform_field(kin, &g.inverse(), ext, phi)?;
    let action = kin.classical_action(g, ext)?;
    let omega = g.spacetime();
    formulas
        .iter()
        .map(|f| {
            let lhs = apply_operator(f, &pulled)?;
            let rhs = apply_operator(&action.apply(f), phi)?.compose_linear(&omega);
            Ok(Correspondence { lhs, rhs })
        })
        .collect()
}
