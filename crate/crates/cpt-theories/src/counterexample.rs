//! Theories that are L↑+-invariant but admit no time-reversing symmetry: 2D Minkowski
//! space and Galilean spacetime.

use std::sync::Arc;

use cpt_actions::{FieldDecl, Kinematics, Spacetime};
use cpt_algebra::{AlgebraElement, Execution, FieldSymbol, Gq, Matrix, Mode, Scalar, SymbolDerivation, SymbolMap, WMap};
use cpt_lorentz::galilean::galilean_time_reversal;
use cpt_lorentz::{sample_proper_ortho, Signature};
use cpt_reps::RepSpec;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::TheoryError;
use crate::harness::{symmetry_premise, Premise};
use crate::invariance::{check_invariance, Transformation, TransformationResult, Verdict};
use crate::membership::{span_membership, SUPPORT_CAP};
use crate::theory::{FormalTheory, Interpretation};

#[derive(Debug, Clone, Serialize)]
pub struct Candidate {
    pub alpha: String,
    pub element: String,
    pub verdict: Verdict,
    pub image: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleReport {
    pub name: String,
    pub theory: Vec<String>,
    pub premises: Vec<Premise>,
    pub candidates: Vec<Candidate>,
    pub obstruction: String,
    /// Symmetry premise holds and every time-reversing candidate fails.
    pub confirmed: bool,
}

fn sym(space: &Arc<cpt_algebra::FieldSymbolSpace>, derivs: &[u8]) -> AlgebraElement<Gq> {
    AlgebraElement::symbol(space.clone(), Mode::Commutative, FieldSymbol::new(0, derivs.to_vec()))
}

fn candidate_results(
    theory: &FormalTheory,
    candidates: Vec<(String, String, SymbolMap<Gq>)>,
) -> Result<Vec<Candidate>, TheoryError> {
    let span = theory.span::<Gq>();
    let mut out = Vec::new();
    for (alpha, element, map) in candidates {
        let image = map.apply(&theory.generators()[0]);
        let m = span_membership(&image, &span, SUPPORT_CAP)?;
        let t = Transformation::map(element.clone(), map);
        let ok = check_invariance(theory, &[t], Execution::Sequential)?.is_invariant();
        debug_assert!(ok || !m.member || theory.generators().len() > 1);
        out.push(Candidate { alpha, element, verdict: Verdict::from_bool(ok), image: image.to_string() });
    }
    Ok(out)
}

/// 2D boost with e^{j} = `e_j` on the null vector e₀ + e₁.
fn boost_2d(e_j: Gq) -> Matrix<Gq> {
    let inv = e_j.inv().expect("nonzero");
    let half = Gq::ratio(1, 2);
    let c = (e_j.clone() + inv.clone()) * half.clone();
    let s = (e_j - inv) * half;
    Matrix::from_rows(vec![vec![c.clone(), s.clone()], vec![s, c]])
}

/// Φ³∂_ξΦ = 1 with ρ(g) = e^{j(g)/4} on V = ℝ, ξ = e₀ + e₁ null.
pub fn counterexample_2d(samples: usize, seed: u64) -> Result<CounterexampleReport, TheoryError> {
    let sig = Signature::new(1, 1)?;
    let kin = Arc::new(Kinematics::new(Spacetime::Lorentz(sig), vec![FieldDecl::real("phi", RepSpec::Trivial(1))])?);
    let space = kin.space().clone();
    let phi = sym(&space, &[]);
    let d_xi = sym(&space, &[0]) + sym(&space, &[1]);
    let top = phi.pow(3) * d_xi;
    let one = AlgebraElement::one(space.clone(), Mode::Commutative);
    let generator = top.clone() - one;
    let theory = FormalTheory::new("phi^3 d_xi phi = 1", kin.clone(), vec![generator], Interpretation::EquationSet)?;

    // The action uses λ ↦ λ∘ρ(g⁻¹) = e^{−j/4}λ together with ω(g) on directions.
    let boost_gen = Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
    let mut exact = vec![Transformation::infinitesimal(
        "boost generator",
        SymbolDerivation::new(Matrix::diag(&[Gq::ratio(-1, 4)]), Some(boost_gen)),
    )];
    for (e_j, rho_inv) in [(16, Gq::ratio(1, 2)), (81, Gq::ratio(1, 3)), (-1, Gq::one())] {
        let (g, label) = if e_j > 0 {
            (boost_2d(Gq::from_i64(e_j)), format!("boost e^j = {e_j}"))
        } else {
            (boost_2d(Gq::ratio(1, 16)), "boost e^j = 1/16".to_string())
        };
        let rho_inv = if e_j > 0 { rho_inv } else { Gq::from_i64(2) };
        exact.push(Transformation::map(label, SymbolMap::new(WMap::linear(Matrix::diag(&[rho_inv])), Some(g))));
    }
    let exact_report = check_invariance::<Gq>(&theory, &exact, Execution::Sequential)?;
    let mut sampled = Vec::new();
    for k in 0..samples as u64 {
        let g = sample_proper_ortho(seed, k, sig).matrix;
        let e_j = (g[(0, 0)] + g[(0, 1)]).re;
        let w = Matrix::diag(&[Complex64::new(e_j.powf(-0.25), 0.0)]);
        sampled.push(Transformation::map(format!("sample[{k}]"), SymbolMap::new(WMap::linear(w), Some(g))));
    }
    let float_report = check_invariance::<Complex64>(&theory, &sampled, Execution::default())?;
    let residual = float_report.transformations.iter().filter_map(|t| t.residual).fold(0.0, f64::max);
    let symmetric = exact_report.is_invariant() && float_report.is_invariant();
    let failing: Vec<TransformationResult> =
        exact_report.transformations.into_iter().chain(float_report.transformations).filter(|t| !t.passed()).collect();
    let premise = Premise {
        name: "orthochronous invariance".into(),
        verdict: Verdict::from_bool(symmetric),
        detail: format!("generator and 3 exact boosts, {samples} samples (seed {seed}), max residual {residual:.1e}"),
        checks: failing,
    };

    let minus_one = Matrix::<Gq>::identity(2).neg();
    let alphas = [Gq::one(), -Gq::one(), Gq::from_i64(2), Gq::from_i64(-2), Gq::ratio(1, 2), Gq::ratio(-1, 2)];
    let mut candidates = Vec::new();
    for a in &alphas {
        let w = WMap::linear(Matrix::diag(std::slice::from_ref(a)));
        candidates.push((a.to_string(), "ω = −𝟙".to_string(), SymbolMap::new(w.clone(), Some(minus_one.clone()))));
        let quantum = SymbolMap::new(w, Some(minus_one.clone())).then(&SymbolMap::new(WMap::star(&space), None));
        candidates.push((a.to_string(), "ω = −𝟙, then C_*".to_string(), quantum));
    }
    let candidates = candidate_results(&theory, candidates)?;

    // With Φ ↦ αΦ the degree-k part picks up α^k; the reflection of ∂_ξ supplies a sign s.
    let degree = top.terms().keys().next().map(|m| m.degree()).unwrap_or(0);
    let reflected = SymbolMap::new(WMap::identity(1), Some(minus_one)).apply(&top);
    let sign = reflected.coefficient(top.terms().keys().next().expect("non-empty")) * top.terms().values().next().expect("non-empty").inv().expect("nonzero");
    let needed = sign.inv().expect("±1");
    let obstruction = format!("{} maps to {}·α^{degree}·({}); membership requires α^{degree} = {needed}", top, sign, top);
    let no_real_root = degree.is_multiple_of(2) && needed.is_real() && needed.real_signum() < 0;
    let obstruction = if no_real_root { format!("{obstruction}, impossible for real α") } else { obstruction };
    let confirmed = symmetric && candidates.iter().all(|c| c.verdict == Verdict::Fail) && no_real_root;
    Ok(CounterexampleReport {
        name: "2d".into(),
        theory: theory.generators().iter().map(|g| format!("{g} = 0")).collect(),
        premises: vec![premise],
        candidates,
        obstruction,
        confirmed,
    })
}

/// ∂_{ξ0}Φ = Φ, ∂_{ξk}Φ = 0 on Galilean spacetime of dimension d with trivial V = ℝ.
pub fn counterexample_galilean(d: usize, samples: usize, seed: u64) -> Result<CounterexampleReport, TheoryError> {
    if d < 2 {
        return Err(TheoryError::Mismatch("Galilean counterexample needs d ≥ 2".into()));
    }
    let kin = Arc::new(Kinematics::new(Spacetime::Galilean(d), vec![FieldDecl::real("u", RepSpec::Trivial(1))])?);
    let space = kin.space().clone();
    let u = sym(&space, &[]);
    let mut generators = vec![sym(&space, &[0]) - u];
    generators.extend((1..d as u8).map(|k| sym(&space, &[k])));
    let theory = FormalTheory::new("galilean", kin.clone(), generators, Interpretation::EquationSet)?;
    let premise = symmetry_premise(&theory, samples, seed, Execution::default())?;

    let t = galilean_time_reversal(d);
    let mut elements = vec![("time reversal".to_string(), t.clone())];
    let full = Matrix::<Gq>::identity(d).neg();
    elements.push(("−𝟙".to_string(), full));
    let mut candidates = Vec::new();
    for (label, g) in &elements {
        for a in [Gq::one(), -Gq::one(), Gq::from_i64(2), Gq::from_i64(-2)] {
            let w = WMap::linear(Matrix::diag(std::slice::from_ref(&a)));
            candidates.push((a.to_string(), label.clone(), SymbolMap::new(w.clone(), Some(g.clone()))));
            let quantum = SymbolMap::new(w, Some(g.clone())).then(&SymbolMap::new(WMap::star(&space), None));
            candidates.push((a.to_string(), format!("{label}, then C_*"), quantum));
        }
    }
    let candidates = candidate_results(&theory, candidates)?;
    let image = SymbolMap::new(WMap::identity(1), Some(t)).apply(&theory.generators()[0]);
    let obstruction = format!(
        "time reversal sends {} to {} times α, outside the span for every α ≠ 0",
        theory.generators()[0],
        image
    );
    let confirmed = premise.verdict.passed() && candidates.iter().all(|c| c.verdict == Verdict::Fail);
    Ok(CounterexampleReport {
        name: format!("galilean d={d}"),
        theory: theory.generators().iter().map(|g| format!("{g} = 0")).collect(),
        premises: vec![premise],
        candidates,
        obstruction,
        confirmed,
    })
}
