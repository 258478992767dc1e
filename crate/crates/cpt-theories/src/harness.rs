//! Executable forms of the PT, strong-reflection, CPT and holomorphic PT theorems.
//!
//! Premises are checked first. A failed premise makes the run "not applicable"; only a
//! failed conclusion with all premises holding counts as a violation.

use std::fmt;
use std::str::FromStr;

use cpt_actions::{classify_charge, Extension, InvolutionSpec, Kinematics, Spacetime};
use cpt_algebra::{Execution, Gq, Matrix, Mode, Scalar, SymbolMap, WMap};
use cpt_lorentz::galilean::{galilean_lie_basis, sample_galilean};
use cpt_lorentz::{lie_basis, sample_cover, sample_proper_ortho, verify_axioms, CoverComponent, CoverElement};
use cpt_reps::GroupArg;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::TheoryError;
use crate::invariance::{check_invariance, is_hermitian, Step, Transformation, TransformationResult, Verdict};
use crate::theory::{FormalTheory, SymmetryGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremKind {
    /// Tensor fields: invariance under ρ̄′(L↓+).
    Pt,
    /// Invariance under S∘ρ̄′(L↓+).
    StrongReflection,
    /// Invariance under C_$∘ρ̄′(L↓+) if and only if $-Hermitian.
    Cpt,
    /// Holomorphic theories: invariance under ρ̄_hol(L̃↓ᵃ+).
    Holomorphic,
}

impl fmt::Display for TheoremKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremKind::Pt => "pt",
            TheoremKind::StrongReflection => "sr",
            TheoremKind::Cpt => "cpt",
            TheoremKind::Holomorphic => "hol",
        })
    }
}

impl FromStr for TheoremKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pt" => Ok(TheoremKind::Pt),
            "sr" => Ok(TheoremKind::StrongReflection),
            "cpt" => Ok(TheoremKind::Cpt),
            "hol" => Ok(TheoremKind::Holomorphic),
            _ => Err(format!("unknown theorem {s:?} (expected pt, sr, cpt or hol)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct HarnessConfig {
    /// Sampled elements of L↑+ used to confirm the infinitesimal premise.
    pub samples: usize,
    /// Products representative·sample at which the conclusion is spot-checked.
    pub products: usize,
    pub seed: u64,
    pub dollar: InvolutionSpec,
    pub exec: Execution,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig { samples: 25, products: 3, seed: 2024, dollar: InvolutionSpec::Star, exec: Execution::default() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Premise {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<TransformationResult>,
}

impl Premise {
    fn new(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        Premise { name: name.into(), verdict: Verdict::from_bool(ok), detail: detail.into(), checks: Vec::new() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HarnessReport {
    pub theory: String,
    pub theorem: TheoremKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dollar: Option<String>,
    pub premises: Vec<Premise>,
    pub transformations: Vec<TransformationResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hermitian: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl HarnessReport {
    pub fn premises_hold(&self) -> bool {
        self.premises.iter().all(|p| p.verdict.passed())
    }

    pub fn conclusion_holds(&self) -> bool {
        self.transformations.iter().all(TransformationResult::passed)
    }
}

/// The fixed non-orthochronous element at which conclusions are checked exactly.
pub fn representative(kin: &Kinematics, theorem: TheoremKind) -> GroupArg<Gq> {
    let sig = kin.spacetime().signature();
    let spinorial = kin.fields().iter().any(|f| f.rep.is_spinorial());
    match theorem {
        TheoremKind::Holomorphic => {
            GroupArg::Cover(CoverElement { a: Matrix::identity(2), b: Matrix::<Gq>::identity(2).neg() })
        }
        _ if spinorial => GroupArg::Cover(CoverElement::total_reflection_lift()),
        _ => GroupArg::Lorentz(sig.pt_representative()),
    }
}

/// Sample `k` of the connected group acting on this theory's fields.
pub fn orthochronous_sample(kin: &Kinematics, group: SymmetryGroup, seed: u64, k: u64) -> GroupArg<Complex64> {
    match kin.spacetime() {
        Spacetime::Galilean(d) => GroupArg::Lorentz(sample_galilean(seed, k, d)),
        Spacetime::Lorentz(sig) => match group {
            SymmetryGroup::Cover => GroupArg::Cover(sample_cover(seed, k, CoverComponent::UpPlus)),
            SymmetryGroup::Proper => GroupArg::Lorentz(sample_proper_ortho(seed, k, sig).matrix),
        },
    }
}

/// L↑+-invariance: exact on every Lie generator, then on `samples` sampled elements.
pub fn symmetry_premise(theory: &FormalTheory, samples: usize, seed: u64, exec: Execution) -> Result<Premise, TheoryError> {
    let kin = theory.kinematics();
    let basis = match kin.spacetime() {
        Spacetime::Galilean(d) => galilean_lie_basis(d),
        Spacetime::Lorentz(sig) => lie_basis(sig),
    };
    let mut infinitesimal = Vec::new();
    for (k, x) in basis.iter().enumerate() {
        infinitesimal.push(Transformation::infinitesimal(format!("lie[{k}]"), kin.infinitesimal_action(x)?));
    }
    let exact = check_invariance::<Gq>(theory, &infinitesimal, exec)?;
    let mut sampled = Vec::new();
    for k in 0..samples as u64 {
        let g = orthochronous_sample(kin, theory.symmetry_group(), seed, k);
        sampled.push(Transformation::map(format!("sample[{k}]"), kin.classical_action(&g, Extension::Canonical)?));
    }
    let float = check_invariance::<Complex64>(theory, &sampled, exec)?;
    let residual = float.transformations.iter().filter_map(|t| t.residual).fold(0.0, f64::max);
    let ok = exact.is_invariant() && float.is_invariant();
    let mut p = Premise::new(
        "orthochronous invariance",
        ok,
        format!("{} Lie generators exact, {samples} samples (seed {seed}), max residual {residual:.1e}", basis.len()),
    );
    p.checks = exact.transformations.into_iter().chain(float.transformations).filter(|t| !t.passed()).collect();
    Ok(p)
}

fn spacetime_premise(kin: &Kinematics, theorem: TheoremKind, seed: u64) -> Premise {
    match kin.spacetime() {
        Spacetime::Galilean(d) => Premise::new("spacetime", false, format!("Galilean spacetime of dimension {d} lacks PT-2/PT-3")),
        Spacetime::Lorentz(sig) => {
            if theorem == TheoremKind::Holomorphic && sig.dim() != 4 {
                return Premise::new("spacetime", false, format!("holomorphic actions are built on the 4D cover, not {sig}"));
            }
            let report = verify_axioms(sig, 4, seed);
            let failing: Vec<&str> = report.axioms.iter().filter(|a| a.verdict != cpt_lorentz::Verdict::Holds).map(|a| a.axiom.as_str()).collect();
            if failing.is_empty() {
                Premise::new("spacetime", true, format!("signature {sig}: PT-1..PT-5 hold"))
            } else {
                Premise::new("spacetime", false, format!("signature {sig}: {} fail", failing.join(", ")))
            }
        }
    }
}

fn mode_premise(theory: &FormalTheory, theorem: TheoremKind) -> Premise {
    let mode = theory.mode();
    let spinorial = theory.symmetry_group() == SymmetryGroup::Cover;
    let (ok, detail) = match theorem {
        TheoremKind::Pt if spinorial => (false, "classical PT needs tensor fields".to_string()),
        TheoremKind::Pt | TheoremKind::Holomorphic => (true, format!("{mode} mode")),
        TheoremKind::StrongReflection | TheoremKind::Cpt => match mode {
            Mode::Supercommutative => (true, "supercommutative mode".into()),
            Mode::Commutative if !spinorial => (true, "commutative mode with tensor fields".into()),
            Mode::Commutative => (false, "spinor fields must supercommute".into()),
            Mode::Free => (false, "free algebra: strong reflection is not defined on the theory's quotient".into()),
        },
    };
    Premise::new("mode", ok, detail)
}

fn conclusion_steps<S: Scalar>(
    kin: &Kinematics,
    theorem: TheoremKind,
    g: &GroupArg<S>,
    dollar: Option<&WMap<S>>,
) -> Result<(Vec<Step<S>>, WMap<S>), TheoryError> {
    let map: SymbolMap<S> = match theorem {
        TheoremKind::Holomorphic => kin.holomorphic_action(g)?,
        _ => kin.classical_action(g, Extension::Canonical)?,
    };
    let w = map.w.clone();
    let mut steps = vec![Step::Map(map)];
    match theorem {
        TheoremKind::StrongReflection => steps.push(Step::StrongReflection),
        TheoremKind::Cpt => {
            let d = dollar.expect("CPT needs an involution");
            steps.push(Step::Conjugate(d.clone()));
            return Ok((steps, w.then(d)));
        }
        _ => {}
    }
    Ok((steps, w))
}

fn label(theorem: TheoremKind, dollar: &InvolutionSpec, g: &str) -> String {
    match theorem {
        TheoremKind::Pt => format!("ρ̄′({g})"),
        TheoremKind::StrongReflection => format!("S∘ρ̄′({g})"),
        TheoremKind::Cpt => format!("C_{dollar}∘ρ̄′({g})"),
        TheoremKind::Holomorphic => format!("ρ̄_hol({g})"),
    }
}

pub fn theorem_harness(theory: &FormalTheory, theorem: TheoremKind, config: &HarnessConfig) -> Result<HarnessReport, TheoryError> {
    let kin = theory.kinematics();
    let mut premises = vec![spacetime_premise(kin, theorem, config.seed), mode_premise(theory, theorem)];
    let mut notes = vec![format!("seed {}", config.seed)];
    if !theory.identifications().is_empty() {
        notes.push(format!("{} total-derivative identifications in use", theory.identifications().len()));
    }
    if theorem == TheoremKind::Holomorphic {
        let complex = kin.is_holomorphic_capable();
        premises.push(Premise::new("complex structure", complex, if complex { "all fields complex" } else { "some field is real" }));
        let hol = theory.is_holomorphic();
        premises.push(Premise::new(
            "holomorphic",
            hol,
            if hol { "only complex-linear symbols occur" } else { "conjugate symbols occur" },
        ));
    }
    let dollar = if theorem == TheoremKind::Cpt {
        match kin.involution::<Gq>(&config.dollar) {
            Ok(w) => Some(w),
            Err(e) => {
                premises.push(Premise::new("involution", false, e.to_string()));
                None
            }
        }
    } else {
        None
    };
    let spacetime_ok = premises[0].verdict.passed();
    let computable = spacetime_ok && (theorem != TheoremKind::Holomorphic || premises[2].verdict.passed());
    let computable = computable && (theorem != TheoremKind::Cpt || dollar.is_some());
    if kin.spacetime().is_galilean() || spacetime_ok {
        premises.push(symmetry_premise(theory, config.samples, config.seed, config.exec)?);
    }
    let applicable = premises.iter().all(|p| p.verdict.passed());

    let mut transformations = Vec::new();
    let mut hermitian = None;
    let mut classification = None;
    if computable {
        let g0 = representative(kin, theorem);
        let (steps, w0) = conclusion_steps(kin, theorem, &g0, dollar.as_ref())?;
        let exact = vec![Transformation::finite(label(theorem, &config.dollar, "g₀"), steps)];
        transformations.extend(check_invariance::<Gq>(theory, &exact, config.exec)?.transformations);

        let dollar_f = dollar.as_ref().map(|w| WMap { matrix: w.matrix.map(Complex64::from_gq), antilinear: w.antilinear });
        let g0f = g0.map(|x: &Gq| x.to_c64());
        let mut products = Vec::new();
        for k in 0..config.products as u64 {
            let group = if matches!(g0, GroupArg::Cover(_)) { SymmetryGroup::Cover } else { theory.symmetry_group() };
            let h = orthochronous_sample(kin, group, config.seed ^ 0xABCD, k);
            let g = g0f.mul(&h);
            let (steps, _) = conclusion_steps(kin, theorem, &g, dollar_f.as_ref())?;
            products.push(Transformation::finite(label(theorem, &config.dollar, &format!("g₀·h{k}")), steps));
        }
        transformations.extend(check_invariance::<Complex64>(theory, &products, config.exec)?.transformations);

        if let Some(d) = &dollar {
            hermitian = Some(is_hermitian(theory, d)?);
        }
        if let Ok(c) = classify_charge(kin.space(), &w0) {
            classification = Some(format!("{c} ({})", c.transformation_name()));
        }
        notes.push(format!("g₀ = {}", describe(&g0)));
    }

    let conclusion = transformations.iter().all(TransformationResult::passed);
    let verdict = if !applicable || !computable {
        Verdict::NotApplicable
    } else {
        match hermitian {
            Some(h) => Verdict::from_bool(h == conclusion),
            None => Verdict::from_bool(conclusion),
        }
    };
    Ok(HarnessReport {
        theory: theory.name().into(),
        theorem,
        dollar: (theorem == TheoremKind::Cpt).then(|| config.dollar.to_string()),
        premises,
        transformations,
        hermitian,
        classification,
        verdict,
        notes,
    })
}

fn describe(g: &GroupArg<Gq>) -> String {
    match g {
        GroupArg::Lorentz(m) => {
            let d: Vec<String> = (0..m.rows()).map(|i| m[(i, i)].to_string()).collect();
            if m.entries().iter().enumerate().all(|(k, x)| k % (m.cols() + 1) == 0 || x.is_zero()) {
                format!("diag({})", d.join(","))
            } else {
                format!("{m:?}")
            }
        }
        GroupArg::Cover(c) => {
            let s = |m: &Matrix<Gq>| {
                if m[(0, 1)].is_zero() && m[(1, 0)].is_zero() && m[(0, 0)] == m[(1, 1)] {
                    format!("{}𝟙", m[(0, 0)])
                } else {
                    format!("{m:?}")
                }
            };
            format!("({}, {})", s(&c.a), s(&c.b))
        }
    }
}
