//! Invariance of a theory under finite and infinitesimal transformations of the algebra.

use std::fmt;

use cpt_algebra::par::{self, Execution};
use cpt_algebra::{conjugation_c, dagger, AlgebraElement, Gq, Scalar, SymbolDerivation, SymbolMap, WMap};
use serde::Serialize;

use crate::error::TheoryError;
use crate::membership::{span_membership, SUPPORT_CAP};
use crate::theory::{FormalTheory, Span};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not applicable",
        })
    }
}

/// One stage of a composite transformation, applied left to right.
#[derive(Debug, Clone)]
pub enum Step<S: Scalar> {
    Map(SymbolMap<S>),
    Conjugate(WMap<S>),
    Dagger(WMap<S>),
    StrongReflection,
}

#[derive(Debug, Clone)]
pub enum Action<S: Scalar> {
    Finite(Vec<Step<S>>),
    Infinitesimal(SymbolDerivation<S>),
}

#[derive(Debug, Clone)]
pub struct Transformation<S: Scalar> {
    pub name: String,
    pub action: Action<S>,
}

impl<S: Scalar> Transformation<S> {
    pub fn finite(name: impl Into<String>, steps: Vec<Step<S>>) -> Self {
        Transformation { name: name.into(), action: Action::Finite(steps) }
    }

    pub fn map(name: impl Into<String>, map: SymbolMap<S>) -> Self {
        Self::finite(name, vec![Step::Map(map)])
    }

    pub fn infinitesimal(name: impl Into<String>, d: SymbolDerivation<S>) -> Self {
        Transformation { name: name.into(), action: Action::Infinitesimal(d) }
    }

    pub fn apply(&self, x: &AlgebraElement<S>) -> Result<AlgebraElement<S>, TheoryError> {
        match &self.action {
            Action::Infinitesimal(d) => Ok(d.apply(x)),
            Action::Finite(steps) => {
                let mut y = x.clone();
                for step in steps {
                    y = match step {
                        Step::Map(m) => m.apply(&y),
                        Step::Conjugate(w) => conjugation_c(w, &y)?,
                        Step::Dagger(w) => dagger(w, &y)?,
                        Step::StrongReflection => y.strong_reflection(),
                    };
                }
                Ok(y)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TransformationResult {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    /// Per generator, the coefficients expressing its image (exact mode).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<Vec<String>>>,
    /// Image of the first generator that left the theory.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl TransformationResult {
    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvarianceReport {
    pub theory: String,
    pub transformations: Vec<TransformationResult>,
}

impl InvarianceReport {
    pub fn is_invariant(&self) -> bool {
        self.transformations.iter().all(TransformationResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TransformationResult> {
        self.transformations.iter().filter(|t| !t.passed())
    }
}

struct Check<S: Scalar> {
    member: bool,
    certificate: Option<Vec<S>>,
    residual: Option<f64>,
    image: AlgebraElement<S>,
}

/// Checks each transformation against the span of the theory.
///
/// Finite maps must send affine generators into the span and linear ones into its
/// directions; derivations must send everything into the directions.
pub fn check_span<S: Scalar>(
    name: &str,
    span: &Span<S>,
    transformations: &[Transformation<S>],
    exec: Execution,
) -> Result<InvarianceReport, TheoryError> {
    let directions = span.directions();
    let n_gen = span.len();
    let jobs: Vec<(usize, usize)> = (0..transformations.len()).flat_map(|t| (0..n_gen).map(move |g| (t, g))).collect();
    let checks = par::map_slice(exec, &jobs, |&(t, g)| -> Result<Check<S>, TheoryError> {
        let tr = &transformations[t];
        let gen = span.iter().nth(g).expect("index in range");
        let image = tr.apply(gen)?;
        let target = match tr.action {
            Action::Finite(_) if g < span.affine.len() => span,
            _ => &directions,
        };
        let m = span_membership(&image, target, SUPPORT_CAP)?;
        Ok(Check { member: m.member, certificate: m.certificate, residual: m.residual, image })
    });
    let mut checks = checks.into_iter();
    let mut out = Vec::new();
    for tr in transformations {
        let mine: Vec<Check<S>> = checks.by_ref().take(n_gen).collect::<Result<_, _>>()?;
        let ok = mine.iter().all(|c| c.member);
        let residual = mine.iter().filter_map(|c| c.residual).reduce(f64::max);
        let certificate = (S::EXACT && ok).then(|| {
            mine.iter()
                .map(|c| c.certificate.iter().flatten().map(|x| x.to_string()).collect())
                .collect()
        });
        let witness = mine.iter().find(|c| !c.member).map(|c| c.image.to_string());
        out.push(TransformationResult { name: tr.name.clone(), verdict: Verdict::from_bool(ok), residual, certificate, witness });
    }
    Ok(InvarianceReport { theory: name.into(), transformations: out })
}

pub fn check_invariance<S: Scalar>(
    theory: &FormalTheory,
    transformations: &[Transformation<S>],
    exec: Execution,
) -> Result<InvarianceReport, TheoryError> {
    check_span(theory.name(), &theory.span::<S>(), transformations, exec)
}

/// Invariance under †_$ = S∘C_$.
pub fn is_hermitian(theory: &FormalTheory, dollar: &WMap<Gq>) -> Result<bool, TheoryError> {
    let t = Transformation::finite("dagger", vec![Step::Dagger(dollar.clone())]);
    Ok(check_invariance(theory, &[t], Execution::default())?.is_invariant())
}
