//! Commands shared by the binary, the corpus runner and the tests.

use std::fmt::Write;
use std::str::FromStr;

use cpt_actions::{classify_charge, ActionKind, Extension, InvolutionSpec, Kinematics, Spacetime};
use cpt_algebra::{Execution, Gq, Matrix, Mode, Scalar, SymbolMap};
use cpt_lorentz::galilean::{galilean_lie_basis, galilean_time_reversal};
use cpt_lorentz::{lie_basis, sample_cover, verify_axioms, CoverComponent, CoverElement, Signature};
use cpt_reps::GroupArg;
use cpt_theories::{
    check_invariance, counterexample_2d, counterexample_galilean, orthochronous_sample, representative, theorem_harness,
    CounterexampleReport, FormalTheory, HarnessConfig, HarnessReport, InvarianceReport, SymmetryGroup, TheoremKind,
    Transformation, Verdict,
};
use num_complex::Complex64;
use serde::Serialize;

use crate::diagnostic::render;
use crate::elaborate::{load, Program};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_NOT_APPLICABLE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

pub fn exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_FAIL,
        Verdict::NotApplicable => EXIT_NOT_APPLICABLE,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn new(code: i32, output: String) -> Self {
        Outcome { code, output }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome { code: EXIT_USAGE, output: format!("error: {}\n", msg.into()) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Group {
    /// L↑+ (or its cover for spinor fields).
    Lpo,
    /// L+ = L↑+ ∪ L↓+.
    #[default]
    Lp,
    /// The cover, with the lifts of the total reflection.
    Cover,
}

impl FromStr for Group {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Lpo" | "lpo" => Ok(Group::Lpo),
            "Lp" | "lp" => Ok(Group::Lp),
            "cover" => Ok(Group::Cover),
            _ => Err(format!("unknown group {s:?}; use Lpo, Lp or cover")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    #[default]
    Both,
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Element {
    Identity,
    #[default]
    TotalReflection,
    TimeReversal,
    Parity,
    /// (i𝟙, i𝟙)
    Lift,
    /// (𝟙, −𝟙), acting holomorphically.
    HolReflection,
    Tau,
}

impl FromStr for Element {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "identity" => Element::Identity,
            "total-reflection" => Element::TotalReflection,
            "time-reversal" => Element::TimeReversal,
            "parity" => Element::Parity,
            "lift" => Element::Lift,
            "hol-reflection" => Element::HolReflection,
            "tau" => Element::Tau,
            _ => {
                return Err(format!(
                    "unknown element {s:?}; use identity, total-reflection, time-reversal, parity, lift, hol-reflection or tau"
                ))
            }
        })
    }
}

impl Element {
    pub fn name(self) -> &'static str {
        match self {
            Element::Identity => "identity",
            Element::TotalReflection => "total-reflection",
            Element::TimeReversal => "time-reversal",
            Element::Parity => "parity",
            Element::Lift => "lift",
            Element::HolReflection => "hol-reflection",
            Element::Tau => "tau",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionChoice {
    Classical,
    Quantum,
    Holomorphic,
}

impl FromStr for ActionChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "classical" => Ok(ActionChoice::Classical),
            "quantum" => Ok(ActionChoice::Quantum),
            "holomorphic" | "hol" => Ok(ActionChoice::Holomorphic),
            _ => Err(format!("unknown action {s:?}; use classical, quantum or holomorphic")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Options {
    pub theory: Option<String>,
    pub action: ActionChoice,
    pub group: Group,
    pub dollar: InvolutionSpec,
    pub theorem: TheoremKind,
    pub element: Element,
    pub extension: Extension,
    pub hash: bool,
    pub algebra: Option<Mode>,
    pub samples: usize,
    pub seed: u64,
    pub precision: Precision,
    pub json: bool,
    pub exec: Execution,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            theory: None,
            action: ActionChoice::Classical,
            group: Group::default(),
            dollar: InvolutionSpec::Star,
            theorem: TheoremKind::Cpt,
            element: Element::default(),
            extension: Extension::Full,
            hash: false,
            algebra: None,
            samples: 25,
            seed: 2024,
            precision: Precision::default(),
            json: false,
            exec: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileCommand {
    Check,
    Transform,
    Classify,
    Harness,
    Axioms,
    Format,
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

/// Runs a command on theory source text; `origin` labels diagnostics.
pub fn run_source(cmd: FileCommand, src: &str, origin: &str, opts: &Options) -> Outcome {
    if cmd == FileCommand::Format {
        return match crate::parser::parse(src) {
            Ok(spec) => Outcome::new(EXIT_PASS, spec.to_string()),
            Err(d) => Outcome::new(EXIT_USAGE, render(origin, &d)),
        };
    }
    let program = match load(src, opts.algebra) {
        Ok(p) => p,
        Err(d) => return Outcome::new(EXIT_USAGE, render(origin, &d)),
    };
    run_program(cmd, &program, opts)
}

pub fn run_program(cmd: FileCommand, program: &Program, opts: &Options) -> Outcome {
    if cmd == FileCommand::Axioms {
        return match program.kinematics.spacetime() {
            Spacetime::Lorentz(sig) => axioms(sig, opts),
            Spacetime::Galilean(d) => Outcome::new(
                EXIT_NOT_APPLICABLE,
                format!("Galilean spacetime of dimension {d}: not applicable (no Lorentz signature)\n"),
            ),
        };
    }
    let Some(theory) = program.theory(opts.theory.as_deref()) else {
        return Outcome::usage(match &opts.theory {
            Some(n) => format!("no theory named {n:?}"),
            None => "the file defines no formulae".into(),
        });
    };
    let result = match cmd {
        FileCommand::Check => check(theory, opts),
        FileCommand::Transform => transform(program, opts),
        FileCommand::Classify => classify(program, opts),
        FileCommand::Harness => harness(theory, opts),
        FileCommand::Axioms | FileCommand::Format => unreachable!("handled above"),
    };
    result.unwrap_or_else(|e| Outcome::new(EXIT_NOT_APPLICABLE, format!("not applicable: {e}\n")))
}

fn lie_generators(kin: &Kinematics) -> Vec<Matrix<Gq>> {
    match kin.spacetime() {
        Spacetime::Galilean(d) => galilean_lie_basis(d),
        Spacetime::Lorentz(sig) => lie_basis(sig),
    }
}

/// Exact time-reversing element used by `check --group Lp|cover`.
fn reversing_elements(kin: &Kinematics, group: Group) -> Vec<(String, GroupArg<Gq>)> {
    match (kin.spacetime(), group) {
        (_, Group::Lpo) => vec![],
        (Spacetime::Galilean(d), _) => vec![("time-reversal".into(), GroupArg::Lorentz(galilean_time_reversal(d)))],
        (Spacetime::Lorentz(_), Group::Lp) => vec![("pt".into(), representative(kin, TheoremKind::Pt))],
        (Spacetime::Lorentz(_), Group::Cover) => vec![
            ("tau".into(), GroupArg::Cover(CoverElement::tau())),
            ("lift".into(), GroupArg::Cover(CoverElement::total_reflection_lift())),
        ],
    }
}

fn action_kind(opts: &Options) -> ActionKind {
    match opts.action {
        ActionChoice::Quantum => ActionKind::Quantum,
        _ => ActionKind::Classical,
    }
}

fn check(theory: &FormalTheory, opts: &Options) -> Result<Outcome, Box<dyn std::error::Error>> {
    let kin = theory.kinematics();
    let kind = action_kind(opts);
    let ext = opts.extension;
    let group = if opts.group == Group::Cover && !matches!(kin.spacetime(), Spacetime::Lorentz(s) if s.dim() == 4) {
        Group::Lp
    } else {
        opts.group
    };
    let lie = lie_generators(kin);
    let reversing = reversing_elements(kin, group);
    let mut exact: Vec<Transformation<Gq>> = Vec::new();
    let mut float: Vec<Transformation<Complex64>> = Vec::new();
    for (k, x) in lie.iter().enumerate() {
        let name = format!("lie[{k}]");
        match opts.precision {
            Precision::Float => float.push(Transformation::infinitesimal(name, kin.infinitesimal_action(&x.map(Gq::to_c64))?)),
            _ => exact.push(Transformation::infinitesimal(name, kin.infinitesimal_action(x)?)),
        }
    }
    for (name, g) in &reversing {
        match opts.precision {
            Precision::Float => float.push(Transformation::map(name.clone(), kin.action(kind, &g.map(Gq::to_c64), ext)?)),
            _ => exact.push(Transformation::map(name.clone(), kin.action(kind, g, ext)?)),
        }
    }
    if opts.precision != Precision::Exact {
        let sym_group = if group == Group::Cover { SymmetryGroup::Cover } else { theory.symmetry_group() };
        for k in 0..opts.samples as u64 {
            let h = match (group, k % 2) {
                (Group::Cover, 1) => GroupArg::Cover(sample_cover(opts.seed, k, CoverComponent::DownPlus)),
                _ => orthochronous_sample(kin, sym_group, opts.seed, k),
            };
            float.push(Transformation::map(format!("sample[{k}]"), kin.action(kind, &h, ext)?));
            if group == Group::Lp {
                for (name, g) in &reversing {
                    let gh = g.map(Gq::to_c64).mul(&h);
                    float.push(Transformation::map(format!("{name}·sample[{k}]"), kin.action(kind, &gh, ext)?));
                }
            }
        }
    }
    let mut report = check_invariance(theory, &exact, opts.exec)?;
    report.transformations.extend(check_invariance(theory, &float, opts.exec)?.transformations);
    let code = if report.is_invariant() { EXIT_PASS } else { EXIT_FAIL };
    if opts.json {
        return Ok(Outcome::new(code, json(&report)));
    }
    let group_name = match group {
        Group::Lpo => "Lpo",
        Group::Lp => "Lp",
        Group::Cover => "cover",
    };
    let mut out = format!("check {} under {group_name} ({} action)\n", theory.name(), kind);
    write_invariance(&mut out, &report);
    writeln!(out, "verdict: {}", Verdict::from_bool(report.is_invariant())).unwrap();
    Ok(Outcome::new(code, out))
}

fn write_invariance(out: &mut String, report: &InvarianceReport) {
    for t in &report.transformations {
        write!(out, "  {:<24} {}", t.name, t.verdict).unwrap();
        if let Some(r) = t.residual {
            write!(out, "  residual {r:.1e}").unwrap();
        }
        if let Some(w) = &t.witness {
            write!(out, "  image {w}").unwrap();
        }
        out.push('\n');
    }
}

pub fn element_arg(kin: &Kinematics, el: Element) -> Result<GroupArg<Gq>, String> {
    let d = kin.spacetime().dim();
    let four = matches!(kin.spacetime(), Spacetime::Lorentz(s) if s.dim() == 4);
    let cover = |c: CoverElement<Gq>| if four { Ok(GroupArg::Cover(c)) } else { Err("cover elements need 4D Minkowski space".to_string()) };
    let diag = |signs: Vec<i64>| GroupArg::Lorentz(Matrix::diag(&signs.into_iter().map(Gq::from_i64).collect::<Vec<_>>()));
    match el {
        Element::Identity => Ok(GroupArg::Lorentz(Matrix::identity(d))),
        Element::TotalReflection => match kin.spacetime() {
            Spacetime::Galilean(_) => Ok(GroupArg::Lorentz(Matrix::identity(d).neg())),
            Spacetime::Lorentz(_) => Ok(representative(kin, TheoremKind::Pt)),
        },
        Element::TimeReversal => Ok(match kin.spacetime() {
            Spacetime::Galilean(d) => GroupArg::Lorentz(galilean_time_reversal(d)),
            Spacetime::Lorentz(sig) => diag((0..d).map(|i| if i < sig.p { -1 } else { 1 }).collect()),
        }),
        Element::Parity => Ok(match kin.spacetime() {
            Spacetime::Galilean(_) => diag((0..d).map(|i| if i == 0 { 1 } else { -1 }).collect()),
            Spacetime::Lorentz(sig) => diag((0..d).map(|i| if i < sig.p { 1 } else { -1 }).collect()),
        }),
        Element::Lift => cover(CoverElement::total_reflection_lift()),
        Element::Tau => cover(CoverElement::tau()),
        Element::HolReflection => cover(CoverElement { a: Matrix::identity(2), b: Matrix::identity(2).neg() }),
    }
}

fn element_map(kin: &Kinematics, opts: &Options) -> Result<(SymbolMap<Gq>, String), Box<dyn std::error::Error>> {
    let g = element_arg(kin, opts.element)?;
    let (mut map, label) = match opts.action {
        ActionChoice::Holomorphic => (kin.holomorphic_action(&g)?, "holomorphic"),
        ActionChoice::Classical => (kin.classical_action(&g, opts.extension)?, "classical"),
        ActionChoice::Quantum => (kin.quantum_action(&g, opts.extension)?, "quantum"),
    };
    let mut label = format!("{} ({label} action", opts.element.name());
    if opts.hash {
        map = map.then(&SymbolMap::new(kin.involution::<Gq>(&InvolutionSpec::Hash)?, None));
        label.push_str(", then #");
    }
    label.push(')');
    Ok((map, label))
}

#[derive(Serialize)]
struct Image {
    formula: String,
    source: String,
    image: String,
}

#[derive(Serialize)]
struct TransformReport {
    element: String,
    images: Vec<Image>,
}

fn transform(program: &Program, opts: &Options) -> Result<Outcome, Box<dyn std::error::Error>> {
    let (map, label) = element_map(&program.kinematics, opts)?;
    let images: Vec<Image> = program
        .formulas
        .iter()
        .map(|(name, f)| Image { formula: name.clone(), source: f.to_string(), image: map.apply_with(opts.exec, f).to_string() })
        .collect();
    if opts.json {
        return Ok(Outcome::new(EXIT_PASS, json(&TransformReport { element: label, images })));
    }
    let mut out = format!("transform by {label}\n");
    for im in &images {
        writeln!(out, "  {}: {} -> {}", im.formula, im.source, im.image).unwrap();
    }
    Ok(Outcome::new(EXIT_PASS, out))
}

#[derive(Serialize)]
struct Classification {
    element: String,
    class: String,
    transformation: String,
}

fn classify(program: &Program, opts: &Options) -> Result<Outcome, Box<dyn std::error::Error>> {
    let (map, label) = element_map(&program.kinematics, opts)?;
    let c = classify_charge(program.kinematics.space(), &map.w)?;
    let report = Classification { element: label, class: c.to_string(), transformation: c.transformation_name().into() };
    if opts.json {
        return Ok(Outcome::new(EXIT_PASS, json(&report)));
    }
    Ok(Outcome::new(EXIT_PASS, format!("{}: charge-{} ({})\n", report.element, report.class, report.transformation)))
}

fn harness(theory: &FormalTheory, opts: &Options) -> Result<Outcome, Box<dyn std::error::Error>> {
    let config = HarnessConfig {
        samples: opts.samples,
        seed: opts.seed,
        dollar: opts.dollar.clone(),
        exec: opts.exec,
        ..HarnessConfig::default()
    };
    let report = theorem_harness(theory, opts.theorem, &config)?;
    let code = exit_code(report.verdict);
    if opts.json {
        return Ok(Outcome::new(code, json(&report)));
    }
    Ok(Outcome::new(code, harness_text(&report)))
}

pub fn harness_text(r: &HarnessReport) -> String {
    let mut out = format!("harness {} on {}", r.theorem, r.theory);
    if let Some(d) = &r.dollar {
        write!(out, " with $ = {d}").unwrap();
    }
    out.push('\n');
    for p in &r.premises {
        writeln!(out, "  premise {:<26} {}  ({})", p.name, p.verdict, p.detail).unwrap();
    }
    for t in &r.transformations {
        write!(out, "  {:<34} {}", t.name, t.verdict).unwrap();
        if let Some(w) = &t.witness {
            write!(out, "  image {w}").unwrap();
        }
        out.push('\n');
    }
    if let Some(h) = r.hermitian {
        writeln!(out, "  hermitian: {}", if h { "yes" } else { "no" }).unwrap();
    }
    if let Some(c) = &r.classification {
        writeln!(out, "  classification: charge-{c}").unwrap();
    }
    for n in &r.notes {
        writeln!(out, "  note: {n}").unwrap();
    }
    writeln!(out, "verdict: {}", r.verdict).unwrap();
    out
}

fn axiom_verdict(v: cpt_lorentz::Verdict) -> &'static str {
    match v {
        cpt_lorentz::Verdict::Holds => "holds",
        cpt_lorentz::Verdict::Fails => "fails",
        cpt_lorentz::Verdict::NotApplicable => "not applicable",
    }
}

/// PT-1 … PT-5 for a signature; exit 0 only when all hold.
pub fn axioms(sig: Signature, opts: &Options) -> Outcome {
    let report = verify_axioms(sig, opts.samples.min(16), opts.seed);
    let ok = report.axioms.iter().all(|a| a.verdict == cpt_lorentz::Verdict::Holds);
    let code = if ok { EXIT_PASS } else { EXIT_FAIL };
    if opts.json {
        return Outcome::new(code, json(&report));
    }
    let mut out = format!("axioms for signature {sig} ({})\n", report.group);
    for a in &report.axioms {
        writeln!(out, "  {:<5} {:<15} {}", a.axiom, axiom_verdict(a.verdict), a.evidence).unwrap();
    }
    writeln!(out, "verdict: {}", if ok { "pass" } else { "fail" }).unwrap();
    Outcome::new(code, out)
}

pub fn counterexample(scenario: &str, opts: &Options) -> Outcome {
    let report = match scenario {
        "2d" => counterexample_2d(opts.samples, opts.seed),
        "galilean" => counterexample_galilean(3, opts.samples, opts.seed),
        other => return Outcome::usage(format!("unknown counterexample {other:?}; use 2d or galilean")),
    };
    let report = match report {
        Ok(r) => r,
        Err(e) => return Outcome::new(EXIT_NOT_APPLICABLE, format!("not applicable: {e}\n")),
    };
    // a confirmed counterexample is a failure of the time-reversal conclusion
    let code = if report.confirmed { EXIT_FAIL } else { EXIT_PASS };
    if opts.json {
        return Outcome::new(code, json(&report));
    }
    Outcome::new(code, counterexample_text(&report))
}

pub fn counterexample_text(r: &CounterexampleReport) -> String {
    let mut out = format!("counterexample {}\n", r.name);
    for t in &r.theory {
        writeln!(out, "  generator {t}").unwrap();
    }
    for p in &r.premises {
        writeln!(out, "  premise {:<26} {}  ({})", p.name, p.verdict, p.detail).unwrap();
    }
    for c in &r.candidates {
        writeln!(out, "  candidate {:<28} alpha={:<5} {}  image {}", c.element, c.alpha, c.verdict, c.image).unwrap();
    }
    writeln!(out, "  obstruction: {}", r.obstruction).unwrap();
    writeln!(out, "verdict: {}", if r.confirmed { "fail (no time-reversing symmetry)" } else { "pass" }).unwrap();
    out
}
