//! Argument parsing for `cptlab`.

use std::fmt::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use cpt_actions::{Extension, InvolutionSpec};
use cpt_algebra::{Execution, Mode};
use cpt_lorentz::Signature;
use cpt_theories::TheoremKind;

use crate::command::{self, ActionChoice, Element, FileCommand, Group, Options, Outcome, Precision, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use crate::corpus::{self, CorpusEntry};

#[derive(Debug, Parser)]
#[command(name = "cptlab", version, about = "Symbolic checks of PT and CPT invariance for formal field theories")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Invariance of a theory under a transformation group.
    Check(FileArgs),
    /// Image of every formula under one group element.
    Transform(FileArgs),
    /// Charge-preserving (PT) or charge-conjugating (CPT) classification of an element.
    Classify(FileArgs),
    /// Premises and conclusion of a PT, strong-reflection, CPT or holomorphic theorem.
    Harness(FileArgs),
    /// Sampled evidence for the axioms PT-1 to PT-5.
    Axioms(AxiomArgs),
    /// Print the file in canonical form.
    Fmt(FileArgs),
    /// Run the built-in corpus against its expected outcomes.
    Examples(ExampleArgs),
    /// L↑+-invariant theories with no time-reversing symmetry.
    Counterexample(CounterexampleArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Classical,
    Quantum,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Free,
    Commutative,
    Supercommutative,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExtensionArg {
    Canonical,
    Full,
}

#[derive(Debug, Args)]
struct Common {
    /// Theory to use when the file defines several.
    #[arg(long)]
    theory: Option<String>,
    /// Classical or quantum action of time-reversing elements.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// classical, quantum or holomorphic; overrides --mode.
    #[arg(long, value_parser = str::parse::<ActionChoice>)]
    action: Option<ActionChoice>,
    /// Lpo, Lp or cover.
    #[arg(long, default_value = "Lp", value_parser = str::parse::<Group>)]
    group: Group,
    /// id, star, hash or starhash.
    #[arg(long, default_value = "star", value_parser = str::parse::<InvolutionSpec>)]
    dollar: InvolutionSpec,
    /// pt, sr, cpt or hol.
    #[arg(long, default_value = "cpt", value_parser = str::parse::<TheoremKind>)]
    theorem: TheoremKind,
    /// identity, total-reflection, time-reversal, parity, lift, hol-reflection or tau.
    #[arg(long, default_value = "total-reflection", value_parser = str::parse::<Element>)]
    element: Element,
    /// Representation used for time-reversing Lorentz matrices.
    #[arg(long, value_enum, default_value = "full")]
    extension: ExtensionArg,
    /// Compose the action with the internal involution #.
    #[arg(long)]
    hash: bool,
    /// Re-read the formulae in another algebra.
    #[arg(long, value_enum)]
    algebra: Option<AlgebraArg>,
    #[arg(long, default_value_t = 25)]
    samples: usize,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Exact checks only.
    #[arg(long, conflicts_with = "float")]
    exact: bool,
    /// Floating-point checks only.
    #[arg(long)]
    float: bool,
    #[arg(long)]
    json: bool,
    /// Disable data parallelism.
    #[arg(long)]
    sequential: bool,
}

#[derive(Debug, Args)]
struct FileArgs {
    /// A .cpt file, or corpus:NAME for a built-in entry.
    file: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct AxiomArgs {
    /// A .cpt file whose spacetime is used.
    file: Option<String>,
    /// p,q instead of a file.
    #[arg(long, conflicts_with = "file")]
    signature: Option<String>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct ExampleArgs {
    /// Only list the entries.
    #[arg(long)]
    list: bool,
}

#[derive(Debug, Args)]
struct CounterexampleArgs {
    /// 2d or galilean.
    scenario: String,
    #[command(flatten)]
    common: Common,
}

impl Common {
    fn options(&self) -> Options {
        let action = self.action.unwrap_or(match self.mode {
            Some(ModeArg::Quantum) => ActionChoice::Quantum,
            _ => ActionChoice::Classical,
        });
        Options {
            theory: self.theory.clone(),
            action,
            group: self.group,
            dollar: self.dollar.clone(),
            theorem: self.theorem,
            element: self.element,
            extension: match self.extension {
                ExtensionArg::Canonical => Extension::Canonical,
                ExtensionArg::Full => Extension::Full,
            },
            hash: self.hash,
            algebra: self.algebra.map(|a| match a {
                AlgebraArg::Free => Mode::Free,
                AlgebraArg::Commutative => Mode::Commutative,
                AlgebraArg::Supercommutative => Mode::Supercommutative,
            }),
            samples: self.samples,
            seed: self.seed,
            precision: if self.exact {
                Precision::Exact
            } else if self.float {
                Precision::Float
            } else {
                Precision::Both
            },
            json: self.json,
            exec: if self.sequential { Execution::Sequential } else { Execution::default() },
        }
    }
}

/// Source text of a file argument.
fn read_source(file: &str) -> Result<String, Outcome> {
    if let Some(name) = file.strip_prefix("corpus:") {
        return corpus::find(name)
            .map(|e| e.source.to_string())
            .ok_or_else(|| Outcome { code: EXIT_USAGE, output: format!("error: no corpus entry named {name:?}\n") });
    }
    std::fs::read_to_string(file).map_err(|e| Outcome { code: EXIT_USAGE, output: format!("error: cannot read {file}: {e}\n") })
}

fn on_file(cmd: FileCommand, args: &FileArgs) -> Outcome {
    match read_source(&args.file) {
        Ok(src) => command::run_source(cmd, &src, &args.file, &args.common.options()),
        Err(o) => o,
    }
}

fn parse_signature(s: &str) -> Option<Signature> {
    let (p, q) = s.split_once(',')?;
    let sig = Signature { p: p.trim().parse().ok()?, q: q.trim().parse().ok()? };
    (sig.p >= 1 && (2..=8).contains(&sig.dim())).then_some(sig)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_USAGE,
            };
            return Outcome { code, output: e.render().to_string() };
        }
    };
    match &cli.command {
        Cmd::Check(a) => on_file(FileCommand::Check, a),
        Cmd::Transform(a) => on_file(FileCommand::Transform, a),
        Cmd::Classify(a) => on_file(FileCommand::Classify, a),
        Cmd::Harness(a) => on_file(FileCommand::Harness, a),
        Cmd::Fmt(a) => on_file(FileCommand::Format, a),
        Cmd::Axioms(a) => {
            let opts = a.common.options();
            match (&a.file, &a.signature) {
                (Some(f), _) => match read_source(f) {
                    Ok(src) => command::run_source(FileCommand::Axioms, &src, f, &opts),
                    Err(o) => o,
                },
                (None, Some(s)) => match parse_signature(s) {
                    Some(sig) => command::axioms(sig, &opts),
                    None => Outcome { code: EXIT_USAGE, output: format!("error: bad signature {s:?}; expected p,q\n") },
                },
                (None, None) => command::axioms(Signature::MINKOWSKI, &opts),
            }
        }
        Cmd::Examples(a) => examples(a.list),
        Cmd::Counterexample(a) => command::counterexample(&a.scenario, &a.common.options()),
    }
}

/// The argument vector of an expectation, with the entry's file inserted.
pub fn expectation_args(entry: &CorpusEntry, args: &[&str]) -> Vec<String> {
    let file = format!("corpus:{}", entry.name);
    let mut v = vec!["cptlab".to_string(), args[0].to_string(), file];
    v.extend(args[1..].iter().map(|s| s.to_string()));
    v
}

fn examples(list: bool) -> Outcome {
    let mut out = String::new();
    let mut ok = true;
    for entry in corpus::builtin_examples() {
        if list {
            writeln!(out, "{:<18} {}", entry.name, entry.description).unwrap();
            continue;
        }
        for exp in &entry.expectations {
            let got = run(expectation_args(&entry, exp.args));
            let matched = got.code == exp.code && exp.contains.is_none_or(|s| got.output.contains(s));
            ok &= matched;
            writeln!(
                out,
                "{:<18} {:<60} expected {} got {}  {}",
                entry.name,
                exp.args.join(" "),
                exp.code,
                got.code,
                if matched { "ok" } else { "MISMATCH" }
            )
            .unwrap();
        }
    }
    Outcome { code: if ok { EXIT_PASS } else { EXIT_FAIL }, output: out }
}
