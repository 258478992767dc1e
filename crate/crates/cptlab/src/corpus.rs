//! Built-in theory files with the outcomes they are expected to produce.

use crate::command::{EXIT_FAIL, EXIT_NOT_APPLICABLE, EXIT_PASS};

/// One command-line run: `args[0]` is the command, the entry's file is inserted after it.
#[derive(Debug, Clone)]
pub struct Expectation {
    pub args: &'static [&'static str],
    pub code: i32,
    /// A line fragment the output must contain.
    pub contains: Option<&'static str>,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub source: &'static str,
    pub expectations: Vec<Expectation>,
}

const fn run(args: &'static [&'static str], code: i32) -> Expectation {
    Expectation { args, code, contains: None }
}

const fn shows(args: &'static [&'static str], code: i32, contains: &'static str) -> Expectation {
    Expectation { args, code, contains: Some(contains) }
}

pub fn builtin_examples() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry {
            name: "complex-scalar",
            description: "iΦ for a complex scalar: the four time-reversal images",
            source: include_str!("../corpus/complex-scalar.cpt"),
            expectations: vec![
                shows(&["transform", "--element", "total-reflection", "--action", "classical"], EXIT_PASS, "X: i*phi[0] -> i*phi[0]"),
                shows(&["transform", "--element", "total-reflection", "--action", "quantum"], EXIT_PASS, "X: i*phi[0] -> -i*conj(phi)[0]"),
                shows(&["transform", "--element", "total-reflection", "--action", "classical", "--hash"], EXIT_PASS, "X: i*phi[0] -> i*conj(phi)[0]"),
                shows(&["transform", "--element", "total-reflection", "--action", "quantum", "--hash"], EXIT_PASS, "X: i*phi[0] -> -i*phi[0]"),
                shows(&["classify", "--action", "classical"], EXIT_PASS, "charge-preserving (PT)"),
                shows(&["classify", "--action", "quantum"], EXIT_PASS, "charge-conjugating (CPT)"),
            ],
        },
        CorpusEntry {
            name: "maxwell",
            description: "Maxwell's equations with a vector current",
            source: include_str!("../corpus/maxwell.cpt"),
            expectations: vec![
                run(&["check", "--group", "Lpo"], EXIT_PASS),
                run(&["check", "--group", "Lp", "--mode", "classical"], EXIT_PASS),
                run(&["check", "--group", "Lp", "--exact"], EXIT_PASS),
                run(&["harness", "--theorem", "pt"], EXIT_PASS),
                run(&["harness", "--theorem", "cpt", "--dollar", "star"], EXIT_PASS),
                shows(&["classify", "--action", "quantum"], EXIT_PASS, "charge-both"),
            ],
        },
        CorpusEntry {
            name: "maxwell-pseudo",
            description: "Maxwell's equations with a pseudo-vector current",
            source: include_str!("../corpus/maxwell-pseudo.cpt"),
            expectations: vec![
                run(&["check", "--group", "Lpo"], EXIT_PASS),
                shows(&["check", "--group", "Lp", "--exact"], EXIT_FAIL, "pt"),
                run(&["check", "--group", "Lp", "--extension", "canonical", "--exact"], EXIT_PASS),
            ],
        },
        CorpusEntry {
            name: "dirac",
            description: "the Dirac equation",
            source: include_str!("../corpus/dirac.cpt"),
            expectations: vec![
                run(&["check", "--group", "Lpo"], EXIT_PASS),
                run(&["harness", "--theorem", "hol"], EXIT_PASS),
                run(&["harness", "--theorem", "sr"], EXIT_PASS),
                run(&["harness", "--theorem", "cpt", "--dollar", "star"], EXIT_PASS),
                run(&["harness", "--theorem", "pt"], EXIT_NOT_APPLICABLE),
            ],
        },
        CorpusEntry {
            name: "dirac-lagrangian",
            description: "the Hermitian Dirac Lagrangian density",
            source: include_str!("../corpus/dirac-lagrangian.cpt"),
            expectations: vec![
                run(&["check", "--group", "Lpo"], EXIT_PASS),
                shows(&["harness", "--theorem", "cpt", "--dollar", "star"], EXIT_PASS, "hermitian: yes"),
                shows(&["harness", "--theorem", "cpt", "--dollar", "starhash"], EXIT_PASS, "charge-preserving (PT)"),
                run(&["harness", "--theorem", "cpt", "--dollar", "hash"], EXIT_PASS),
            ],
        },
        CorpusEntry {
            name: "psibar-psi",
            description: "the constraint ψ̄ψ = 1",
            source: include_str!("../corpus/psibar-psi.cpt"),
            expectations: vec![
                run(&["harness", "--theorem", "hol"], EXIT_NOT_APPLICABLE),
                run(&["harness", "--theorem", "cpt", "--dollar", "star"], EXIT_PASS),
                run(&["harness", "--theorem", "cpt", "--algebra", "commutative"], EXIT_NOT_APPLICABLE),
            ],
        },
        CorpusEntry {
            name: "klein-gordon",
            description: "the complex Klein-Gordon Lagrangian density",
            source: include_str!("../corpus/klein-gordon.cpt"),
            expectations: vec![
                run(&["check", "--group", "Lp"], EXIT_PASS),
                run(&["harness", "--theorem", "cpt", "--dollar", "star"], EXIT_PASS),
                run(&["harness", "--theorem", "pt"], EXIT_PASS),
                run(&["harness", "--theorem", "hol"], EXIT_NOT_APPLICABLE),
                shows(&["classify", "--action", "quantum"], EXIT_PASS, "charge-conjugating (CPT)"),
            ],
        },
        CorpusEntry {
            name: "counterexample-2d",
            description: "the 2D equation with a scalar field; boost invariance needs the weight e^{-j/4} of `counterexample 2d`",
            source: include_str!("../corpus/counterexample-2d.cpt"),
            expectations: vec![
                run(&["check", "--group", "Lpo"], EXIT_FAIL),
                run(&["check", "--group", "Lp", "--exact"], EXIT_FAIL),
                run(&["harness", "--theorem", "pt"], EXIT_NOT_APPLICABLE),
                run(&["axioms"], EXIT_FAIL),
            ],
        },
        CorpusEntry {
            name: "galilean",
            description: "a Galilean-invariant equation without a time-reversing symmetry",
            source: include_str!("../corpus/galilean.cpt"),
            expectations: vec![
                run(&["check", "--group", "Lpo"], EXIT_PASS),
                run(&["check", "--group", "Lp"], EXIT_FAIL),
                run(&["harness", "--theorem", "pt"], EXIT_NOT_APPLICABLE),
                run(&["axioms"], EXIT_NOT_APPLICABLE),
            ],
        },
    ]
}

pub fn find(name: &str) -> Option<CorpusEntry> {
    builtin_examples().into_iter().find(|e| e.name == name)
}
