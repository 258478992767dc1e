//! The theory-file language, the built-in corpus and the `cptlab` command line.

pub mod ast;
pub mod cli;
pub mod command;
pub mod corpus;
pub mod diagnostic;
pub mod elaborate;
pub mod lexer;
pub mod parser;

pub use ast::SourceSpec;
pub use command::{run_program, run_source, FileCommand, Options, Outcome};
pub use corpus::{builtin_examples, CorpusEntry, Expectation};
pub use diagnostic::{Diagnostic, Severity, Span};
pub use elaborate::{elaborate, load, Program};
pub use parser::parse;
