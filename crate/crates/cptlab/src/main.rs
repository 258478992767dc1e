use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = cptlab::cli::run(std::env::args());
    let bytes = outcome.output.as_bytes();
    let _ = if outcome.code == cptlab::command::EXIT_USAGE {
        std::io::stderr().write_all(bytes)
    } else {
        std::io::stdout().write_all(bytes)
    };
    ExitCode::from(outcome.code as u8)
}
