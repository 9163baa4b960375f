//! The `tropgroup` command-line front end.
//!
//! ```text
//! tropgroup <mul|rank|verify|closure|monomialize|analyze|realize> --in FILE
//!           [--assume-group] [--cap N] [--verbose]
//! ```
//!
//! The report is a single JSON object on standard output. Exit status is
//! 0 on success, 2 for unreadable or invalid input and 3 when the input is
//! well formed but fails a mathematical check (group axioms, factorization,
//! reduction).

mod commands;
pub mod document;
mod pretty;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

pub use commands::{execute, execute_text, Outcome, RunOptions};
pub use document::{Dimension, DocumentError, DocumentKind, InputDocument, Options};
pub use report::{ReportDocument, EXIT_INPUT, EXIT_MATH, EXIT_OK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Mul,
    Rank,
    Verify,
    Closure,
    Monomialize,
    Analyze,
    Realize,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Mul => "mul",
            Command::Rank => "rank",
            Command::Verify => "verify",
            Command::Closure => "closure",
            Command::Monomialize => "monomialize",
            Command::Analyze => "analyze",
            Command::Realize => "realize",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "tropgroup",
    version,
    about = "Monomial representations of groups of tropical matrices"
)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Input JSON document.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Treat the matrices as a sample of a group instead of verifying the axioms.
    #[arg(long)]
    assume_group: bool,
    /// Element cap for `closure`.
    #[arg(long, value_name = "N")]
    cap: Option<usize>,
    /// Print a human-readable trace to standard error.
    #[arg(short, long)]
    verbose: bool,
}

/// Parses arguments, runs the command, prints the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let opts = RunOptions {
        assume_group: args.assume_group,
        cap: args.cap,
    };
    let outcome = match std::fs::read_to_string(&args.input) {
        Ok(text) => execute_text(args.command, &text, &opts),
        Err(e) => {
            let msg = format!("cannot read {}: {e}", args.input.display());
            execute_text(args.command, "", &opts).with_message(msg)
        }
    };
    if args.verbose {
        for line in &outcome.log {
            eprintln!("{line}");
        }
    }
    print!("{}", outcome.report.to_json());
    outcome.exit_code()
}

impl Outcome {
    fn with_message(mut self, message: String) -> Self {
        if let Some(e) = self.report.error.as_mut() {
            e.kind = "Io";
            e.message = message.clone();
        }
        self.log = vec![format!("error: {message}")];
        self
    }
}
