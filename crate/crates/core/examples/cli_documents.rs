//! Runs CLI commands on the bundled JSON documents without spawning the binary.

use tropgroup::cli::{execute_text, Command, RunOptions};

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/documents");
    for (file, command) in [
        ("product.json", Command::Mul),
        ("scalar_family.json", Command::Analyze),
        ("s3_generators.json", Command::Closure),
    ] {
        let text = std::fs::read_to_string(format!("{dir}/{file}")).unwrap();
        let outcome = execute_text(command, &text, &RunOptions::default());
        println!("== {} {file} (exit {})", command.name(), outcome.report.exit_code());
        print!("{}", outcome.report.to_json());
    }
}
