use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tropgroup::cli::{execute_text, Command as Cmd, InputDocument, RunOptions};

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str], input: Option<&Path>) -> (String, String, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tropgroup"));
    cmd.args(args);
    if let Some(p) = input {
        cmd.arg("--in").arg(p);
    }
    let out = cmd.output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

const GOLDEN: &[(&str, &str)] = &[
    ("product", "mul"),
    ("order_two_group", "analyze"),
    ("order_two_group", "monomialize"),
    ("scalar_family", "analyze"),
    ("deficient_family", "monomialize"),
    ("s3_wreath", "realize"),
    ("s3_generators", "closure"),
    ("embedded_group", "analyze"),
];

#[test]
fn reports_match_golden_files() {
    for (name, command) in GOLDEN {
        let doc = crate_dir().join(format!("examples/documents/{name}.json"));
        let golden = crate_dir().join(format!("tests/golden/{name}.{command}.json"));
        let (stdout, _, code) = run(&[command], Some(&doc));
        assert_eq!(code, 0, "{name} {command}");
        if std::env::var_os("UPDATE_GOLDEN").is_some() {
            std::fs::write(&golden, &stdout).unwrap();
        }
        assert_eq!(stdout, std::fs::read_to_string(&golden).unwrap(), "{name} {command}");
        let (again, _, _) = run(&[command], Some(&doc));
        assert_eq!(stdout, again);
    }
}

#[test]
fn library_and_binary_agree() {
    for (name, command) in GOLDEN {
        let text =
            std::fs::read_to_string(crate_dir().join(format!("examples/documents/{name}.json")))
                .unwrap();
        let cmd = <Cmd as clap::ValueEnum>::from_str(command, false).unwrap();
        let outcome = execute_text(cmd, &text, &RunOptions::default());
        let golden =
            std::fs::read_to_string(crate_dir().join(format!("tests/golden/{name}.{command}.json")))
                .unwrap();
        assert_eq!(outcome.report.to_json(), golden);
    }
}

#[test]
fn example_documents_round_trip() {
    for entry in std::fs::read_dir(crate_dir().join("examples/documents")).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let doc = InputDocument::parse(&text).unwrap();
        let again = InputDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(doc, again);
        assert_eq!(doc.to_json(), again.to_json());
    }
}

#[test]
fn failure_exit_codes() {
    let data = crate_dir().join("tests/data");
    for (file, command, code, name) in [
        ("ragged_rows.json", "mul", 2, "ParseError"),
        ("float_entry.json", "rank", 2, "ParseError"),
        ("not_closed.json", "monomialize", 3, "GroupAxiomFailure"),
        ("not_closed.json", "verify", 3, "GroupAxiomFailure"),
    ] {
        let (stdout, _, got) = run(&[command], Some(&data.join(file)));
        assert_eq!(got, code, "{file}");
        let report: Value = serde_json::from_str(&stdout).unwrap();
        assert_eq!(report["status"], "error");
        assert_eq!(report["error"]["name"], name, "{file}");
    }
    let (_, _, missing) = run(&["rank"], Some(&data.join("no_such_file.json")));
    assert_eq!(missing, 2);
    let (_, _, bad) = run(&["frobnicate", "--in", "x.json"], None);
    assert_eq!(bad, 2);
}

#[test]
fn not_closed_witnesses_are_one_based() {
    let (stdout, _, _) = run(&["verify"], Some(&crate_dir().join("tests/data/not_closed.json")));
    let report: Value = serde_json::from_str(&stdout).unwrap();
    let w = &report["error"]["witnesses"];
    assert!(w["left"].as_u64().unwrap() >= 1);
    assert!(w["right"].as_u64().unwrap() >= 1);
}

#[test]
fn assume_flag_and_verbose_log() {
    let doc = crate_dir().join("examples/documents/order_two_group.json");
    let (stdout, stderr, code) = run(&["monomialize", "--assume-group", "--verbose"], Some(&doc));
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["result"]["representation"]["mode"], "ASSUMED");
    assert!(!stderr.is_empty());
}

#[test]
fn closure_cap_is_enforced() {
    let doc = crate_dir().join("examples/documents/s3_generators.json");
    let (stdout, _, code) = run(&["closure", "--cap", "3"], Some(&doc));
    assert_eq!(code, 3);
    let report: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["error"]["name"], "CapExceeded");
    assert_eq!(report["error"]["witnesses"]["cap"], 3);
}
