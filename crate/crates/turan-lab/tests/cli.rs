//! Black-box checks of the command-line binary: JSON round trips,
//! exit codes, and report output.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_turan-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn catalog_listing_and_entry() {
    let listing = stdout_json(&run(&["catalog"]));
    let names: Vec<&str> =
        listing.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["F5", "H1", "H2", "H2-", "H3", "H4", "H7"]);

    let f5 = stdout_json(&run(&["catalog", "--name", "F5"]));
    assert_eq!(f5["n"], 5);
    assert_eq!(f5["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn construct_property_alpha_omega_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.json");
    let out = run(&[
        "construct", "--family", "k", "--n", "9", "--r", "3", "--a", "1", "--k", "2",
        "--sizes", "3,3,3", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let text = std::fs::read_to_string(&path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["edges"].as_array().unwrap().len(), 57);

    let verdict = stdout_json(&run(&["property", "--in", path.to_str().unwrap(), "--q", "6", "--p", "4"]));
    assert_eq!(verdict["verdict"], "holds");

    let alpha = stdout_json(&run(&["alpha", "--in", path.to_str().unwrap()]));
    assert_eq!(alpha["alpha"], 3);
    let omega = stdout_json(&run(&["omega", "--in", path.to_str().unwrap()]));
    assert_eq!(omega["omega"], 6);
}

#[test]
fn blowup_doubles_the_pattern() {
    let dir = tempfile::tempdir().unwrap();
    let f5 = dir.path().join("f5.json");
    assert!(run(&["catalog", "--name", "F5", "--out", f5.to_str().unwrap()]).status.success());
    let blown = stdout_json(&run(&[
        "blowup", "--in", f5.to_str().unwrap(), "--mu", "2,2,2,2,2",
    ]));
    assert_eq!(blown["n"], 10);
    assert_eq!(blown["edges"].as_array().unwrap().len(), 24);
}

#[test]
fn density_and_exact_subcommands() {
    let rep = stdout_json(&run(&[
        "density", "--family", "k", "--n", "12", "--r", "3", "--a", "1", "--k", "2", "--sweep",
    ]));
    assert_eq!(rep["sizes"].as_array().unwrap().len(), 3);

    let t = stdout_json(&run(&["exact", "t", "--n", "5", "--r", "3", "--q", "4", "--p", "4"]));
    assert_eq!(t["value"], 10);
    assert_eq!(t["proved_optimal"], true);

    let dir = tempfile::tempdir().unwrap();
    let cnf = dir.path().join("inst.cnf");
    let out = run(&[
        "exact", "cnf", "--n", "5", "--r", "3", "--q", "4", "--p", "4", "--m", "10",
        "--out", cnf.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&cnf).unwrap();
    assert!(text.lines().any(|l| l.starts_with("p cnf ")));
}

#[test]
fn reduce_trace_json() {
    let dir = tempfile::tempdir().unwrap();
    // two disjoint complete 3-graphs on 6 vertices each
    let h = {
        let k6 = turan_lab::constructions::complete(6, 3).unwrap();
        turan_lab::constructions::disjoint_union(&k6, &k6).unwrap()
    };
    let path = dir.path().join("h.json");
    turan_lab::io::write_hypergraph(&h, &path).unwrap();
    let trace = stdout_json(&run(&[
        "reduce", "--in", path.to_str().unwrap(), "--q", "9", "--p", "5",
        "--gamma", "3/2", "--ell", "4", "--verify",
    ]));
    assert_eq!(trace["steps"].as_array().unwrap().len(), 2);
    assert_eq!(trace["verified"], true);
}

#[test]
fn verify_reports_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("report.csv");
    let out = run(&[
        "verify", "--claim", "rho-formula", "--format", "csv",
        "--out", csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("claim_id,status,expected,got,tolerance\n"));
    assert!(text.contains("rho-formula,pass"));

    // unknown claim id is a usage error
    let out = run(&["verify", "--claim", "no-such-claim"]);
    assert_eq!(out.status.code(), Some(2));

    // missing subcommand is a usage error too (clap default)
    let out = bin().output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_input_file_is_a_usage_error() {
    let out = run(&["property", "--in", "/nonexistent/file.json", "--q", "4", "--p", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
    let _ = Path::new("/nonexistent");
}
