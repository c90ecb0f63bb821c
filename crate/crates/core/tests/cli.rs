//! The `bei` binary: exit codes, JSON reports and artifacts.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(file: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(file).display().to_string()
}

fn bei(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bei")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_passes_with_exit_zero() {
    let out = bei(&["verify", &data("running_example.txt"), "--m", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    assert_eq!(report["command"][1], "verify");
    assert_eq!(report["input_digest"].as_str().unwrap().len(), 64);
    let checks = report["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    assert!(report["timing"]["elapsed_ms"].is_u64());
}

#[test]
fn profile_json_shape() {
    let out = bei(&["profile", &data("running_example.txt"), "--m", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["data"], serde_json::json!({"e": 7, "t": 2, "m": 2, "strand": [28, 28, 6, 0, 0, 0, 0]}));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "n 3\n0 1\n1 x\n").unwrap();
    let out = bei(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let out = bei(&["check", &data("running_example.txt"), "--one-indexed"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_closed_graph_is_refused_for_relations() {
    let out = bei(&["relations", &data("claw.txt")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not closed"));
    let out = bei(&["check", &data("claw.txt")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("closed: no"));
}

#[test]
fn output_artifact_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = bei(&["relations", &data("triangle.txt"), "--json", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let printed = json(&out);
    assert_eq!(written["data"], printed["data"]);
    assert_eq!(printed["artifacts"][0], path.to_str().unwrap());
}

#[test]
fn bad_characteristic_is_an_error() {
    let out = bei(&["verify", &data("triangle.txt"), "--char", "12"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn small_corpus_passes() {
    let out = bei(&["corpus", "--n", "4", "--m", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert!(report["checks"].as_array().unwrap().iter().any(|c| c["status"] == "pass"));
}
