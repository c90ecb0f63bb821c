//! Rendered command output against checked-in transcripts. Set
//! `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;

use bei_core::cli::{run, Cli};
use clap::Parser;

fn dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn golden(name: &str, args: &[&str]) {
    let data = dir("data");
    let argv: Vec<String> = std::iter::once("bei".to_string())
        .chain(args.iter().map(|a| match a.strip_prefix('@') {
            Some(file) => data.join(file).display().to_string(),
            None => a.to_string(),
        }))
        .collect();
    let cli = Cli::try_parse_from(&argv).expect("arguments parse");
    let rendered = run(&cli, argv).expect("command runs").render();
    let path = dir("golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &rendered).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(rendered, expected, "output of {args:?} differs from {name}");
}

#[test]
fn check_running_example() {
    golden("check_running_example.txt", &["check", "@running_example.txt"]);
}

#[test]
fn check_one_indexed() {
    golden("check_running_example_one_indexed.txt", &["check", "@running_example_one_indexed.txt", "--one-indexed"]);
}

#[test]
fn relations_binomial() {
    golden("relations_binomial.txt", &["relations", "@running_example.txt", "--variant", "binomial"]);
}

#[test]
fn relations_initial() {
    golden("relations_initial.txt", &["relations", "@running_example.txt", "--variant", "initial"]);
}

#[test]
fn relations_k4() {
    golden("relations_k4.txt", &["relations", "@k4.txt"]);
}

#[test]
fn betti_initial_square() {
    golden("betti_initial_m2.txt", &["betti", "@running_example.txt", "--m", "2", "--variant", "initial", "--max-i", "3"]);
}

#[test]
fn profile_square() {
    golden("profile_m2.txt", &["profile", "@running_example.txt", "--m", "2"]);
}
