//! End-to-end tests of the installed binary: exit codes, stable stdout,
//! artifact files, and format rejection, all through real process spawns.

use std::process::{Command, Output};

use spinor_roots::rootsys::RootSystem;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinor-roots"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn unknown_target_exits_2() {
    let out = run(&["roots", "X9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn roots_h3_json_is_exact_and_deterministic() {
    let first = run(&["roots", "H3", "--output", "json"]);
    assert_eq!(first.status.code(), Some(0));
    let rs: RootSystem = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(rs.dim(), 3);
    assert_eq!(rs.len(), 30);
    let second = run(&["roots", "H3", "--output", "json"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_a3_passes_with_exit_0() {
    let out = run(&["verify", "a3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS  rootsys.closure_count"));
    assert!(text.trim_end().ends_with("checks passed"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn e8_dot_draws_the_eight_node_diagram() {
    let out = run(&["e8", "--output", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph"));
    for k in 1..=8 {
        assert!(text.contains(&format!("α{}", k)), "missing node label α{}", k);
    }
    assert_eq!(text.matches(" -- ").count(), 7);
}

#[test]
fn out_flag_writes_the_artifact_to_a_file() {
    let path = std::env::temp_dir().join("spinor-roots-cli-out-test.json");
    let _ = std::fs::remove_file(&path);
    let out = run(&["roots", "a3", "--output", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let rs: RootSystem = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(rs.len(), 12);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn dot_is_rejected_where_no_diagram_exists() {
    let out = run(&["pin", "h3", "--output", "dot"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("usage error"));

    let out = run(&["verify", "h3", "--output", "json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cap_failures_exit_1_with_diagnostic() {
    let out = run(&["pin", "h3", "--cap", "50"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("error"));
}
