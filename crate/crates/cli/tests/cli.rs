//! End-to-end tests of the `latticeroot` binary: verb outputs, exit-code
//! conventions, format handling, and JSON round-trips.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_latticeroot"))
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn mubar_brieskorn_routes_branched_covers() {
    assert_eq!(stdout_of(&["mubar", "--brieskorn", "2,6,59"]), "-9/4\n");
    assert_eq!(stdout_of(&["mubar", "--brieskorn", "2,2,19"]), "-9/4\n");
    assert_eq!(stdout_of(&["mubar", "--brieskorn", "2,3,7"]), "1\n");
}

#[test]
fn degree_of_pretzel_graph() {
    assert_eq!(stdout_of(&["degree", "--pretzel-graph", &fixture("p237.json")]), "3\n");
    assert_eq!(stdout_of(&["degree", "--graph", &fixture("p237.json"), "--h", "4"]), "3\n");
}

#[test]
fn signature_and_torus_sig() {
    assert_eq!(stdout_of(&["signature", "--graph", &fixture("p237.json")]), "-4\n");
    assert_eq!(stdout_of(&["torus-sig", "2", "19"]), "-18\n");
    assert_eq!(stdout_of(&["torus-sig", "2", "-19"]), "18\n");
    assert_eq!(stdout_of(&["torus-sig", "1", "100"]), "0\n");
}

#[test]
fn graded_root_formats() {
    let graph = fixture("p237.json");
    let text = stdout_of(&["graded-root", "--graph", &graph]);
    assert_eq!(text, "leaves: [2, 2]\nangles: [0]\nshift: -2\n");

    let json = stdout_of(&["graded-root", "--graph", &graph, "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["leaves"], serde_json::json!([{ "gr": 2 }, { "gr": 2 }]));
    assert_eq!(doc["angles"], serde_json::json!([{ "gr": 0 }]));
    assert_eq!(doc["shift"], "-2");

    let dot = stdout_of(&["graded-root", "--graph", &graph, "--format", "dot"]);
    assert!(dot.starts_with("graph gradedroot {"));
    // Leaves are filled, the angle node is not.
    assert_eq!(dot.matches("style=filled").count(), 2);
    assert!(dot.contains("n1 [label=\"0\", shape=circle];"));
    assert!(dot.contains("n0 -- n1;"));
    assert!(dot.contains("n2 -- n1;"));
}

#[test]
fn graph_json_round_trips() {
    let graph = fixture("p237.json");
    let emitted = stdout_of(&["graph", "--graph", &graph, "--format", "json"]);
    let reparsed: serde_json::Value = serde_json::from_str(&emitted).unwrap();
    let original: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&graph).unwrap()).unwrap();
    assert_eq!(reparsed, original);

    // The emitted file is itself valid input producing identical output.
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("echo.json");
    let out_str = out.to_str().unwrap();
    let status = bin()
        .args(["graph", "--graph", &graph, "--format", "json", "--out", out_str])
        .status()
        .unwrap();
    assert!(status.success());
    assert_eq!(stdout_of(&["graded-root", "--graph", out_str]), stdout_of(&["graded-root", "--graph", &graph]));
}

#[test]
fn deterministic_output_bytes() {
    let graph = fixture("p237.json");
    let a = stdout_of(&["graded-root", "--graph", &graph, "--format", "json"]);
    let b = stdout_of(&["graded-root", "--graph", &graph, "--format", "json"]);
    assert_eq!(a, b);
}

#[test]
fn cable_case_ledger() {
    let text = stdout_of(&["cable-case", "5"]);
    assert!(text.contains("-1/8"), "{text}");
    assert!(
        text.trim_end().ends_with("underline delta_R <= -1 : NOT SLICE (odd n)"),
        "{text}"
    );
}

#[test]
fn froyshov_values() {
    let text = stdout_of(&["froyshov", "--torus", "2,-19"]);
    assert!(text.contains("delta_bar: -9/8"), "{text}");
    let json = stdout_of(&["froyshov", "--torus", "6,59", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["delta_under"], "9/8");
    assert_eq!(doc["delta_bar"], "9/8");
}

#[test]
fn tables_families() {
    assert_eq!(
        stdout_of(&["tables", "torus-signature", "--range", "1..3", "--format", "csv"]),
        "n,signature\n1,18\n2,78\n3,178\n"
    );
    // Empty range: header only.
    assert_eq!(
        stdout_of(&["tables", "torus-signature", "--range", "1..0", "--format", "csv"]),
        "n,signature\n"
    );
    let gamma = stdout_of(&["tables", "sigma-gamma-wu", "--range", "1..3", "--format", "csv"]);
    assert_eq!(gamma, "n,sigma,w_squared,mubar\n1,-19,-1,-9/4\n3,-28,-10,-9/4\n");
    let degrees = stdout_of(&["tables", "sigma-2-3-n-degrees", "--range", "1..1", "--format", "csv"]);
    assert_eq!(degrees, "k,n,degree\n1,7,3\n1,13,5\n");
}

#[test]
fn exit_codes() {
    // Usage errors: 1.
    assert_eq!(exit_code(&["bogus-verb"]), 1);
    assert_eq!(exit_code(&["signature"]), 1); // no input source
    assert_eq!(exit_code(&["graded-root", "--graph", &fixture("p237.json"), "--format", "csv"]), 1);
    assert_eq!(exit_code(&["graded-root", "--graph", &fixture("p237.json"), "--base", "5"]), 1);
    assert_eq!(
        exit_code(&["graded-root", "--graph", &fixture("p237.json"), "--truncation", "soon"]),
        1
    );
    // Domain errors: 2.
    assert_eq!(exit_code(&["signature", "--brieskorn", "3,6,9"]), 2);
    assert_eq!(exit_code(&["obstruct", "2"]), 2);
    assert_eq!(exit_code(&["torus-sig", "2", "4"]), 2);
    // Success: 0, including --help.
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["cable-case", "1"]), 0);
}

#[test]
fn iteration_cap_env_override() {
    let out = bin()
        .args(["graded-root", "--graph", &fixture("p237.json")])
        .env("LATTICEROOT_MAX_STEPS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("hard cap"), "{err}");
}
