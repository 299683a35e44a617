//! End-to-end runs of the compiled binary: output shapes, exit codes,
//! and byte determinism.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::{env, fs};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_smallpoly"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary should run")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout should be UTF-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr should be UTF-8")
}

fn temp_path(name: &str) -> PathBuf {
    env::temp_dir().join(format!("smallpoly-{}-{name}", std::process::id()))
}

#[test]
fn msearch_prints_the_frozen_minimum() {
    let out = run(&["msearch", "--n", "16", "--engine", "exhaustive"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("M = 0.21116424290278868"), "got:\n{text}");
    assert!(text.contains("b = [1, -1, -1, 1]"), "got:\n{text}");
    assert!(text.contains("optimal = true"), "got:\n{text}");
}

#[test]
fn msearch_matches_the_product_form_for_eight() {
    use std::f64::consts::PI;
    let out = run(&["msearch", "--n", "8", "--engine", "exhaustive"]);
    assert!(out.status.success());
    let expected = geom_core::fmt_sig17(2.0 * (PI / 4.0).sin() * (PI / 8.0).sin());
    let text = stdout_of(&out);
    assert!(text.contains(&format!("M = {expected}")), "got:\n{text}");
}

#[test]
fn table_csv_file_round_trips() {
    let path = temp_path("table.csv");
    let out = run(&["table", "--n", "16,32", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = fs::read_to_string(&path).expect("table file should exist");
    fs::remove_file(&path).ok();
    assert!(text.starts_with(report::CSV_HEADER));
    assert_eq!(text.matches("\r\n").count(), 3);
    let rows = report::parse_csv(&text).expect("emitted CSV should parse");
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0].n, 16);
    assert!((rows[0].l_dn - 3.136547508015487).abs() <= 1e-12);
    assert!((rows[1].w_dn - 0.998794497340913).abs() <= 1e-12);
}

#[test]
fn table_json_carries_rows_and_diagnostics() {
    let out = run(&["table", "--n", "16", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&stdout_of(&out)).expect("stdout should be JSON");
    assert_eq!(doc["rows"][0]["n"], 16);
    assert_eq!(doc["rows"].as_array().map(Vec::len), Some(1));
    let ratios = doc["diagnostics"][0]["ratios"]
        .as_array()
        .expect("diagnostics should list ratios");
    assert_eq!(ratios.len(), 6);
    assert!(doc["diagnostics"][0]["delta_bound_holds"].as_bool().unwrap());
}

#[test]
fn build_writes_a_document_and_summarizes() {
    let path = temp_path("d16.json");
    let out = run(&["build", "--n", "16", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("label = D_16"), "got:\n{text}");
    assert!(text.contains("M = 0.21116424290278868"), "got:\n{text}");
    assert!(text.contains("diameter = 1.0000000000000000"), "got:\n{text}");
    let doc = fs::read_to_string(&path).expect("polygon file should exist");
    fs::remove_file(&path).ok();
    let (poly, spec) = construct::polygon_from_json(&doc).expect("document should parse");
    assert_eq!(poly.vertices.len(), 16);
    assert!(spec.is_some(), "chain polygons carry their build schedule");
}

#[test]
fn build_prints_json_when_no_file_is_asked() {
    let out = run(&["build", "--n", "8", "--regular"]);
    assert!(out.status.success());
    let (poly, spec) =
        construct::polygon_from_json(&stdout_of(&out)).expect("stdout should parse");
    assert_eq!(poly.label, "R_8");
    assert_eq!(poly.vertices.len(), 8);
    assert!(spec.is_none(), "baselines carry no schedule");
}

#[test]
fn build_reinhardt_baseline() {
    let out = run(&["build", "--n", "6", "--reinhardt", "3"]);
    assert!(out.status.success());
    let (poly, _) = construct::polygon_from_json(&stdout_of(&out)).expect("stdout should parse");
    assert_eq!(poly.label, "R_3_6");
    assert_eq!(poly.vertices.len(), 6);
}

#[test]
fn render_emits_svg_with_expected_counts() {
    let path = temp_path("d16.svg");
    let out = run(&["render", "--n", "16", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let svg = fs::read_to_string(&path).expect("figure file should exist");
    fs::remove_file(&path).ok();
    assert!(svg.starts_with("<?xml version=\"1.0\""));
    assert_eq!(svg.matches("stroke=\"blue\"").count(), 16);
    assert_eq!(svg.matches("<circle").count(), 16);
}

#[test]
fn verify_passes_for_the_default_sizes() {
    let out = run(&["verify", "--n", "16"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.matches("PASS").count(), 10);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("all 10 checks passed"));
}

#[test]
fn verify_debug_flag_trips_the_closure_check() {
    let out = run(&["verify", "--n", "16", "--debug-delta-zero"]);
    assert_eq!(out.status.code(), Some(4));
    let text = stdout_of(&out);
    assert!(text.contains("FAIL closure"), "got:\n{text}");
    assert!(stderr_of(&out).contains("1 of 10 checks failed"));
}

#[test]
fn parameter_errors_exit_two() {
    for args in [
        &["build", "--n", "12"][..],
        &["table", "--n", "16,banana"][..],
        &["msearch", "--n", "7"][..],
        &["render", "--n", "16", "--canvas-px", "10"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
        assert!(stderr_of(&out).starts_with("error: "), "args: {args:?}");
    }
}

#[test]
fn capacity_errors_exit_three() {
    let out = run(&["msearch", "--n", "1024", "--engine", "exhaustive"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&[
        "msearch",
        "--n",
        "128",
        "--engine",
        "mitm",
        "--mitm-memory-budget-mb",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("capacity"), "budget of zero starves the table engine");
}

#[test]
fn budget_env_var_is_read_and_the_flag_wins() {
    let out = bin()
        .args(["msearch", "--n", "128", "--engine", "mitm"])
        .env("SMALLPOLY_MITM_MEMORY_BUDGET_MB", "0")
        .output()
        .expect("binary should run");
    assert_eq!(out.status.code(), Some(3));

    let out = bin()
        .args([
            "msearch",
            "--n",
            "128",
            "--engine",
            "mitm",
            "--mitm-memory-budget-mb",
            "64",
        ])
        .env("SMALLPOLY_MITM_MEMORY_BUDGET_MB", "0")
        .output()
        .expect("binary should run");
    assert!(out.status.success(), "explicit flag overrides the environment");

    let out = bin()
        .args(["msearch", "--n", "128", "--engine", "mitm"])
        .env("SMALLPOLY_MITM_MEMORY_BUDGET_MB", "plenty")
        .output()
        .expect("binary should run");
    assert_eq!(out.status.code(), Some(2), "a malformed budget is a parameter error");
}

#[test]
fn repeated_invocations_are_byte_identical() {
    let a = run(&["table", "--n", "16,32,64"]);
    let b = run(&["table", "--n", "16,32,64"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let a = run(&["build", "--n", "32"]);
    let b = run(&["build", "--n", "32"]);
    assert_eq!(a.stdout, b.stdout);
}
