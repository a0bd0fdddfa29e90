use std::fs;
use std::path::Path;
use std::process::Command;

use linarr::cli::{run, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_OK};
use linarr::json::arrangement_from_report;
use linarr_core::corpus;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("linarr").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write_lines(dir: &Path, name: &str, rows: &[[i64; 3]]) -> String {
    let text: String = rows.iter().map(|[a, b, c]| format!("{a} {b} {c}\n")).collect();
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn analyze_c1_summary() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_lines(dir.path(), "c1.txt", &corpus::C1);
    let (code, out, _) = call(&["analyze", &file]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("d = 7  mdr = 3  tau = 25"), "{out}");
    assert!(out.contains("m = 4  n = 3"));
    assert!(out.contains("class: OTHER  nu = 2"));
    assert!(out.contains(", 0 failed"));
}

#[test]
fn analyze_json_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_lines(dir.path(), "c2.txt", &corpus::C2);
    let json_path = dir.path().join("c2.json");
    let (code, out, _) = call(&["analyze", &file, "--json", json_path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("tau = 25"));
    let v: Value = serde_json::from_str(&fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(v["tau"], 25);
    assert_eq!(v["mdr"], 3);
    assert_eq!(v["lattice"]["type"], "OTHER");
    assert_eq!(v["classification"]["kind"], "OTHER");
    assert_eq!(v["ar_dims"]["5"], 10);
    assert_eq!(v["all_passed"], true);
    assert_eq!(arrangement_from_report(&v).unwrap(), corpus::c2());

    let (code, stdout_json, _) = call(&["analyze", &file, "--json", "-"]);
    assert_eq!(code, EXIT_OK);
    let w: Value = serde_json::from_str(&stdout_json).unwrap();
    assert_eq!(v, w);
}

#[test]
fn free_arrangement_reports_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_lines(dir.path(), "tri.txt", &[[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
    let (code, out, _) = call(&["analyze", &file, "--json", "-"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["classification"]["kind"], "FREE");
    assert_eq!(v["classification"]["exponents"], serde_json::json!([1, 1]));
    assert_eq!(v["terao"]["r"], 1);
    assert_eq!(v["terao"]["lattice_determined"], true);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let dup = write_lines(dir.path(), "dup.txt", &[[1, 0, 0], [0, 1, 0], [2, 0, 0]]);
    let (code, _, err) = call(&["analyze", &dup]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("DUPLICATE_LINE"), "{err}");

    let (code, _, err) = call(&["analyze", dir.path().join("missing.txt").to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.starts_with("error:"));

    assert_eq!(call(&["frobnicate"]).0, EXIT_INPUT);
    assert_eq!(call(&["bounds-table", "--d", "3"]).0, EXIT_INPUT);
    assert_eq!(call(&["search", "--d", "5", "--pencils", "2"]).0, EXIT_INPUT);
    assert_eq!(call(&["search", "--d", "5", "--pencils", "3,3"]).0, EXIT_INPUT);
    assert_eq!(call(&["search", "--d", "6..4"]).0, EXIT_INPUT);
}

#[test]
fn help_exits_0() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("analyze"));
    assert_ne!(EXIT_OK, EXIT_CHECK_FAILED);
}

#[test]
fn bounds_table_rows() {
    let (code, out, _) = call(&["bounds-table", "--d", "7"]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[2], ["3", "18", "27", "-", "23", "25"]);
    assert_eq!(rows[3], ["4", "12", "28", "25", "20", "22"]);
    assert_eq!(rows[0][4], "-");
}

#[test]
fn corpus_matches_reference_values() {
    let (code, out, _) = call(&["corpus"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.trim_end().ends_with(", 0 mismatches"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn search_is_deterministic() {
    let args = ["search", "--d", "4..5", "--samples", "12", "--seed", "3"];
    let (code, first, _) = call(&args);
    assert_eq!(code, EXIT_OK);
    assert_eq!(call(&args).1, first);
    assert!(first.starts_with("# search seed=3 samples=12 d=4..5"));
    assert_eq!(first.lines().count(), 14);
    assert!(first.contains("violations=0 "));

    let (_, planted, _) = call(&["search", "--d", "6", "--samples", "3", "--pencils", "3,3"]);
    assert_eq!(planted.matches("plan=[3, 3]").count(), 3);
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_linarr"))
        .args(["bounds-table", "--d", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 5);
}
