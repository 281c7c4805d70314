//! End-to-end checks of the `nhilbert` binary: output streams, flag
//! precedence, and the 0/1/2 exit-code contract.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn cmd() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_nhilbert"));
    // Isolate from any ambient tolerance override.
    c.env_remove("NHILBERT_TOL");
    c
}

fn run(args: &[&str]) -> Output {
    cmd().args(args).output().expect("binary must spawn")
}

fn stdout_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("every output line must be JSON"))
        .collect()
}

fn spec_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn json_stream_has_header_then_passing_reports() {
    let out = run(&["riesz", "--trials", "5", "--seed", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert!(lines.len() > 1);
    assert_eq!(lines[0]["tool"], "nhilbert");
    assert_eq!(lines[0]["seed"], 3);
    assert!(lines[0]["timestamp"].is_u64());
    for report in &lines[1..] {
        assert_eq!(report["status"], "pass", "unexpected failure: {report}");
        assert_eq!(report["failures"], 0);
    }
}

#[test]
fn identical_invocations_differ_only_in_the_timestamp() {
    let args = ["sesq", "--trials", "6", "--seed", "11", "--json"];
    let a = run(&args);
    let b = run(&args);
    let (a_out, b_out) = (
        String::from_utf8(a.stdout).unwrap(),
        String::from_utf8(b.stdout).unwrap(),
    );
    // Report lines: byte-identical across processes.
    assert_eq!(
        a_out.lines().skip(1).collect::<Vec<_>>(),
        b_out.lines().skip(1).collect::<Vec<_>>()
    );
    // Headers: identical after clearing the timestamp.
    let mut ha: Value = serde_json::from_str(a_out.lines().next().unwrap()).unwrap();
    let mut hb: Value = serde_json::from_str(b_out.lines().next().unwrap()).unwrap();
    ha["timestamp"] = 0.into();
    hb["timestamp"] = 0.into();
    assert_eq!(ha, hb);
}

#[test]
fn text_rendering_ends_with_a_verdict() {
    let out = run(&["schwarz", "--trials", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("schwarz"));
    assert!(text.trim_end().ends_with("verdict: all reports pass"));
}

#[test]
fn fixture_reports_do_not_fail_the_run() {
    let out = run(&["norms", "--trials", "4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert!(
        lines[1..].iter().any(|r| r["status"] == "fixture"),
        "the skew fixture must be reported"
    );
}

#[test]
fn unachievable_tolerance_fails_with_exit_one() {
    let out = run(&["axioms", "--trials", "20", "--tol", "1e-15", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let lines = stdout_lines(&out);
    assert!(lines[1..].iter().any(|r| r["status"] == "fail"));
}

#[test]
fn env_var_sets_tolerance_and_the_flag_wins() {
    let strict = cmd()
        .args(["axioms", "--trials", "20"])
        .env("NHILBERT_TOL", "1e-15")
        .output()
        .unwrap();
    assert_eq!(strict.status.code(), Some(1));

    let overridden = cmd()
        .args(["axioms", "--trials", "20", "--tol", "1e-8"])
        .env("NHILBERT_TOL", "1e-15")
        .output()
        .unwrap();
    assert_eq!(overridden.status.code(), Some(0));

    let malformed = cmd()
        .args(["axioms", "--trials", "5"])
        .env("NHILBERT_TOL", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(malformed.status.code(), Some(2));
}

#[test]
fn invalid_inputs_exit_two() {
    assert_eq!(run(&["bogus-suite"]).status.code(), Some(2));

    let junk = spec_file("this is not json");
    let out = run(&["riesz", "--input", junk.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let unknown = spec_file(r#"{"surprise": 1}"#);
    let out = run(&["riesz", "--input", unknown.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("surprise"));

    // Anchors must be independent: a repeated anchor vector is degenerate.
    let degenerate = spec_file(
        r#"{"dim": 3, "order": 3,
            "anchor": [[[0,0],[0,0],[1,0]], [[0,0],[0,0],[1,0]]]}"#,
    );
    let out = run(&["riesz", "--input", degenerate.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // A functional seeing the anchor is unbounded: no representer exists.
    let unbounded = spec_file(
        r#"{"dim": 3, "order": 2,
            "anchor": [[[0,0],[0,0],[1,0]]],
            "functional": [[0,0],[0,0],[1,0]]}"#,
    );
    let out = run(&["riesz", "--input", unbounded.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn flags_override_the_input_file() {
    let file = spec_file(r#"{"dim": 3, "seed": 1}"#);
    let out = run(&[
        "schwarz",
        "--input",
        file.path().to_str().unwrap(),
        "--seed",
        "9",
        "--trials",
        "4",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert_eq!(lines[0]["seed"], 9);
}

#[test]
fn out_flag_writes_the_ndjson_stream() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["polarize", "--trials", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    // Stdout stays human-readable; the file carries the NDJSON.
    assert!(String::from_utf8_lossy(&out.stdout).contains("verdict"));
    let written = std::fs::read_to_string(&path).unwrap();
    for line in written.lines() {
        let _: Value = serde_json::from_str(line).unwrap();
    }
    assert!(written.lines().count() > 1);
}

#[test]
fn worked_riesz_instance_solves_end_to_end() {
    let file = spec_file(
        r#"{"dim": 3, "order": 2,
            "anchor": [[[0,0],[0,0],[1,0]]],
            "functional": [[1,0],[2,0],[0,0]]}"#,
    );
    let out = run(&["riesz", "--input", file.path().to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    // The solution witness carries the functional norm sqrt(5).
    assert!(text.contains("2.23606797749979"), "missing norm in: {text}");
}
