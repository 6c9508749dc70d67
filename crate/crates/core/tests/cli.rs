//! End-to-end checks of the command-line binary: exit-code convention,
//! construct -> check round trips, and byte-stable JSON output.

use std::process::{Command, Output, Stdio};
use std::io::Write;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_zncodes"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("stdin written");
    child.wait_with_output().expect("binary finishes")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8 output")
}

#[test]
fn construct_then_check_round_trip_is_minimal() {
    let built = run(&["construct", "--recipe", "lambda0", "--n", "4", "--k", "2"]);
    assert!(built.status.success());
    let matrix = stdout(&built);
    assert!(matrix.starts_with("4 2 6\n"));

    let checked = run_with_stdin(&["check", "--input", "-"], &matrix);
    assert_eq!(checked.status.code(), Some(0), "{}", stdout(&checked));
    assert!(stdout(&checked).contains("minimal"));
}

#[test]
fn check_exit_code_2_for_non_minimal_code() {
    let out = run_with_stdin(&["check", "--input", "-"], "4 2 2\n1 0\n0 1\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("not minimal"));
    assert!(stdout(&out).contains("counterexample"));
}

#[test]
fn errors_exit_1_with_message() {
    let missing = run(&["check", "--input", "/no/such/file"]);
    assert_eq!(missing.status.code(), Some(1));

    let malformed = run_with_stdin(&["check", "--input", "-"], "4 2 1\n7 0\n");
    assert_eq!(malformed.status.code(), Some(1));
    let err = String::from_utf8(malformed.stderr).unwrap();
    assert!(err.contains("residue 7"), "{err}");

    let bad_modulus = run(&["ring-info", "--n", "1"]);
    assert_eq!(bad_modulus.status.code(), Some(1));
}

#[test]
fn onedim_gcd_construction_output() {
    let out = run(&["construct", "--recipe", "onedim-gcd", "--n", "12"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "12 1 4\n1\n3\n6\n4\n");
}

#[test]
fn json_output_is_deterministic_across_runs_and_workers() {
    for args in [
        vec!["--json", "bounds", "--n", "6", "--k", "2"],
        vec!["--json", "search-mmin", "--n", "4", "--k", "2", "--m-cap", "7"],
        vec!["--json", "construct", "--recipe", "lambda0-bi", "--n", "6", "--k", "2"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(stdout(&a), stdout(&b));
        let mut with_workers = vec!["--workers", "2"];
        with_workers.extend(&args);
        let c = run(&with_workers);
        assert_eq!(stdout(&a), stdout(&c), "worker count changed output for {args:?}");
    }
}

#[test]
fn check_json_schema_fields() {
    let built = run(&["construct", "--recipe", "lambda0-bi", "--n", "6", "--k", "2"]);
    let out = run_with_stdin(&["--json", "check", "--input", "-"], &stdout(&built));
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["injective_encoding"], true);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    for r in reports {
        assert_eq!(r["n"], 6);
        assert_eq!(r["k"], 2);
        assert_eq!(r["m"], 12);
        assert_eq!(r["verdict"], true);
    }
}

#[test]
fn single_message_check() {
    let built = run(&["construct", "--recipe", "lambda0", "--n", "4", "--k", "2"]);
    let ok = run_with_stdin(
        &["check", "--input", "-", "--message", "1,0"],
        &stdout(&built),
    );
    assert_eq!(ok.status.code(), Some(0));

    let bad = run_with_stdin(
        &["check", "--input", "-", "--message", "1,1"],
        "4 2 2\n1 0\n0 1\n",
    );
    assert_eq!(bad.status.code(), Some(2));
}
