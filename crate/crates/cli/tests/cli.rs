use std::path::PathBuf;
use std::process::{Command, Output};

use delta_core::parse_q;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn delta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delta"))
        .args(args)
        .env_remove("DELTA_CATALOG")
        .output()
        .expect("run delta")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_line(o: &Output) -> String {
    stdout(o).lines().next().unwrap_or_default().to_string()
}

/// Every string that looks like a rational must re-parse to itself.
fn rationals_round_trip(v: &Value) {
    match v {
        Value::String(s)
            if s.chars()
                .all(|c| c.is_ascii_digit() || c == '/' || c == '-')
                && !s.is_empty() =>
        {
            let x = parse_q(s).unwrap_or_else(|e| panic!("{s}: {e}"));
            assert_eq!(&delta_core::fmt_q(&x), s);
        }
        Value::Array(a) => a.iter().for_each(rationals_round_trip),
        Value::Object(o) => o.values().for_each(rationals_round_trip),
        _ => {}
    }
}

#[test]
fn compute_global_and_local() {
    let o = delta(&["compute", "dp8-F2"]);
    assert!(o.status.success());
    assert_eq!(first_line(&o), "3/4 (exact)");
    let o = delta(&["compute", "dp6-A1A2", "--point", "E3"]);
    assert_eq!(first_line(&o), "1/2 (exact)");
}

#[test]
fn lookup_errors_exit_two() {
    assert_eq!(delta(&["compute", "nonexistent"]).status.code(), Some(2));
    assert_eq!(
        delta(&["compute", "dp8-F2", "--point", "nowhere"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        delta(&["dump-profile", "dp8-F1", "nowhere"]).status.code(),
        Some(2)
    );
    assert_eq!(delta(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        delta(&["--catalog", "/nonexistent/catalog.json", "list"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn list_counts() {
    let rows = |d: &str| stdout(&delta(&["list", "--degree", d])).lines().count() - 1;
    assert_eq!(rows("6"), 6);
    assert_eq!(rows("4"), 16);
    assert_eq!(rows("3"), 0);
    let all = stdout(&delta(&["list"])).lines().count() - 1;
    assert_eq!(all, delta_core::builtin_models().len());
}

#[test]
fn dump_profile_of_f1_section() {
    let o = delta(&["dump-profile", "dp8-F1", "s"]);
    let text = stdout(&o);
    assert_eq!(
        text,
        "[0, 2]\n  N: 0\n  P^2: (8) + (-2)v + (-1)v²\ntau: 2\nS: 7/6\n"
    );
}

#[test]
fn dump_profile_of_generic_blowup() {
    let text = stdout(&delta(&["dump-profile", "dp5-smooth-blowup", "EP"]));
    assert!(text.starts_with("[0, 2]\n"), "{text}");
    assert!(text.contains("[2, 5/2]\n"));
    assert!(text.contains("P^2: (25) + (-20)v + (4)v²"));
    assert!(text.ends_with("tau: 5/2\nS: 3/2\n"));
}

#[test]
fn dump_profile_json() {
    let o = delta(&[
        "dump-profile",
        "dp7-smooth-blowup",
        "EP",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["S"], "38/21");
    assert_eq!(
        v["segments"][1]["psq"],
        serde_json::json!(["15", "-8", "1"])
    );
    assert_eq!(v["segments"][1]["support"][0]["curve"], "L1P");
    rationals_round_trip(&v);
}

#[test]
fn markdown_table_layout() {
    let text = stdout(&delta(&["table", "--degree", "6", "--format", "markdown"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "| degree | #lines | singularities | δ |");
    assert_eq!(lines.len(), 2 + 6);
    assert!(lines.contains(&"| 6 | 1 | A1A2 | 1/2 |"));
}

#[test]
fn json_outputs_parse_and_round_trip() {
    for args in [
        &["list", "--format", "json"][..],
        &["compute", "dp4-D5", "--format", "json"],
        &["table", "--format", "json", "--degree", "5"],
    ] {
        let v: Value = serde_json::from_str(&stdout(&delta(args))).unwrap();
        rationals_round_trip(&v);
    }
    let v: Value =
        serde_json::from_str(&stdout(&delta(&["compute", "dp4-D5", "--format", "json"]))).unwrap();
    assert_eq!(v["result"]["lower"], "3/8");
    assert_eq!(v["result"]["exact"], true);
}

#[test]
fn verify_json_has_per_row_status() {
    let path = fixture("dp6-2A1.json");
    let o = delta(&[
        "--catalog",
        path.to_str().unwrap(),
        "verify",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["status"].is_string()));
    assert_eq!(v["ok"], true);
    rationals_round_trip(&v);
}

#[test]
fn catalog_from_environment() {
    let path = fixture("dp6-2A1.json");
    let o = Command::new(env!("CARGO_BIN_EXE_delta"))
        .args(["list"])
        .env("DELTA_CATALOG", &path)
        .output()
        .unwrap();
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 2, "{text}");
    assert!(text.contains("dp6-2A1"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table"][..],
        &["verify", "--format", "json"],
        &["dump-profile", "dp4-D4", "E3"],
    ] {
        let a = delta(args);
        let b = delta(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}
