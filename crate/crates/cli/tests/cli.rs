//! End-to-end tests of the command-line interface against the built
//! binary: output values, JSON schema, exit codes, determinism.

use std::process::{Command, Output};

fn vg3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vg3"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn dims_values_and_errors() {
    let out = vg3(&["dims", "--rank", "4", "--weight", "1,0,0,0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "8");

    let out = vg3(&["dims", "--rank", "4", "--weight", "3,1,0,0"]);
    assert_eq!(stdout(&out).trim(), "567");

    let out = vg3(&["dims", "--rank", "4", "--weight", "0,0,0,0"]);
    assert_eq!(stdout(&out).trim(), "1");

    // Non-dominant weights and unparsable weights are usage errors.
    let out = vg3(&["dims", "--rank", "4", "--weight", "1,2,0,0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = vg3(&["dims", "--rank", "4", "--weight", "one,two"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verlinde_values() {
    let out = vg3(&["verlinde", "--genus", "3", "--level", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "28");

    let out = vg3(&["verlinde", "--genus", "3", "--level", "9"]);
    assert_eq!(stdout(&out).trim(), "168273");

    let out = vg3(&["verlinde", "--genus", "2", "--level", "2"]);
    assert_eq!(stdout(&out).trim(), "6");

    // Hand evaluation: cosec^2 at (pi/6 .. 5pi/6) is (4, 4/3, 1, 4/3, 4),
    // so the alternating sum is -19/3 and the value is -3 * (-19/3) = 19.
    let out = vg3(&["verlinde", "--genus", "2", "--level", "3", "--method", "float"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "19");
    assert!(String::from_utf8_lossy(&out.stderr).contains("residual"));
}

#[test]
fn verlinde_cross_check_agrees() {
    let out = vg3(&["verlinde", "--genus", "3", "--level", "3", "--cross-check"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout(&out).trim(), "265");
    assert!(String::from_utf8_lossy(&out.stderr).contains("agreement"));

    // Cross-checking any other genus is a usage error.
    let out = vg3(&["verlinde", "--genus", "2", "--level", "3", "--cross-check"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_contains_published_row() {
    let out = vg3(&["table"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("698775"));
    assert!(text.contains("1945944"));
    assert!(text.contains("168273"));
    // Extending past the published range uses the polynomials.
    let out = vg3(&["table", "--kmax", "10"]);
    assert!(stdout(&out).contains("557689"));
}

#[test]
fn verify_json_schema_and_determinism() {
    let out = vg3(&["verify", "table", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let parsed: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    let results = parsed["results"].as_array().expect("results array");
    assert_eq!(results.len(), 9);
    for r in results {
        for key in ["id", "status", "expected", "computed", "paper_anchor"] {
            assert!(r.get(key).is_some(), "missing key {key}");
        }
        assert_eq!(r["status"], "pass");
    }
    assert_eq!(parsed["summary"]["fail"], 0);

    // Byte-identical across runs.
    let again = vg3(&["verify", "table", "--format", "json"]);
    assert_eq!(text, stdout(&again));
}

#[test]
fn verify_selector_exit_codes() {
    let out = vg3(&["verify", "serre"]);
    assert_eq!(out.status.code(), Some(0));
    let out = vg3(&["verify", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown subcommands are clap usage errors.
    let out = vg3(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
