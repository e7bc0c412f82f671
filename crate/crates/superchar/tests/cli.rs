//! End-to-end tests of the superchar binary: JSON round trips, exit codes,
//! and byte-identical reruns.

use std::process::{Command, Output};

use serde_json::Value;

fn superchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superchar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json on stdout")
}

#[test]
fn describe_gl11() {
    let out = superchar(&["describe", "--algebra", r#"{"family":"gl","m":1,"n":1}"#]);
    let doc = stdout_json(&out);
    let iso = doc["delta_iso"].as_array().unwrap();
    assert_eq!(iso.len(), 2);
    assert_eq!(doc["roots"].as_array().unwrap().len(), 2);
}

#[test]
fn bases_gl21_enumeration() {
    let out = superchar(&["bases", "--algebra", "gl(2|1)"]);
    let doc = stdout_json(&out);
    let list = doc.as_array().unwrap();
    assert_eq!(list.len(), 3);
    let mut words: Vec<&str> = list.iter().map(|b| b["word"].as_str().unwrap()).collect();
    words.sort();
    assert_eq!(words, vec!["dee", "ede", "eed"]);
    let mixed: Vec<bool> = list.iter().map(|b| b["mixed"].as_bool().unwrap()).collect();
    assert_eq!(mixed.iter().filter(|&&m| m).count(), 1);
    for b in list {
        assert!(b["diagram"].as_str().unwrap().contains("(x)"));
    }
}

#[test]
fn deterministic_output() {
    let a = superchar(&["bases", "--algebra", "osp(3|2)"]);
    let b = superchar(&["bases", "--algebra", "osp(3|2)"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.status.success());
}

#[test]
fn dominant_exit_codes() {
    let yes = superchar(&["dominant", "--algebra", "gl(2|1)", "--weight", "1,0|0"]);
    assert_eq!(yes.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&yes.stdout).unwrap();
    assert_eq!(doc["dominant_integrable"], Value::Bool(true));

    let no = superchar(&["dominant", "--algebra", "gl(2|1)", "--weight", "0,0|1"]);
    assert_eq!(no.status.code(), Some(1));

    let closed = superchar(&[
        "dominant",
        "--algebra",
        "gl(2|1)",
        "--weight",
        "1,0|0",
        "--closed-form",
    ]);
    assert_eq!(closed.status.code(), Some(0));
}

#[test]
fn bshort_check_decompose_round_trip() {
    let dir = std::env::temp_dir().join(format!("superchar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bfile = dir.join("b.json");
    let efile = dir.join("elem.json");

    let out = superchar(&[
        "bshort",
        "--algebra",
        "gl(2|1)",
        "--base",
        "ede",
        "--weight",
        "1,0|0",
        "--out",
        bfile.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let solved: Value = serde_json::from_str(&std::fs::read_to_string(&bfile).unwrap()).unwrap();
    assert_eq!(solved["solution_dim"], Value::from(0));
    assert_eq!(solved["integral"], Value::Bool(true));
    assert_eq!(solved["element"]["terms"].as_array().unwrap().len(), 3);
    std::fs::write(&efile, solved["element"].to_string()).unwrap();

    let check = superchar(&[
        "check",
        "--in",
        efile.to_str().unwrap(),
        "--test",
        "a",
        "--all-beta",
    ]);
    let doc = stdout_json(&check);
    assert_eq!(doc["pass"], Value::Bool(true));

    let dec = superchar(&[
        "decompose",
        "--in",
        efile.to_str().unwrap(),
        "--base",
        "ede",
    ]);
    let doc = stdout_json(&dec);
    assert_eq!(doc["coefficients"].as_array().unwrap().len(), 1);
    assert_eq!(doc["coefficients"][0]["coeff"], serde_json::json!([1, 0]));
    assert!(doc["remainder"]["terms"].as_array().unwrap().is_empty());

    // Emitted element JSON re-parses and re-checks identically.
    let check2 = superchar(&[
        "check",
        "--in",
        efile.to_str().unwrap(),
        "--test",
        "a",
        "--all-beta",
    ]);
    assert_eq!(check.stdout, check2.stdout);

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn check_reports_counterexample_line() {
    let dir = std::env::temp_dir().join(format!("superchar-cli-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let efile = dir.join("bad.json");
    // The W-orbit sum of ε₁ alone: a charged string with no partner.
    let elem = serde_json::json!({
        "algebra": {"family": "gl", "m": 2, "n": 1},
        "terms": [
            {"weight": {"eps": ["1", "0"], "delta": ["0"]}, "coeff": [1, 0]},
            {"weight": {"eps": ["0", "1"], "delta": ["0"]}, "coeff": [1, 0]}
        ]
    });
    std::fs::write(&efile, elem.to_string()).unwrap();
    let out = superchar(&["check", "--in", efile.to_str().unwrap(), "--test", "a"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["pass"], Value::Bool(false));
    assert!(doc["counterexample"]
        .as_str()
        .unwrap()
        .contains("charged line"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn check_accepts_gl11_standard_character() {
    let dir = std::env::temp_dir().join(format!("superchar-cli-g11-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let efile = dir.join("std.json");
    // e^{ε₁} + ξ e^{δ₁}: the standard simple character of gl(1|1).
    let elem = serde_json::json!({
        "algebra": {"family": "gl", "m": 1, "n": 1},
        "terms": [
            {"weight": {"eps": ["1"], "delta": ["0"]}, "coeff": [1, 0]},
            {"weight": {"eps": ["0"], "delta": ["1"]}, "coeff": [0, 1]}
        ]
    });
    std::fs::write(&efile, elem.to_string()).unwrap();
    let out = superchar(&["check", "--in", efile.to_str().unwrap(), "--test", "A"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["pass"], Value::Bool(true));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn reflect_is_involutive_via_cli() {
    let once = superchar(&[
        "reflect",
        "--algebra",
        "gl(2|1)",
        "--base",
        "ede",
        "--beta-index",
        "0",
    ]);
    let doc = stdout_json(&once);
    assert_eq!(doc["word"].as_str().unwrap(), "dee");
}

#[test]
fn q_family_commands() {
    let out = superchar(&["bases", "--algebra", "q(2)"]);
    let doc = stdout_json(&out);
    let list = doc.as_array().unwrap();
    assert_eq!(list.len(), 1);
    assert!(list[0]["pr1"].as_bool().unwrap());
    assert!(list[0].get("diagram").is_none());
    let no = superchar(&["dominant", "--algebra", "q(2)", "--weight", "1,1"]);
    assert_eq!(no.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_nonzero() {
    let out = superchar(&["describe", "--algebra", "e8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let out = superchar(&["bases"]);
    assert_eq!(out.status.code(), Some(2));
}
