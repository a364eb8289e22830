use std::path::PathBuf;
use std::process::{Command, Output};

use mtc_core::cobordism::{self, EvaluatedMap};
use mtc_core::source::load_category;
use proptest::prelude::*;
use serde_json::Value;

fn mtc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mtc"))
        .args(args)
        .env_remove("MTC_TOLERANCE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mtc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verlinde_json_summary() {
    let o = mtc(&["verlinde", "fibonacci", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verlinde"], "pass");
    assert_eq!(v["reverse"], "pass");
    assert!(v["max_residual"].as_f64().unwrap() < 1e-9);
}

#[test]
fn genus_prints_both_values() {
    let o = mtc(&["genus", "fibonacci", "-g", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("formula 5.000000"), "{text}");
    assert!(text.contains("bruteforce 5"));
    assert!(text.lines().last().unwrap().contains("pass"));
    let o = mtc(&["genus", "ising", "-g", "1", "-i", "psi"]);
    assert!(stdout(&o).contains("bruteforce 1"));
}

#[test]
fn eval_prints_matrix_with_six_digits() {
    let o = mtc(&["eval", "fibonacci", "Psi . Psi"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches("3.61803").count(), 2, "{text}");
    assert!(!text.contains("3.618034"));
}

#[test]
fn eval_apply_gives_image() {
    let o = mtc(&["eval", "fibonacci", "Y2", "--apply", "tau,tau", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["image"], serde_json::json!([[1.0, 0.0], [1.0, 0.0]]));
    let o = mtc(&["eval", "fibonacci", "Y2", "--apply", "tau"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_csv_has_one_row_per_entry() {
    let o = mtc(&["eval", "ising", "Psi", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 9);
}

#[test]
fn parse_errors_echo_position() {
    let o = mtc(&["eval", "fibonacci", "Y1 . Psi)"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("position 8"), "{err}");
    assert!(err.contains("          ^"), "{err}");
    let o = mtc(&["eval", "fibonacci", "Y1 . Psi"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("position 3"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verlinde", "nope"][..],
        &["genus", "fibonacci"],
        &["frobnicate"],
        &["genus", "fibonacci", "-g", "1", "-i", "sigma"],
        &["list", "--tol", "0"],
        &["list", "--format", "yaml"],
    ] {
        assert_eq!(mtc(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn tolerance_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_mtc"))
        .args(["props", "fibonacci", "--format", "json"])
        .env("MTC_TOLERANCE", "1e-30")
        .output()
        .unwrap();
    // round-off exceeds 1e-30, so some identity must fail
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["checks"][0]["tolerance"], 1e-30);
    let o = Command::new(env!("CARGO_BIN_EXE_mtc"))
        .args(["props", "fibonacci", "--tol", "1e-9"])
        .env("MTC_TOLERANCE", "1e-30")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn handlebody_and_validate() {
    assert_eq!(mtc(&["handlebody", "fibonacci", "-g", "2"]).status.code(), Some(0));
    assert_eq!(mtc(&["handlebody", "semion", "-g", "1"]).status.code(), Some(0));
    assert_eq!(mtc(&["validate", "su2(3)", "--coherence"]).status.code(), Some(0));
    let o = mtc(&["validate", "rep_z2", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"], "pass");
}

#[test]
fn exported_matrices_reimport_exactly() {
    let cat = load_category("su2(3)").unwrap();
    for word in ["Psi . Psi", "Y1 . (PsiBar # K)", "coY2 . Psi", "ci1 . Psi"] {
        let o = mtc(&["eval", "su2(3)", word, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let back = EvaluatedMap::from_json(stdout(&o).trim()).unwrap();
        let direct = cobordism::evaluate(&cobordism::parse(word).unwrap(), &cat).unwrap();
        assert_eq!(back, direct, "{word}");
    }
}

fn corrupted(kind: u8) -> PathBuf {
    let mut raw = load_category("ising").unwrap().to_raw();
    match kind {
        0 => raw.n[2][2][2] = 1,
        1 => raw.d[1] = [1.5, 0.0],
        2 => raw.theta[2] = [0.0, 1.0],
        _ => raw.dual[1] = 2,
    }
    let path = scratch(&format!("bad-{kind}.json"));
    std::fs::write(&path, serde_json::to_string(&raw).unwrap()).unwrap();
    path
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn exit_codes_follow_contract(which in 0usize..12, kind in 0u8..4) {
        let good = ["trivial", "fibonacci", "ising", "semion", "cyclic(3,1)", "su2(2)"];
        if which < good.len() {
            prop_assert_eq!(mtc(&["validate", good[which]]).status.code(), Some(0));
            prop_assert_eq!(mtc(&["verlinde", good[which]]).status.code(), Some(0));
        } else {
            let path = corrupted(kind);
            let o = mtc(&["validate", path.to_str().unwrap(), "--format", "json"]);
            prop_assert_eq!(o.status.code(), Some(1));
            let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
            prop_assert_eq!(&v["result"], "fail");
            prop_assert_eq!(mtc(&["validate", "no-such-family"]).status.code(), Some(2));
        }
    }
}
