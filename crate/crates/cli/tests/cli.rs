//! End-to-end runs of the `psilab` binary.

use std::path::PathBuf;
use std::process::Command;

use psilab_core::field::Rationals;
use psilab_core::poly::JsonTerm;
use psilab_core::Polynomial;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn psilab(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_psilab")).args(args).arg("--json").output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {stdout}\n{}", String::from_utf8_lossy(&out.stderr)));
    (out.status.code().unwrap(), json)
}

fn section<'a>(report: &'a Value, prefix: &str) -> &'a Value {
    report["sections"].as_array().unwrap().iter().find(|s| s["title"].as_str().unwrap().starts_with(prefix)).unwrap()
}

#[test]
fn classify_quadric_example() {
    let (code, r) = psilab(&["classify", "--poly", fixture("liana.txt").to_str().unwrap(), "--n", "4"]);
    assert_eq!(code, 0);
    let c = &section(&r, "classification")["data"];
    assert_eq!(c["hilbert"], serde_json::json!([1, 4, 1]));
    assert_eq!(c["narrow"], true);
    assert_eq!(c["extremely_narrow"], true);
    assert_eq!(c["gorenstein"], true);
}

#[test]
fn betti_oracle_equals_formula() {
    let (code, r) = psilab(&["betti", "--n", "5", "--d", "3", "--seed", "7", "--both"]);
    assert_eq!(code, 0);
    let table = &section(&r, "betti table (Koszul")["data"];
    assert!(table.as_array().unwrap().contains(&serde_json::json!({"i": 1, "j": 3, "beta": 33})));
    assert_eq!(r["checks"][0]["verdict"], "pass");
    assert_eq!(r["checks"][0]["actual"]["provenance"], "oracle");
    assert_eq!(r["checks"][0]["expected"]["provenance"], "formula");
    assert_eq!(r["inputs"]["seed"], 7);
}

#[test]
fn polynomial_echo_round_trips() {
    let path = fixture("cubic_n5.txt");
    let (_, r) = psilab(&["orbit-dim", "--poly", path.to_str().unwrap()]);
    let text = std::fs::read_to_string(&path).unwrap();
    let original = Polynomial::parse(Rationals, &text, None).unwrap();
    let echo = &r["inputs"]["poly"];
    let from_text = Polynomial::parse(Rationals, echo["text"].as_str().unwrap(), Some(5)).unwrap();
    let terms: Vec<JsonTerm> = serde_json::from_value(echo["terms"].clone()).unwrap();
    let from_terms = Polynomial::from_json_terms(Rationals, 5, &terms).unwrap();
    assert_eq!(from_text, original);
    assert_eq!(from_terms, original);
    assert_eq!(section(&r, "orbit span")["data"]["codimension"], 2);
}

#[test]
fn exit_code_reflects_verdicts() {
    let (ok, _) = psilab(&["verify-paper", "--suite", "restriction"]);
    assert_eq!(ok, 0);
    let (failing, r) = psilab(&["verify-paper", "--suite", "golod"]);
    assert_eq!(failing, 1);
    let known = r["checks"].as_array().unwrap().iter().filter(|c| c["verdict"] == "fail").all(|c| c.get("known_defect").is_some());
    assert!(known);
}

#[test]
fn prime_field_hypothesis_is_enforced() {
    let out = Command::new(env!("CARGO_BIN_EXE_psilab")).args(["betti", "--n", "5", "--d", "3", "--field", "fp:13"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("must exceed"));
}

#[test]
fn linrel_and_restrict() {
    let (code, r) = psilab(&["linrel", "--n", "6", "--d", "4", "--t-seed", "3"]);
    assert_eq!(code, 0, "{r}");
    let (code, r) = psilab(&["linrel", "--n", "5", "--d", "3", "--t", r#"{"2,1": "1/2", "1,1,1": 3}"#]);
    assert_eq!(code, 0, "{r}");
    let (code, r) = psilab(&["restrict", "--schur", "2,1", "--n", "4"]);
    assert_eq!(code, 0);
    // s_(2,1) = (p_1^3 − p_3)/3 averaged against the S_4 characters by hand:
    // trivial 1, standard 3, and the dimensions add up to dim S_(2,1)(k^4) = 20.
    let data = &section(&r, "restriction")["data"];
    assert_eq!(data, &serde_json::json!([[[2, 1, 1], 2], [[2, 2], 2], [[3, 1], 3], [[4], 1]]));
}

#[test]
fn construction_and_equivariant() {
    let (code, r) = psilab(&["construct", "--d", "2", "--n", "8"]);
    assert_eq!(code, 0, "{r}");
    let (code, r) = psilab(&["equivariant", "--n", "4", "--d", "2", "--seed", "3", "--field", "fp:1000003", "--i", "2"]);
    assert_eq!(code, 0, "{r}");
    let (code, r) = psilab(&["golod-check", "--n", "3", "--d", "2", "--seed", "2", "--max-i", "5"]);
    assert_eq!(code, 0, "{r}");
    let (code, r) = psilab(&["inverse", "--poly", fixture("liana.txt").to_str().unwrap(), "--n", "3", "--degree", "2"]);
    assert_eq!(code, 0, "{r}");
}
