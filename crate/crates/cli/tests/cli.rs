use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

use tenfold_core::clifford::{clifford_real, CliffordSignature};
use tenfold_core::divclass::DivisionWitness;
use tenfold_core::repthree::fixtures;
use tenfold_core::scalar::Rational;

fn run(args: &[&str]) -> (u8, String, String) {
    let mut argv = vec!["tenfold"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = tenfold_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> (u8, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    let value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: stdout {out:?} stderr {err:?}"));
    (code, value)
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const LABELS: [&str; 10] = [
    "R", "C", "H", "R_plus", "R_minus", "C_comm", "C_anti_plus", "C_anti_minus", "H_plus", "H_minus",
];

#[test]
fn canon_then_classify_round_trips() {
    let dir = TempDir::new().unwrap();
    for label in LABELS {
        let path = dir.path().join(format!("{label}.json"));
        let (code, _, _) = run(&["canon", label, "-o", s(&path)]);
        assert_eq!(code, 0);
        let (code, report) = run_json(&["classify", s(&path)]);
        assert_eq!(code, 0, "{label}");
        assert_eq!(report["label"], label);
    }
}

#[test]
fn json_reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("h.json");
    run(&["canon", "H_minus", "-o", s(&path)]);
    for args in [
        vec!["--json", "classify", s(&path)],
        vec!["--json", "clifford", "--p", "2", "--q", "2", "--classify"],
        vec!["--json", "periodicity", "--p", "1", "--q", "1"],
        vec!["--json", "canon", "C_comm"],
    ] {
        assert_eq!(run(&args).1, run(&args).1, "{args:?}");
    }
}

#[test]
fn hyperbolic_clifford_is_rejected_with_a_verifiable_witness() {
    let (code, report) = run_json(&["clifford", "--p", "1", "--q", "1", "--classify"]);
    assert_eq!(code, 1);
    assert_eq!(report["rejected"], "not_super_division");
    assert_eq!(report["witness"]["element"], serde_json::json!(["0", "1", "1", "0"]));
    let element: Vec<Rational> = serde_json::from_value(report["witness"]["element"].clone()).unwrap();
    let alg = clifford_real(CliffordSignature::new(1, 1).unwrap());
    assert!(DivisionWitness::ZeroDivisor { element }.verify(&alg));

    let (code, out, _) = run(&["clifford", "--p", "1", "--q", "1", "--classify"]);
    assert_eq!(code, 1);
    assert!(out.contains("e1 + e2"), "{out}");
}

#[test]
fn clifford_classification_and_export() {
    let (code, report) = run_json(&["clifford", "--p", "0", "--q", "3", "--classify"]);
    assert_eq!(code, 0);
    assert_eq!(report["label"], "H_plus");
    assert_eq!(report["brauer_wall"]["value"], 5);

    let dir = TempDir::new().unwrap();
    let path = dir.path().join("cl1c.json");
    assert_eq!(run(&["clifford", "--complex-n", "1", "-o", s(&path)]).0, 0);
    let (code, _, err) = run(&["classify", s(&path)]);
    assert_eq!(code, 2);
    assert!(err.contains("--realify"));
    let (code, report) = run_json(&["classify", "--realify", s(&path)]);
    assert_eq!(code, 0);
    assert_eq!(report["label"], "C_comm");
}

#[test]
fn prose_includes_the_trace() {
    let (code, out, _) = run(&["clifford", "--p", "3", "--q", "0", "--classify"]);
    assert_eq!(code, 0);
    assert!(out.contains("label: H_minus"));
    assert!(out.contains("recentered e: e1e2e3"));
    assert!(out.contains("trace:"));
}

#[test]
fn periodicity_certificate() {
    let (code, cert) = run_json(&["periodicity", "--p", "1", "--q", "0"]);
    assert_eq!(code, 0);
    assert_eq!(cert["images"].as_array().unwrap().len(), 3);
    assert_eq!(cert["span_dim"], 8);
    assert_eq!(run(&["periodicity", "--p", "4", "--q", "3"]).0, 2);
}

#[test]
fn tensor_of_exported_algebras() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let ab = dir.path().join("ab.json");
    run(&["clifford", "--p", "1", "--q", "0", "-o", s(&a)]);
    run(&["clifford", "--p", "0", "--q", "1", "-o", s(&b)]);
    assert_eq!(run(&["tensor", s(&a), s(&b), "-o", s(&ab)]).0, 0);
    let (_, doc) = run_json(&["tensor", s(&a), s(&b)]);
    assert_eq!(doc["dim"], 4);
    assert_eq!(doc["parity"], serde_json::json!([0, 1, 1, 0]));
    // Cl(1,0) ⊗ Cl(0,1) is Cl(1,1).
    let (code, report) = run_json(&["classify", s(&ab)]);
    assert_eq!(code, 1);
    assert_eq!(report["rejected"], "not_super_division");

    let c = dir.path().join("c.json");
    run(&["clifford", "--complex-n", "1", "-o", s(&c)]);
    assert_eq!(run(&["tensor", s(&a), s(&c)]).0, 2);
}

#[test]
fn invert_elements() {
    let dir = TempDir::new().unwrap();
    let h = dir.path().join("h.json");
    run(&["canon", "H", "-o", s(&h)]);
    let (code, out) = run_json(&["invert", s(&h), "--element", "0,1,0,0"]);
    assert_eq!(code, 0);
    assert_eq!(out["inverse"], serde_json::json!(["0", "-1", "0", "0"]));

    let cl = dir.path().join("cl11.json");
    run(&["clifford", "--p", "1", "--q", "1", "-o", s(&cl)]);
    let (code, out) = run_json(&["invert", s(&cl), "--element", r#"["0","1","1","0"]"#]);
    assert_eq!(code, 1);
    assert_eq!(out["rejected"], "not_invertible");

    assert_eq!(run(&["invert", s(&h), "--element", "1,2"]).0, 2);
}

#[test]
fn threefold_verbs() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.json", &fixtures::cyclic4_rotation().to_json());
    let (code, out) = run_json(&["commutant", s(&c4)]);
    assert_eq!(code, 0);
    assert_eq!(out, serde_json::json!({"order": 4, "commutant_dim": 2, "type": "C"}));

    let q8 = write(&dir, "q8.json", &fixtures::quaternion_complex().to_json());
    let (code, out) = run_json(&["fs", s(&q8)]);
    assert_eq!(code, 0);
    assert_eq!(out["fs"], "-1");
    assert_eq!(out["order"], 8);

    let s3 = write(&dir, "s3.json", &fixtures::symmetric3_standard().to_json());
    assert_eq!(run_json(&["fs", s(&s3)]).1["fs"], "+1");

    // Over C the rotation representation splits.
    let (code, out) = run_json(&["fs", s(&c4)]);
    assert_eq!(code, 1);
    assert_eq!(out["rejected"], "not_irreducible");

    let two = write(&dir, "two.json", &fixtures::trivial_sum().to_json());
    assert_eq!(run_json(&["commutant", s(&two)]).1["type"], "reducible");
}

#[test]
fn malformed_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", "{\"field\": \"R\", \"dim\": 1");
    assert_eq!(run(&["classify", s(&bad)]).0, 2);
    let wrong = write(&dir, "wrong.json", r#"{"field":"R","dim":1,"parity":[1],"unit":["1"],"mul":[[["1"]]]}"#);
    assert_eq!(run(&["classify", s(&wrong)]).0, 2);
    assert_eq!(run(&["classify", "/nonexistent/file.json"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["canon", "R", "--bogus"]).0, 2);
    assert_eq!(run(&["canon", "Q"]).0, 2);
    assert_eq!(run(&["clifford", "--p", "9", "--q", "0"]).0, 2);
    assert_eq!(run(&["clifford", "--p", "1"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn selftest_sections_and_fault_injection() {
    let (code, report) = run_json(&["selftest", "--section", "clifford"]);
    assert_eq!(code, 0);
    let sections = report["sections"].as_array().unwrap();
    assert_eq!(sections.len(), 1);
    assert_eq!(sections[0]["section"], "clifford");

    let (code, out, _) = run(&["selftest", "--section", "tenfold", "--corrupt-canonical", "C_anti_minus"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL  tenfold      ten invariant tuples distinct"), "{out}");
    assert!(out.contains("C_anti_plus and C_anti_minus"), "{out}");

    assert_eq!(run(&["selftest", "--section", "nope"]).0, 2);
}

#[test]
fn full_selftest_passes() {
    let (code, report) = run_json(&["selftest"]);
    assert_eq!(code, 0, "{report}");
    assert_eq!(report["passed"], true);
    assert_eq!(report["sections"].as_array().unwrap().len(), 5);
}

#[test]
fn binary_honours_closure_cap() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.json", &fixtures::cyclic4_rotation().to_json());
    let bin = env!("CARGO_BIN_EXE_tenfold");
    let capped = Command::new(bin)
        .args(["--json", "commutant", s(&c4)])
        .env("TENFOLD_CLOSURE_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&capped.stdout).contains("closure_exceeded"));

    let bad = Command::new(bin)
        .args(["commutant", s(&c4)])
        .env("TENFOLD_CLOSURE_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));

    let fine = Command::new(bin).args(["commutant", s(&c4)]).env_remove("TENFOLD_CLOSURE_CAP").output().unwrap();
    assert_eq!(fine.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&fine.stdout).contains("type C"));
}
