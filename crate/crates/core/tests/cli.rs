use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pairinglab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).env_remove("PAIRINGLAB_SEED").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const BELL: &str = r#"{"dims": [2, 2], "matrix": [
  [[0.5, 0], [0, 0], [0, 0], [0.5, 0]],
  [[0, 0], [0, 0], [0, 0], [0, 0]],
  [[0, 0], [0, 0], [0, 0], [0, 0]],
  [[0.5, 0], [0, 0], [0, 0], [0.5, 0]]], "label": "bell"}"#;

const MC: &str = r#"{"dims": [2, 2], "matrix": [
  [[0.5, 0], [0, 0], [0, 0], [0.3, 0]],
  [[0, 0], [0, 0], [0, 0], [0, 0]],
  [[0, 0], [0, 0], [0, 0], [0, 0]],
  [[0.3, 0], [0, 0], [0, 0], [0.5, 0]]]}"#;

const PLUS: &str = r#"{"dims": [2], "matrix": [[[0.5, 0], [0.5, 0]], [[0.5, 0], [0.5, 0]]]}"#;

const DIAG: &str = r#"{"dims": [2, 2], "matrix": [
  [[0.25, 0], [0, 0], [0, 0], [0, 0]],
  [[0, 0], [0.25, 0], [0, 0], [0, 0]],
  [[0, 0], [0, 0], [0.25, 0], [0, 0]],
  [[0, 0], [0, 0], [0, 0], [0.25, 0]]]}"#;

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn value(report: &Value, name: &str) -> f64 {
    report["report"]["entries"][name]["value"].as_f64().unwrap()
}

#[test]
fn measure_bell_and_diagonal() {
    let dir = TempDir::new().unwrap();
    let bell = write(dir.path(), "bell.json", BELL);
    let o = run(&["measure", bell.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = json_of(&o);
    assert!((value(&r, "N") - 1.0).abs() < 1e-12);
    assert!((value(&r, "C_l1") - 1.0).abs() < 1e-12);
    assert_eq!(value(&r, "N0"), 1.0);

    let text = stdout(&run(&["measure", bell.to_str().unwrap()]));
    assert!(text.contains("C_l1  = 1"), "{text}");

    let diag = write(dir.path(), "diag.json", DIAG);
    let r = json_of(&run(&["measure", diag.to_str().unwrap(), "--json"]));
    for name in ["C_l1", "C_L", "C_r", "N", "N_L", "N0", "C_l0"] {
        assert!(value(&r, name).abs() < 1e-12, "{name}");
    }
}

#[test]
fn parse_and_validation_exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"dims": [2], "matrx": []}"#);
    let o = run(&["measure", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("matrx"), "{}", stderr(&o));

    let ragged = write(dir.path(), "ragged.json", r#"{"dims": [2], "matrix": [[[1, 0], [0, 0]], [[0, 0]]]}"#);
    let o = run(&["measure", ragged.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("matrix[1]"), "{}", stderr(&o));

    let trace2 = write(dir.path(), "t.json", r#"{"dims": [2], "matrix": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]}"#);
    assert_eq!(run(&["measure", trace2.to_str().unwrap()]).status.code(), Some(3));

    let missing = dir.path().join("nope.json");
    assert_eq!(run(&["measure", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn detect_and_decompose() {
    let dir = TempDir::new().unwrap();
    let mc = write(dir.path(), "mc.json", MC);
    let o = run(&["detect", mc.to_str().unwrap(), "--decompose", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = json_of(&o);
    assert_eq!(r["certificate"]["pairing_number"], 1);
    let m = &r["decomposition"]["measures"];
    assert!((m["e_d"].as_f64().unwrap() - 0.27807).abs() < 1e-4);
    assert!((m["e_c"].as_f64().unwrap() - 0.46900).abs() < 1e-4);

    let text = stdout(&run(&["detect", mc.to_str().unwrap(), "--decompose"]));
    assert!(text.contains("pairing number: 1"), "{text}");
    assert!(text.contains("E_D = C_D = 0.278071905113"), "{text}");

    let diag = write(dir.path(), "diag.json", DIAG);
    let r = json_of(&run(&["detect", diag.to_str().unwrap(), "--decompose", "--json"]));
    assert_eq!(r["certificate"]["pairing_number"], 0);
    assert_eq!(r["decomposition"]["measures"]["e_d"].as_f64().unwrap(), 0.0);

    let iso = dir.path().join("iso.json");
    let o = run(&["construct", "counterexample", "--name", "isotropic", "--p", "0.5", "--out", iso.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(run(&["detect", iso.to_str().unwrap()]).status.code(), Some(4));
}

#[test]
fn construct_outputs_and_sidecars() {
    let dir = TempDir::new().unwrap();
    let plus = write(dir.path(), "plus.json", PLUS);

    let out = dir.path().join("bell.json");
    let o = run(&["construct", "cnot-embed", "--input", plus.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = json_of(&run(&["measure", out.to_str().unwrap(), "--json"]));
    assert!((value(&r, "N") - 1.0).abs() < 1e-12);
    let side: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("bell.json.report.json")).unwrap()).unwrap();
    assert_eq!(side["pairing_number"], 1);

    let out = dir.path().join("tau.json");
    let o = run(&["construct", "counterexample", "--name", "tau-remark", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let side: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("tau.json.report.json")).unwrap()).unwrap();
    assert!(side["tau_min_eigenvalue"].as_f64().unwrap() < 0.0);
    assert_eq!(side["tau_is_state"], false);

    let out = dir.path().join("chain.json");
    let o = run(&["construct", "appendix-a", "--input", plus.to_str().unwrap(), "--L", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let side: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("chain.json.report.json")).unwrap()).unwrap();
    assert_eq!(side["K"], 4);
    assert!((side["checks"]["trace_m"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    assert_eq!(side["checks"]["multiset_equal"], true);

    let out = dir.path().join("mc.json");
    let o = run(&["construct", "mc", "--coeffs", "[[0.5,0.3],[0.3,0.5]]", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = json_of(&run(&["measure", out.to_str().unwrap(), "--json"]));
    assert!((value(&r, "N") - 0.6).abs() < 1e-12);

    let spec = write(
        dir.path(),
        "qq.json",
        r#"{"d_b": 5, "p0": 0.2, "diag": [0,0,0,0,1,0,0,0,0,0],
            "blocks": [{"weight": 0.8, "coeffs": [[0.5,0.3],[0.3,0.5]], "columns": [0, 1]}]}"#,
    );
    let out = dir.path().join("qq_state.json");
    let o = run(&["construct", "qubit-qudit", "--input", spec.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = json_of(&run(&["measure", out.to_str().unwrap(), "--json"]));
    assert!((value(&r, "N") - 0.48).abs() < 1e-12);

    let o = run(&["construct", "mc", "--coeffs", "[[0.5,0.3],[0.3,0.5]]", "--a-labels", "0,0", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(5));
    let o = run(&["construct", "counterexample", "--name", "nope", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(5));
    let o = run(&["construct", "teleport", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn witness_command() {
    let dir = TempDir::new().unwrap();
    let mc = write(dir.path(), "mc.json", MC);
    let o = run(&["witness", mc.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = json_of(&o);
    assert!((r["witnesses"][0]["block_negativity"].as_f64().unwrap() - 0.6).abs() < 1e-12);
    assert!((r["lower_bound"]["value"].as_f64().unwrap() - 0.2780719051126377).abs() < 1e-10);

    let diag = write(dir.path(), "diag.json", DIAG);
    assert_eq!(run(&["witness", diag.to_str().unwrap()]).status.code(), Some(4));
    assert_eq!(run(&["witness", mc.to_str().unwrap(), "--which", "3"]).status.code(), Some(5));
}

#[test]
fn verify_suites_and_seeds() {
    let o = run(&["verify", "--suite", "negativity-bound", "--trials", "200", "--dims", "3", "3", "--seed", "7", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let a = json_of(&o);
    assert_eq!(a["violations"].as_array().unwrap().len(), 0);
    assert_eq!(a["seed"], 7);

    let b = json_of(
        &bin()
            .args(["verify", "--suite", "negativity-bound", "--trials", "200", "--dims", "3", "3", "--json"])
            .env("PAIRINGLAB_SEED", "7")
            .output()
            .unwrap(),
    );
    assert_eq!(a["worst_gap"], b["worst_gap"]);
    assert_eq!(b["seed"], 7);

    for suite in ["l0-bound", "witness", "all"] {
        let o = run(&["verify", "--suite", suite, "--trials", "40"]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
    }
    let o = run(&["verify", "--suite", "additivity", "--trials", "200", "--seed", "42"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(run(&["verify", "--suite", "bogus"]).status.code(), Some(5));
    assert_eq!(run(&["verify", "--suite", "lowerbound", "--dims", "3", "3"]).status.code(), Some(5));
}
