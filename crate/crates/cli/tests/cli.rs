use std::path::Path;
use std::process::{Command, Output};

use daha_core::exactalg::BigRat;
use daha_core::jack::JackResult;
use daha_core::qkz::TensorPoly;
use serde_json::Value;

fn daha(args: &[&str]) -> Output {
    daha_env(args, None)
}

fn daha_env(args: &[&str], memo: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_daha"));
    cmd.args(args).env_remove("DAHA_JACK_MEMO_DIR");
    if let Some(dir) = memo {
        cmd.env("DAHA_JACK_MEMO_DIR", dir);
    }
    cmd.output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn jack_emits_expected_polynomial_and_round_trips() {
    let o = daha(&["jack", "--n", "2", "--lambda", "1,0"]);
    assert_eq!(code(&o), 0);
    let parsed = JackResult::from_json_str(&stdout(&o)).unwrap();
    assert_eq!(parsed.render_text(), "x1 + (1/(κ + 1))*x2");
    let again: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(parsed.to_json_value(), again);

    let text = daha(&["jack", "--lambda", "1,0", "--format", "text"]);
    assert_eq!(stdout(&text), "x1 + (1/(κ + 1))*x2\n");
}

#[test]
fn shifted_jack_methods_agree() {
    let a = daha(&["shifted-jack", "--lambda", "0,1", "--method", "phi"]);
    let b = daha(&["shifted-jack", "--lambda", "0,1", "--method", "interp"]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn qkz_build_with_verify_passes() {
    let o = daha(&["qkz-build", "--k", "2", "--r", "2", "--s", "0", "--m", "2", "--l", "0", "--d", "2,2", "--verify"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 3);
    assert!(reports.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn numeric_output_is_deterministic() {
    let args = [
        "qkz-build", "--k", "2", "--r", "2", "--s", "0", "--m", "2", "--l", "0", "--d", "2,2", "--verify",
        "--samples", "5", "--seed", "7",
    ];
    let (a, b) = (daha(&args), daha(&args));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let seq = daha(&[&args[..], &["--parallelism", "1"]].concat());
    assert_eq!(a.stdout, seq.stdout);
}

#[test]
fn relations_report_all_pass() {
    let o = daha(&["relations", "--n", "3", "--deg", "2"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v.as_array().unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["jack", "--lambda", "1,x"][..],
        &["jack", "--n", "3", "--lambda", "1,0"],
        &["jack"],
        &["relations", "--n", "2", "--format", "latex"],
        &["specialize", "--lambda", "1,0", "--kappa", "1/0"],
        &["qkz-build", "--k", "2", "--r", "2", "--s", "0", "--m", "2", "--l", "0", "--d", "3,1"],
        &["t-action", "--lambda", "1,0", "--i", "2"],
        &["frobnicate"],
    ] {
        let o = daha(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn singular_check_reports_failure_with_one() {
    let ok = daha(&["singular-check", "--lambda", "1,0", "--kappa", "-2"]);
    assert_eq!(code(&ok), 0);
    let bad = daha(&["singular-check", "--lambda", "1,0", "--kappa", "-3"]);
    assert_eq!(code(&bad), 1);
    let v: Value = serde_json::from_str(&stdout(&bad)).unwrap();
    assert_eq!(v["singular"], false);
    assert_eq!(v["shifted_singular"], false);
}

#[test]
fn qkz_verify_reads_build_output_and_detects_mutation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    let p = path.to_str().unwrap();
    let build = daha(&["qkz-build", "--k", "2", "--r", "2", "--s", "0", "--m", "1", "--l", "1", "--d", "1,2", "--out", p]);
    assert_eq!(code(&build), 0);
    let f = TensorPoly::<BigRat>::from_json_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(f.to_json_value(), serde_json::from_str::<Value>(&std::fs::read_to_string(&path).unwrap()).unwrap());

    let o = daha(&["qkz-verify", "--input", p, "--kappa", "-3", "--samples", "3"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));

    let mut g = f.clone();
    let eps = f.profile.index_set()[0].clone();
    g.set(eps.clone(), f.component(&eps).neg()).unwrap();
    std::fs::write(&path, g.to_json_value().to_string()).unwrap();
    let o = daha(&["qkz-verify", "--input", p, "--kappa", "-3"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn memo_directory_is_populated_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let first = daha_env(&["shifted-jack", "--lambda", "1,0,1"], Some(dir.path()));
    assert_eq!(code(&first), 0);
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert!(!files.is_empty());
    let second = daha_env(&["shifted-jack", "--lambda", "1,0,1"], Some(dir.path()));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn singular_values_are_listed() {
    let o = daha(&["singular-values", "--n", "2", "--bound", "3", "--format", "text"]);
    assert_eq!(stdout(&o), "-2\n-2/3\n");
}
