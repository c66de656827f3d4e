use std::path::Path;
use std::process::{Command, Output};

use diagsplit::specht::CSV_HEADER;
use serde_json::Value;

fn diagsplit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diagsplit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = diagsplit(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json report")
}

const NON_INVOLUTIVE: &str = r#"{
  "field": {"kind": "rationals"}, "dim": 2, "basis": ["1", "x"], "unit": [1, 0],
  "structconsts": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1]],
  "involution": [[1, 0], [0, 2]], "trace": [1, 1]
}"#;

#[test]
fn dims_agree_three_ways() {
    let v = report(&["dims", "--kind", "abrauer", "--n", "3"]);
    assert_eq!(v["dim"], 15);
    assert_eq!(v["closedForm"], 15);
    assert_eq!(v["sumOfLayers"], 15);
    assert_eq!(v["passed"], true);
    let w = report(&[
        "dims", "--kind", "walled", "--r", "2", "--t", "2", "--field", "fp:5",
    ]);
    assert_eq!(w["dim"], 24);
    assert_eq!(w["field"]["kind"], "prime-field");
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = [
        "verify-split-pair",
        "--kind",
        "walled",
        "--r",
        "2",
        "--t",
        "1",
        "--field",
        "fp:5",
        "--seed",
        "7",
    ];
    let (a, b) = (diagsplit(&args), diagsplit(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["command"], "verify-split-pair");
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
}

#[test]
fn replay_reproduces_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let second = dir.path().join("second.json");
    let args = [
        "verify-inflation",
        "--kind",
        "cyclotomic",
        "--n",
        "2",
        "--r",
        "2",
        "--deltas",
        "1,0",
        "--seed",
        "3",
    ];
    let out = diagsplit(&[&args[..], &["--out", first.to_str().unwrap()]].concat());
    assert!(out.status.success());
    let out = diagsplit(&[
        "--replay",
        first.to_str().unwrap(),
        "--out",
        second.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(
        std::fs::read(&first).unwrap(),
        std::fs::read(&second).unwrap()
    );
}

#[test]
fn csv_table_has_the_fixed_header() {
    let out = diagsplit(&[
        "dominance-table",
        "--r",
        "2",
        "--t",
        "1",
        "--field",
        "fp:5",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(
        rows.headers().unwrap().iter().collect::<Vec<_>>(),
        CSV_HEADER
    );
    let records: Vec<_> = rows.records().collect::<Result<_, _>>().unwrap();
    assert!(!records.is_empty());
    assert!(records.iter().all(|r| &r[10] == "false"));
}

#[test]
fn csv_is_rejected_elsewhere() {
    let out = diagsplit(&["dims", "--kind", "abrauer", "--n", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failed_checks_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, NON_INVOLUTIVE).unwrap();
    let out = diagsplit(&[
        "validate-input-algebra",
        "--input-algebra",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let failed: Vec<_> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .collect();
    assert!(failed.iter().all(|c| c.get("witness").is_some()));
}

#[test]
fn excluded_configurations_exit_with_two() {
    let out = diagsplit(&[
        "verify-split-pair",
        "--kind",
        "abrauer",
        "--n",
        "2",
        "--delta",
        "0",
        "--l",
        "1",
        "--delta-zero-mode",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("even n"));
    let out = diagsplit(&["dominance-table", "--r", "2", "--t", "2", "--field", "fp:2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = diagsplit(&[
        "dims",
        "--kind",
        "abrauer",
        "--n",
        "5",
        "--input-algebra",
        "dual",
    ]);
    assert_eq!(out.status.code(), Some(2), "dimension above the cap");
}

#[test]
fn hom_ext_agrees_on_both_sides() {
    let v = report(&["hom-ext", "--kind", "walled", "--r", "2", "--t", "2"]);
    assert_eq!(v["passed"], true);
    // Outer products of Specht modules: 2 x 2 labels at l = 0, one at l = 1.
    let rows: Vec<usize> = v["layers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["rows"].as_array().unwrap().len())
        .collect();
    assert_eq!(rows, [16, 1, 1]);
}

#[test]
fn out_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dims.json");
    let out = diagsplit(&[
        "dims",
        "--kind",
        "abrauer",
        "--n",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert!(Path::new(&path).exists());
}
