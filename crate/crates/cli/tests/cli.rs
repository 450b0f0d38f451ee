use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;
use specht_core::parse::{parse_filtration_json, parse_multipartition, parse_tableau_json};

fn specht(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = specht(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn rows(args: &[&str]) -> Vec<Value> {
    stdout(args)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn enumerate_rank_one() {
    let r = rows(&["enumerate", "--n", "1"]);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0]["deg"], 0);
    assert_eq!(r[0]["shape"], serde_json::json!([[1]]));
}

#[test]
fn enumerate_level_two() {
    let r = rows(&["enumerate", "--n", "2", "--level", "2"]);
    assert_eq!(r.len(), 6);
    let shapes: BTreeSet<String> = r.iter().map(|x| x["shape"].to_string()).collect();
    assert_eq!(shapes.len(), 5);
}

#[test]
fn enumerate_range_is_ordered_by_size() {
    let r = rows(&["enumerate", "--n-max", "3", "--e", "2"]);
    let sizes: Vec<usize> = r
        .iter()
        .map(|x| x["res"].as_array().unwrap().len())
        .collect();
    assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(sizes.first(), Some(&0));
    assert_eq!(r.len(), 1 + 1 + 2 + 4);
}

#[test]
fn enumerate_rows_round_trip() {
    for row in rows(&["enumerate", "--n", "3", "--charge", "1,0", "--e", "3"]) {
        let mu = parse_multipartition(&row["shape"].to_string()).unwrap();
        let t = parse_tableau_json(&row["tableau"].to_string()).unwrap();
        assert_eq!(t.shape(), &mu);
        assert!(t.is_standard());
        let again = serde_json::to_value(&t).unwrap();
        assert_eq!(again, row["tableau"]);
    }
}

#[test]
fn csv_output() {
    let text = stdout(&["enumerate", "--n", "2", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let records: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 2);
    assert_eq!(&records[0][1], "(2)");
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--n-max", "4", "--level", "2", "--e", "2"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["verify", "--suite", "combinatorics", "--e", "3", "--n-max", "3"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn out_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("specht-cli-{}.jsonl", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["enumerate", "--n", "2", "--out", p]), "");
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, stdout(&["enumerate", "--n", "2"]));
}

fn branch(args: &[&str]) -> Value {
    let mut full = vec!["branch"];
    full.extend_from_slice(args);
    let text = stdout(&full);
    let f = parse_filtration_json(&text).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(f.layers.len(), v["layers"].as_array().unwrap().len());
    v
}

#[test]
fn branch_from_empty() {
    let v = branch(&["--shape", "-", "--residue", "0"]);
    let layers = v["layers"].as_array().unwrap();
    assert_eq!(layers.len(), 1);
    assert_eq!(layers[0]["shift"], 0);
}

#[test]
fn branch_two_layers() {
    let v = branch(&["--shape", "1", "--e", "2", "--residue", "1"]);
    let shifts: Vec<i64> = v["layers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["shift"].as_i64().unwrap())
        .collect();
    assert_eq!(shifts, [1, 0]);
    assert_eq!(v["graded_dim"], serde_json::json!([[0, 1], [2, 1]]));
}

#[test]
fn branch_without_addable_nodes() {
    let v = branch(&["--shape", "1", "--e", "2", "--residue", "0"]);
    assert!(v["layers"].as_array().unwrap().is_empty());
    assert_eq!(v["graded_dim"], serde_json::json!([]));
}

#[test]
fn branch_dual() {
    let v = branch(&["--shape", "1|-", "--charge", "3,0", "--residue", "0", "--dual"]);
    assert_eq!(v["dual"], true);
    assert_eq!(v["layers"].as_array().unwrap().len(), 1);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["verify", "--suite", "unknown"],
        vec!["branch", "--shape", "2,3", "--residue", "0"],
        vec!["enumerate", "--n", "1", "--level", "2", "--charge", "0"],
        vec!["enumerate"],
        vec!["enumerate", "--n", "1", "--e", "1"],
        vec!["verify", "--suite", "klr", "--n", "1"],
        vec!["verify", "--suite", "strong", "--mode", "prime", "--p", "2"],
        vec!["verify", "--suite", "strong", "--n", "3", "--charge", "1,0"],
        vec!["verify", "--suite", "klr", "--mode", "prime", "--p", "4", "--n", "1"],
        vec!["verify", "--suite", "counting", "--format", "csv"],
        vec!["frobnicate"],
    ] {
        let out = specht(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_reports_follow_the_schema() {
    let text = stdout(&["verify", "--suite", "strong", "--n", "3"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["suite"], "strong");
    assert!(v["checked"].as_u64().unwrap() > 0);
    assert!(v["violations"].as_array().unwrap().is_empty());
    assert_eq!(v["params"]["xi"], "2");
    let report: specht_core::Report = serde_json::from_str(&text).unwrap();
    assert!(report.passed());
}

#[test]
fn verify_combinatorics_default_rank() {
    let out = specht(&["verify", "--suite", "combinatorics", "--e", "2", "--charge", "3,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["params"]["n_max"], 6);
}

#[test]
fn verify_klr_over_f3() {
    let out = specht(&["verify", "--suite", "klr", "--mode", "prime", "--p", "3", "--charge", "0,1", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
}
