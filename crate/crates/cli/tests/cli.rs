use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn dbracket(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dbracket"))
        .args(args)
        .env_remove("DB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is json")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn dims(args: &[&str]) -> (u64, u64, u64) {
    let mut full = vec!["info"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--format", "json"]);
    let o = dbracket(&full);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    (
        v["dim_levi"].as_u64().unwrap(),
        v["dim_radical"].as_u64().unwrap(),
        v["dim_center"].as_u64().unwrap(),
    )
}

#[test]
fn info_reports_levi_radical_center() {
    assert_eq!(dims(&["5", "6", "2"]), (3, 27, 12));
    assert_eq!(dims(&["7", "7", "5"]), (24, 25, 4));

    let o = dbracket(&["info", "5", "6", "2"]);
    let text = stdout(&o);
    assert!(text.contains("levi_factor  sl(2)"), "{text}");
    assert!(text.contains("dim_total    30"), "{text}");
}

#[test]
fn info_rank_zero_is_abelian() {
    let o = dbracket(&["info", "2", "2", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["is_abelian"], true);
    assert_eq!(v["dim_center"], 4);
    assert_eq!(v["dim_levi"], 0);
}

#[test]
fn classify_exit_codes_and_reasons() {
    let o = dbracket(&["classify", "5", "6", "2", "6", "5", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ISOMORPHIC"));
    assert!(stdout(&o).contains("flip"));

    let o = dbracket(&["classify", "5", "6", "2", "5", "6", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("NOT ISOMORPHIC"));
    assert!(stdout(&o).contains("levi dim 3 vs 8"));

    let o = dbracket(&[
        "classify", "5", "6", "2", "10", "3", "2", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["isomorphic"], false);
    assert_eq!(v["separator"]["invariant"], "center_dimension");
    assert_eq!(v["separator"]["values"], serde_json::json!([12, 8]));

    let o = dbracket(&["classify", "1", "1", "0", "1", "1", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("abelian rule"));
}

#[test]
fn classify_witness_matrix_in_json() {
    let o = dbracket(&["classify", "1", "2", "1", "2", "1", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let rows = v["witness"]["matrix"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for row in rows {
        let nonzero = row
            .as_array()
            .unwrap()
            .iter()
            .filter(|x| *x != "0/1")
            .count();
        assert_eq!(nonzero, 1);
    }
}

#[test]
fn constants_listing() {
    for args in [["1", "1", "1"], ["2", "2", "0"]] {
        let o = dbracket(&["constants", args[0], args[1], args[2], "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(json(&o)["brackets"], serde_json::json!([]));
    }
    let o = dbracket(&["constants", "2", "2", "1", "--format", "json"]);
    let v = json(&o);
    let first = &v["brackets"][0];
    assert_eq!(
        (first["left"].as_str(), first["right"].as_str()),
        (Some("F_1_1"), Some("F_1_2"))
    );
    assert_eq!(
        first["terms"],
        serde_json::json!([{ "basis": "F_1_2", "coeff": "1/1" }])
    );

    let text = stdout(&dbracket(&["constants", "2", "2", "1"]));
    assert!(text.contains("[F_1_1, F_1_2] = 1/1 F_1_2"), "{text}");
}

#[test]
fn constants_json_round_trips_through_verify() {
    let o = dbracket(&["constants", "3", "2", "2", "--format", "json"]);
    let parsed = dbracket::DerivedAlgebra::from_json(&stdout(&o)).unwrap();
    assert_eq!(
        parsed,
        dbracket::build_algebra(dbracket::SuperShape::new(3, 2).unwrap(), 2).unwrap()
    );

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let v = dbracket(&["verify", "--table", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
}

#[test]
fn verify_small_sweep_passes() {
    let o = dbracket(&["verify", "--max-dim", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(!text.contains("FAIL"), "{text}");
    assert!(text.contains("classification"));

    let o = dbracket(&["verify", "--max-dim", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["families"].as_array().unwrap().len(), 11);
}

#[test]
fn verify_reports_corrupted_table() {
    let o = dbracket(&["verify", "--table", &fixture("corrupted_table.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("Jacobi") || err.contains("differs"), "{err}");
}

#[test]
fn seed_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_dbracket"))
        .args(["verify", "--max-dim", "1"])
        .env("DB_SEED", "17")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_dbracket"))
        .args(["verify", "--max-dim", "1"])
        .env("DB_SEED", "seventeen")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invalid_arguments_exit_two() {
    for args in [
        vec!["info", "2", "3", "4"],
        vec!["info", "0", "3", "0"],
        vec!["info", "2", "x", "1"],
        vec!["info", "2", "3"],
        vec!["classify", "1", "1", "1", "1", "1"],
        vec!["classify", "1", "1", "2", "1", "1", "1"],
        vec!["constants", "2", "2", "1", "--format", "yaml"],
        vec!["verify", "--max-dim", "0"],
        vec!["verify", "--table", "/nonexistent/table.json"],
        vec!["frobnicate"],
        vec![],
    ] {
        let o = dbracket(&args);
        assert_eq!(o.status.code(), Some(2), "args {args:?}");
        assert!(o.stdout.is_empty(), "args {args:?}");
        assert!(!o.stderr.is_empty(), "args {args:?}");
    }
}
