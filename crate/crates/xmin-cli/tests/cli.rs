//! End-to-end runs of the `xmin` binary.

use std::process::{Command, Output};

fn xmin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xmin")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn fixed_points_json_has_fifteen_records() {
    let o = xmin(&["fixed-points", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let pts = v.as_array().unwrap();
    assert_eq!(pts.len(), 15);
    assert!(pts.iter().any(|p| p.to_string().contains("357")));
}

#[test]
fn poincare_for_ten_one() {
    let o = xmin(&["poincare", "--ops", "10,1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("1,1,2,2,3,2,2,1,1"));
}

#[test]
fn poincare_accepts_negative_pairs() {
    let o = xmin(&["poincare", "--ops", "-10,-1", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!([1, 1, 2, 2, 3, 2, 2, 1, 1]));
}

#[test]
fn irregular_pair_exits_two_and_names_the_character() {
    let o = xmin(&["bb", "--ops", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("(1,-1)"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(xmin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(xmin(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(xmin(&["bb", "--ops", "ten"]).status.code(), Some(2));
    assert_eq!(xmin(&["--help"]).status.code(), Some(0));
}

#[test]
fn smoothness_and_orbits() {
    let o = xmin(&["smoothness"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("smooth at every fixed point"));
    let o = xmin(&["orbits"]);
    assert!(stdout(&o).contains("orbits: 3"));
}

#[test]
fn verify_exits_zero_with_known_discrepancies_only() {
    let o = xmin(&["verify", "torus", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["unexpected_discrepancies"], 0);
    let known = v["checks"].as_array().unwrap().iter().filter(|c| c["known"] == true).count();
    assert!(known > 0);
}

#[test]
fn same_seed_gives_identical_reports() {
    let args = ["verify", "all", "--json", "--seed", "17", "--samples", "5"];
    let a = xmin(&args);
    let b = xmin(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 17);
    assert!(v["samples"].as_object().unwrap().values().all(|n| n == 5));
}

#[test]
fn report_writes_under_the_output_directory() {
    let dir = std::env::temp_dir().join(format!("xmin-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_xmin"))
        .args(["report", "--out", "report.json", "--samples", "3"])
        .env("XMIN_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(dir.join("report.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v["checks"].as_array().unwrap().len() > 100);
    std::fs::remove_dir_all(&dir).unwrap();
}
