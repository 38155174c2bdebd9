use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn hermitian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hermitian"))
        .args(args)
        .env_remove("HERMITIAN_MAX_CODEWORDS")
        .env_remove("HERMITIAN_MAX_SUBSETS")
        .env_remove("HERMITIAN_WORKERS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn params_from_spec_string_and_flags() {
    let a = hermitian(&["params", "--spec", "q=7 m=53"]);
    assert_eq!(a.status.code(), Some(0));
    let v = json(&a);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["result"]["d"], 7);
    assert_eq!(v["result"]["a"], 3);
    assert_eq!(v["result"]["dual_index"], 330);
    assert_eq!(v["result"]["dual_designed_distance"], 14);
    let b = hermitian(&["params", "--q", "7", "--d", "7", "--a", "3"]);
    assert_eq!(json(&b)["result"]["k"], v["result"]["k"]);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(hermitian(&["params", "--q", "6", "--m", "3"]).status.code(), Some(2));
    assert_eq!(hermitian(&["params", "--spec", "q=3 m=999"]).status.code(), Some(2));
    assert_eq!(hermitian(&["nonsense"]).status.code(), Some(2));
    assert_eq!(hermitian(&["params", "--q", "3"]).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_3() {
    let out = hermitian(&["minwords", "--q", "3", "--d", "3", "--a", "2", "--exhaustive", "--max-subsets", "10"]);
    assert_eq!(out.status.code(), Some(3));
    let env = Command::new(env!("CARGO_BIN_EXE_hermitian"))
        .args(["minwords", "--q", "3", "--d", "3", "--a", "2", "--exhaustive"])
        .env("HERMITIAN_MAX_SUBSETS", "10")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(3));
}

#[test]
fn report_goes_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = hermitian(&["verify", "lines", "--q", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "verify lines");
    assert_eq!(v["result"]["lines"], 91);
}

#[test]
fn emitted_supports_match_the_count() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("supports.txt");
    let out = hermitian(&["minwords", "--q", "3", "--d", "3", "--a", "2", "--emit-supports", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 72);
    assert!(text.lines().all(|l| l.split_whitespace().count() == 6));
}

#[test]
fn improve_with_a_removal_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("H.txt");
    fs::write(&path, "0 1 2\n").unwrap();
    let out = hermitian(&["improve", "--q", "3", "--d", "2", "--a", "1", "--H", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["H_size"], 3);
    assert_eq!(v["result"]["is_improving"], false);
    assert_eq!(v["result"]["consistent"], true);
    let minimal = json(&hermitian(&["improve", "--q", "3", "--d", "2", "--a", "1"]));
    assert_eq!(minimal["result"]["new_length"], 18);
}

#[test]
fn matrix_export_parses_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let out = hermitian(&["matrix", "--q", "2", "--m", "3", "--matrix-out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let f = std::sync::Arc::new(hermitian_codes::gf::Field::new(2, 2).unwrap());
    let code = hermitian_codes::codes::LinearCode::parse_text(&fs::read_to_string(&path).unwrap(), f).unwrap();
    assert_eq!((code.length(), code.dimension()), (8, 3));
}

#[test]
fn worker_count_does_not_change_output() {
    let one = hermitian(&["verify", "oracle", "--q", "3", "--workers", "1", "--seed", "7"]);
    let many = hermitian(&["verify", "oracle", "--q", "3", "--workers", "3", "--seed", "7"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
}
