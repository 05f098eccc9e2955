use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkm-modular")).args(args).env_remove("GKM_CACHE_DIR").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn without_time(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("wall_time_s");
    v
}

#[test]
fn csf_in_e_basis() {
    let out = run(&["--format", "text", "csf", "2,3,3", "--basis", "e"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "q^0*(e[3]) + q^1*(e[3] + e[2,1]) + q^2*(e[3])");
}

#[test]
fn betti_numerator() {
    let out = run(&["betti", "2,3,3", "--side", "y"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["numerator"], serde_json::json!([1, 4, 1]));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["csf", "2,1"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--thm", "1.1", "--sweep", "9"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--thm", "9.9", "2,3,3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn corrupted_cache_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert!(run(&["--cache-dir", d, "betti", "2,3,3"]).status.success());
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "not json").unwrap();
    }
    let out = run(&["--cache-dir", d, "betti", "2,3,3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sweep_passes() {
    let out = run(&["check", "--thm", "1.1", "--sweep", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], Value::Bool(true));
    assert_eq!(v["items"].as_array().unwrap().len(), 5);
}

#[test]
fn reports_are_deterministic() {
    let args = ["check", "--thm", "all", "--sweep", "3"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(without_time(json(&a)), without_time(json(&b)));
}

#[test]
fn cache_does_not_change_reports() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["--cache-dir", d, "check", "--thm", "5.1", "--sweep", "3"];
    let cold = run(&args);
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
    let warm = run(&args);
    let plain = run(&args[2..]);
    assert!(cold.status.success() && warm.status.success());
    assert_eq!(without_time(json(&cold)), without_time(json(&warm)));
    assert_eq!(without_time(json(&cold)), without_time(json(&plain)));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["check", "--thm", "corollary", "2,3,3", "--d", "2", "--d0", "1", "--output", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let file: Value = serde_json::from_str(&std::fs::read_to_string(Path::new(&path)).unwrap()).unwrap();
    assert_eq!(without_time(file), without_time(json(&out)));
}
