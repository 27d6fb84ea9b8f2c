use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn nashindex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nashindex")).args(args).output().expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_nashindex"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn umbrella() -> String {
    data("umbrella.prob").display().to_string()
}

#[test]
fn index_of_umbrella() {
    let o = nashindex(&["index", &umbrella()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "index = 5");
}

#[test]
fn json_report_schema() {
    let o = nashindex(&["index", "--json", &umbrella()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let obj = v.as_object().unwrap();
    let keys: Vec<&str> = obj.keys().map(|k| k.as_str()).collect();
    for k in ["schema", "index", "chi", "sign_exponent", "twist_bound", "homology_dims", "nash_ideal_size", "elapsed_ms"] {
        assert!(keys.contains(&k), "missing {k}");
    }
    assert_eq!(obj.len(), 8);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["index"], 5);
    assert_eq!(v["sign_exponent"], 2);
    assert_eq!(v["chi"], 5);
    let dims = v["homology_dims"].as_object().unwrap();
    let sum: i64 = dims
        .iter()
        .map(|(k, d)| {
            let k: usize = k.parse().unwrap();
            let d = d.as_i64().unwrap();
            if k.is_multiple_of(2) { d } else { -d }
        })
        .sum();
    assert_eq!(sum, 5);
    assert_eq!(v["twist_bound"], 2);
    assert_eq!(v["nash_ideal_size"], 7);
    assert_eq!(v["homology_dims"]["2"], 5);
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn structured_output_is_deterministic() {
    let run = || {
        let o = nashindex(&["index", "--json", &umbrella()]);
        let mut v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn milnor_and_check() {
    let o = nashindex(&["milnor", &data("morse.prob").display().to_string()]);
    assert_eq!(stdout(&o).trim(), "mu = 1");
    let o = with_stdin(&["milnor"], "ring: x, y, z\nfunction: x^2 + y^2 + z^2\n");
    assert_eq!(stdout(&o).trim(), "mu = 1");
    let o = nashindex(&["check", "--json", &umbrella()]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["isolated"], true);
}

#[test]
fn branch_count_oracle() {
    let o = nashindex(&["oracle", "branch-count", "--linear", "x + 2*z", &umbrella()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "count = 5");
    let o = nashindex(&["oracle", "branch-count", &umbrella()]);
    assert_eq!(stdout(&o).trim(), "count = 5");
}

#[test]
fn exit_codes() {
    let o = nashindex(&["index", &data("nonisolated.prob").display().to_string()]);
    assert_eq!(o.status.code(), Some(2));
    let o = nashindex(&["index", "--work-limit", "10", &umbrella()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("work limit"));
    let o = with_stdin(&["index"], "hypersurface: y^2\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing ring declaration"));
    let o = nashindex(&["index", "/nonexistent/problem"]);
    assert_eq!(o.status.code(), Some(1));
    let o = nashindex(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(1));
    let o = nashindex(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn bound_override() {
    let o = nashindex(&["index", "--json", "--bound-override", "3", &umbrella()]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["twist_bound"], 3);
    assert_eq!(v["index"], 5);
}

#[test]
fn force_skips_the_zero_check() {
    let o = nashindex(&["index", "--force", &data("nonisolated.prob").display().to_string()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&o.stderr).contains("isolated zero"));
}
