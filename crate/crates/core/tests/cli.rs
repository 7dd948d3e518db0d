use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn gqs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gqs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_config(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn help_lists_every_command() {
    let out = gqs(&["--help"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for cmd in ["scales", "levels", "grid", "design", "report"] {
        assert!(text.contains(cmd), "missing {cmd} in help:\n{text}");
    }
}

#[test]
fn report_goes_to_stdout_without_a_path() {
    let out = gqs(&["report"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    let pairs = json["pairs"]["value"].as_f64().unwrap();
    assert!((pairs - 1.05).abs() < 1e-9, "pairs = {pairs}");
    assert!(String::from_utf8_lossy(&out.stderr).contains("finished"));
}

#[test]
fn levels_from_a_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "levels.json", r#"{"quantum_numbers": [[0, 0], [2, 1]]}"#);
    let out_path = dir.path().join("levels.json.out");
    let out = gqs(&["levels", "--config", &cfg, "--out", out_path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let json: Value = serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(json["levels"].as_array().map(Vec::len), Some(2), "{json}");
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "grid.json", r#"{"quantum_numbers": [[0, 1]], "grid_resolution": [30, 20]}"#);
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let out = gqs(&["grid", "--config", &cfg, "--out", p.to_str().unwrap()]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let (a, b) = (fs::read(a).unwrap(), fs::read(b).unwrap());
    assert_eq!(a, b);
    assert_eq!(String::from_utf8(a).unwrap().lines().count(), 2 + 30 * 20);
}

#[test]
fn empty_state_list_fails_without_writing() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "empty.json", r#"{"quantum_numbers": []}"#);
    let target = dir.path().join("never.csv");
    let out = gqs(&["grid", "--config", &cfg, "--out", target.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("quantum_numbers"));
    assert!(!target.exists());
}

#[test]
fn unknown_keys_are_reported_together() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "bad.json", r#"{"zeta": 1, "beam": {"speed": 5}, "alpha": 2}"#);
    let out = gqs(&["report", "--config", &cfg]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("alpha, beam.speed, zeta"), "{err}");
}

#[test]
fn conflicting_command_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "conflict.json", r#"{"command": "grid"}"#);
    let out = gqs(&["report", "--config", &cfg]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("conflicts"));
}

#[test]
fn unknown_subcommand_fails() {
    let out = gqs(&["bounce"]);
    assert!(!out.status.success());
}

#[test]
fn missing_config_file_names_the_path() {
    let out = gqs(&["scales", "--config", "/nonexistent/gqs.json"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent/gqs.json"));
}

#[test]
fn vertical_scales() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "v.json", r#"{"g_mode": "vertical"}"#);
    let out = gqs(&["scales", "--config", &cfg]);
    assert!(out.status.success());
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    let l0 = json["l0"]["value"].as_f64().unwrap();
    assert!((l0 / 5.8686 - 1.0).abs() < 1e-4, "l0 = {l0}");
}
