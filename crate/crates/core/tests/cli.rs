mod common;

use std::process::{Command, Output};

use monores::io::resolution_from_json;

use common::*;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monores"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    fixture_path(name).to_string_lossy().into_owned()
}

#[test]
fn resolve_fixture_file() {
    let out = run(&["resolve", "--keep-input-order", &fixture("example_A.ideal")]);
    assert_eq!(out.status.code(), Some(0));
    let res = resolution_from_json(&stdout(&out)).unwrap();
    assert_eq!(res.betti(), [1, 6, 9, 4]);
    assert!(monores::compare::equivalent(
        &fixture_resolution("example_A"),
        &res
    ));
}

#[test]
fn resolve_koszul_pretty() {
    let out = run(&["resolve", "--format", "pretty", &fixture("koszul.ideal")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("betti: (1, 3, 3, 1)"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        ["resolve", "--format", "json", &fixture("msquared.ideal")],
        ["analyze", "--format", "pretty", &fixture("example_C.ideal")],
        ["scarf", "--format", "json", &fixture("example_B.ideal")],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}

#[test]
fn malformed_line_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.ideal");
    std::fs::write(&path, "x^2\n# fine\nx^\n").unwrap();
    let out = run(&["resolve", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(
        run(&["resolve", "/nonexistent/file.ideal"]).status.code(),
        Some(2)
    );
}

#[test]
fn too_many_generators_hits_the_cap() {
    let out = run(&["resolve", "--cap", "4", &fixture("example_A.ideal")]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&[
        "random-suite",
        "--seed",
        "1",
        "--n-max",
        "30",
        "--cap",
        "20",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn analyze_reports() {
    let out = run(&["analyze", "--keep-input-order", &fixture("example_C.ideal")]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["f2_entries_from_ideal"]["count"], 10);
    assert_eq!(v["f3_entries_from_ideal"]["count"], 4);
    assert_eq!(v["verdicts"]["f3_bound"], "pass");

    let out = run(&["analyze", &fixture("msquared.ideal")]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["generic"], false);
    assert!(!v["shared_degree_columns"].as_array().unwrap().is_empty());
    assert_eq!(v["rows_normalized"], false);

    let out = run(&["analyze", &fixture("nonprimary.ideal")]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["m_primary"], false);
    assert_eq!(v["verdicts"]["column_support"], "not-applicable");

    let out = run(&["analyze", "--format", "pretty", &fixture("msquared.ideal")]);
    assert!(stdout(&out).contains("NOT-NORMALIZED"));
}

#[test]
fn verify_accepts_json_and_rejects_corruption() {
    let out = run(&["verify", &fixture("example_B.json")]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = run(&["verify", "--format", "pretty", &fixture("example_J.ideal")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("exactness    ok"));

    let text = std::fs::read_to_string(fixture_path("koszul.json")).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    doc["f2"]["entries"][0][2] = serde_json::json!("1");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["complex_ok"], false);
}

#[test]
fn graph_commands() {
    let out = run(&["buch", "--format", "dot", "--ideal", "x, y, z"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 -- 2;"));
    let out = run(&["buch", &fixture("example_A.ideal")]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 9);
    let out = run(&["scarf", "--ideal", "x, y, z"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["faces"].as_array().unwrap().len(), 7);
    let out = run(&["generic", &fixture("msquared.ideal")]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["generic"], false);
    assert_eq!(
        run(&["resolve", "--format", "dot", "--ideal", "x"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn random_suite_runs_and_replays() {
    let out = run(&["random-suite", "--seed", "42", "--count", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[
        "random-suite",
        "--seed",
        "42",
        "--count",
        "40",
        "--sequential",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["instances"], 40);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    let parallel = run(&["random-suite", "--seed", "42", "--count", "40"]);
    assert_eq!(parallel.stdout, out.stdout);
    assert_eq!(
        run(&["random-suite", "--count", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn dumped_ideal_replays_to_the_same_report() {
    use monores::batch::{
        dump_failures, instance_ideal, InstanceFailure, SuiteConfig, SuiteSummary,
    };
    let cfg = SuiteConfig::default();
    let ideal = instance_ideal(&cfg, 3).unwrap();
    let summary = SuiteSummary {
        instances: 1,
        generic: 0,
        skipped: 0,
        failures: vec![InstanceFailure {
            index: 3,
            seed: 0,
            ideal: ideal.to_string(),
            failed: vec![String::from("example")],
        }],
    };
    let dir = tempfile::tempdir().unwrap();
    let written = dump_failures(&cfg, &summary, dir.path()).unwrap();
    assert_eq!(written.len(), 1);
    let replay =
        monores::io::parse_ideal(&std::fs::read_to_string(&written[0]).unwrap(), true).unwrap();
    assert_eq!(replay, ideal);
    let path = written[0].to_str().unwrap();
    let first = run(&["analyze", "--keep-input-order", path]);
    let direct = monores::analysis::analyze(&monores::resolve(&ideal).unwrap());
    assert_eq!(stdout(&first), monores::io::to_json(&direct));
    assert_eq!(
        run(&["analyze", "--keep-input-order", path]).stdout,
        first.stdout
    );
}
