//! Black-box tests of the rpsdist binary.

use std::fs;
use std::process::{Command, Output};

const SAMPLE: &str = r#"{
    "frame": ["a", "b", "c"],
    "pmfs": [
        {"name": "P1", "assignments": [
            {"event": ["a"], "mass": 0.4},
            {"event": ["a", "c"], "mass": 0.3},
            {"event": ["c", "a"], "mass": 0.3}
        ]},
        {"name": "P2", "assignments": [
            {"event": ["b"], "mass": 0.4},
            {"event": ["a", "c"], "mass": 0.1},
            {"event": ["a", "b", "c"], "mass": 0.15},
            {"event": ["b", "c", "a"], "mass": 0.35}
        ]}
    ]
}"#;

fn rpsdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rpsdist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn dist_known_value_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pmfs.json");
    fs::write(&path, SAMPLE).unwrap();

    let out = rpsdist(&[
        "dist",
        path.to_str().unwrap(),
        "P1",
        "P2",
        "--universe",
        "full-pes",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((json["value"].as_f64().unwrap() - 0.6292).abs() < 5e-4);
    assert_eq!(json["corrected"], serde_json::Value::Bool(true));
    assert_eq!(json["universe_size"], serde_json::json!(15));
    assert!((json["lambda_min"].as_f64().unwrap() + 0.0167).abs() < 5e-4);

    let out = rpsdist(&[
        "dist",
        path.to_str().unwrap(),
        "P1",
        "P2",
        "--correction",
        "never",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let body = stdout(&out);
    let value: f64 = body
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!((value - 0.6305).abs() < 5e-4);
}

#[test]
fn dist_unknown_name_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pmfs.json");
    fs::write(&path, SAMPLE).unwrap();
    let out = rpsdist(&["dist", path.to_str().unwrap(), "P1", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nope"));
}

#[test]
fn dist_invalid_masses_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(
        &path,
        r#"{"frame": ["a"], "pmfs": [
            {"name": "P", "assignments": [{"event": ["a"], "mass": 0.4}]},
            {"name": "Q", "assignments": [{"event": ["a"], "mass": 1.0}]}
        ]}"#,
    )
    .unwrap();
    let out = rpsdist(&["dist", path.to_str().unwrap(), "P", "Q"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn weights_output() {
    let out = rpsdist(&["weights", "--n", "4", "--orn", "0.7"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let w = json["weights"].as_array().unwrap();
    let expect = [0.4614, 0.2756, 0.1647, 0.0984];
    for (a, b) in w.iter().zip(expect) {
        assert!((a.as_f64().unwrap() - b).abs() < 5e-4);
    }

    assert!((json["achieved_orness"].as_f64().unwrap() - 0.7).abs() < 1e-9);

    let out = rpsdist(&["weights", "--n", "3", "--orn", "0", "--format", "csv"]);
    assert!(out.status.success());
    let body = stdout(&out);
    assert!(body.contains("3,1.000000"));
    assert!(body.ends_with("orness,0.000000\n"));

    let out = rpsdist(&["weights", "--n", "3", "--orn", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn matrix_full_pes() {
    let out = rpsdist(&["matrix", "--full-pes", "2", "--kind", "jaccard"]);
    assert!(out.status.success());
    let body = stdout(&out);
    assert_eq!(
        body.lines().next().unwrap(),
        "event,(τ₁),(τ₂),(τ₁τ₂),(τ₂τ₁)"
    );
    assert_eq!(body.lines().count(), 5);

    // diagnostics go to stderr so stdout stays a clean CSV
    assert!(String::from_utf8_lossy(&out.stderr).contains("lambda_min,"));

    // the short kind names work too
    let out = rpsdist(&["matrix", "--full-pes", "3", "--kind", "cd"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 16);
    let lambda: f64 = String::from_utf8_lossy(&out.stderr)
        .trim()
        .strip_prefix("lambda_min,")
        .unwrap()
        .parse()
        .unwrap();
    assert!((lambda + 0.0167).abs() < 5e-4);

    // 7-element frames span 13699 events; refused without an override
    let out = rpsdist(&["matrix", "--full-pes", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("13699"));
    let out = rpsdist(&["matrix", "--full-pes", "8", "--allow-large"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn matrix_from_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pmfs.json");
    fs::write(&path, SAMPLE).unwrap();
    let out_path = dir.path().join("matrix.csv");
    let out = rpsdist(&[
        "matrix",
        "--input",
        path.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let csv = fs::read_to_string(&out_path).unwrap();
    // focal union of the sample document spans 6 events
    assert_eq!(csv.lines().count(), 7);
    assert!(csv.lines().next().unwrap().starts_with("event,(a),(b)"));
}

#[test]
fn reproduce_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = rpsdist(&[
        "reproduce",
        "--tables",
        "table3,table6",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let body = stdout(&out);
    assert!(body.contains("table3: pass"));
    assert!(body.contains("table6: pass"));
    let report = fs::read_to_string(dir.path().join("table3.csv")).unwrap();
    assert!(report.starts_with("table,label,expected,computed,pass"));
    assert!(fs::metadata(dir.path().join("table6.csv")).is_ok());

    let out = rpsdist(&["reproduce", "--tables", "table99"]);
    assert_eq!(out.status.code(), Some(2));
}
