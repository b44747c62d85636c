use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn oddcut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddcut")).args(args).output().expect("runs")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn generate_ladder_matches_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = oddcut(&["generate", "ladder", "4", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    for name in ["ladder-4.txt", "ladder-4.json"] {
        let got = std::fs::read(dir.path().join(name)).unwrap();
        assert_eq!(got, std::fs::read(fixture(name)).unwrap(), "{name}");
    }
}

#[test]
fn find_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let graph = fixture("ladder-4.txt");
    let graph = graph.to_str().unwrap();
    let out = oddcut(&["--json", "find", graph, "--edges", "7,8", "--certify"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["status"], "circuit");
    let path = write(dir.path(), "r.json", &String::from_utf8(out.stdout).unwrap());
    let back = oddcut(&["verify", graph, &path, "--edges", "7,8"]);
    assert_eq!(back.status.code(), Some(0));
}

#[test]
fn three_rungs_give_a_certificate_and_oracle_verdict() {
    let graph = fixture("ladder-4.txt");
    let out = oddcut(&["--json", "find", graph.to_str().unwrap(), "--edges", "6,7,8", "--oracle-fallback"]);
    assert_eq!(out.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["status"], "odd-cut");
    assert_eq!(report["result"]["size"], 3);
    assert_eq!(report["result"]["odd"], true);
    assert_eq!(report["verdicts"]["oracle_feasible"], false);
    assert_eq!(report["oracle"]["method"], "oracle");
}

#[test]
fn check_reports_universality() {
    let graph = fixture("ladder-4.txt");
    let graph = graph.to_str().unwrap();
    assert_eq!(oddcut(&["check", graph, "-k", "3"]).status.code(), Some(2));
    let ok = oddcut(&["check", graph, "-k", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("universal for k = 2"));
}

#[test]
fn oracle_on_a_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write(dir.path(), "c6.txt", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let out = oddcut(&["--json", "oracle", &c6, "--edges", "0,2,4"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["method"], "oracle");
    assert_eq!(report["result"]["edge_walk"].as_array().unwrap().len(), 6);
}

#[test]
fn errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "3 2\n0 1\n1 x\n");
    let out = oddcut(&["check", &bad, "-k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let graph = fixture("ladder-4.txt");
    let out = oddcut(&["find", graph.to_str().unwrap(), "--edges", "10"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(oddcut(&["generate", "random", "6", "8"]).status.code(), Some(1));
}

#[test]
fn seeded_generation_is_deterministic() {
    let a = oddcut(&["--seed", "11", "generate", "random", "9", "15", "--threshold", "2"]);
    let b = oddcut(&["--seed", "11", "generate", "random", "9", "15", "--threshold", "2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
