use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_wpn-lab"));
    c.env_remove("WPNLAB_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

fn validate(schema: &str, doc: &Value) {
    let text = std::fs::read_to_string(schema_dir().join(schema)).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{doc:#}");
}

fn json_of(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn wpn_of_c6() {
    let o = run(&["wpn", "EhEG"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn graph_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c6.g6");
    std::fs::write(&path, "EhEG\n").unwrap();
    let o = run(&["wpn", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn exit_statuses() {
    assert_eq!(run(&["certify", "--theorem", "c2l:5", "EhEG"]).status.code(), Some(2));
    assert_eq!(run(&["wpn", "not a graph"]).status.code(), Some(2));
    assert_eq!(run(&["bound", "--n", "8", "--l", "3"]).status.code(), Some(2));
    assert_eq!(run(&["--format", "csv", "wpn", "EhEG"]).status.code(), Some(2));
    assert_eq!(run(&["census", "--n", "9", "--forbid", "EhEG", "--theorem", "c6"]).status.code(), Some(2));
    assert_eq!(run(&["census", "--n", "6", "--forbid", "EhEG", "--theorem", "c6", "--shards", "3"]).status.code(), Some(2));
    let budget = run(&["sequences", "--graph", "GhCGKC", "--k", "3", "--budget", "10"]);
    assert_eq!(budget.status.code(), Some(3));
    assert!(!budget.stderr.is_empty());
    assert!(budget.stdout.is_empty());
}

#[test]
fn certify_reports_absent_certificates() {
    assert_eq!(stdout(&run(&["certify", "--theorem", "c6", "EhEG"])), "NONE\n");
    assert_eq!(stdout(&run(&["certify", "--theorem", "c6", "EwCW"])), "NONE\n");
    let doc = json_of(&["certify", "--theorem", "c6", "D?{"]);
    validate("certify.json", &doc);
}

#[test]
fn twelve_cycle_claims_pass() {
    let doc = json_of(&["verify-claims", "--cycle", "12"]);
    validate("verify-claims.json", &doc);
    assert_eq!(doc["result"]["passed"], Value::Bool(true));
}

#[test]
fn every_report_matches_its_schema() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("m.json");
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("wpn.json", vec!["wpn", "EhEG"]),
        ("certify.json", vec!["certify", "--theorem", "c8", "GhCGKC"]),
        ("sequences.json", vec!["sequences", "--graph", "EhEG", "--k", "2"]),
        ("count.json", vec!["count", "--fn", "f1", "--n", "12"]),
        ("count.json", vec!["count", "--fn", "cographs", "--n", "6"]),
        ("bound.json", vec!["bound", "--n", "8", "--l", "4"]),
        ("sample-partitions.json", vec!["sample-partitions", "--n", "12", "--samples", "3", "--seed", "5"]),
        ("sample-partitions.json", vec!["sample-partitions", "--n", "12", "--samples", "3", "--stats"]),
        ("census.json", vec!["census", "--n", "6", "--forbid", "EhEG", "--theorem", "c6"]),
        ("census.json", vec!["census", "--n", "6", "--forbid", "EhEG", "--theorem", "c6", "--mode", "unlabeled"]),
        (
            "census.json",
            vec!["census", "--n", "5", "--forbid", "EhEG", "--theorem", "c6", "--shards", "4", "--resume", manifest.to_str().unwrap()],
        ),
        ("girth5.json", vec!["girth5", "--n", "6"]),
        ("girth5.json", vec!["girth5", "--n", "7", "--mode", "unlabeled"]),
    ];
    for (schema, args) in cases {
        let doc = json_of(&args);
        validate(schema, &doc);
        assert_eq!(doc["tool"], "wpn-lab");
        assert_eq!(doc["version"], env!("CARGO_PKG_VERSION"));
        assert_eq!(doc["config_hash"].as_str().unwrap().len(), 64);
    }
    let m: Value = serde_json::from_str(&std::fs::read_to_string(&manifest).unwrap()).unwrap();
    validate("census-manifest.json", &m);
}

#[test]
fn csv_outputs() {
    let o = run(&["--format", "csv", "count", "--fn", "bell", "--n", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().last().unwrap().ends_with(",15"));
    let o = run(&["--format", "csv", "sample-partitions", "--n", "30", "--samples", "4", "--stats"]);
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn output_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = run(&["--format", "json", "-o", path.to_str().unwrap(), "bound", "--n", "8", "--l", "4"]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    validate("bound.json", &doc);
}

fn with_threads(threads: &str, args: &[&str]) -> Vec<u8> {
    let o = bin().env("WPNLAB_THREADS", threads).args(args).output().unwrap();
    assert!(o.status.success());
    o.stdout
}

#[test]
fn output_is_identical_across_thread_counts() {
    let commands: [&[&str]; 3] = [
        &["--format", "json", "census", "--n", "6", "--forbid", "EhEG", "--theorem", "c6", "--shards", "16"],
        &["--format", "json", "sample-partitions", "--n", "40", "--samples", "50", "--seed", "9"],
        &["--format", "json", "girth5", "--n", "6"],
    ];
    for args in commands {
        let one = with_threads("1", args);
        assert_eq!(one, with_threads("4", args), "{args:?}");
        assert_eq!(one, with_threads("8", args), "{args:?}");
    }
}

#[test]
fn interrupted_census_resumes_to_the_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let whole = dir.path().join("whole.json");
    let part = dir.path().join("part.json");
    let base = ["--format", "json", "census", "--n", "6", "--forbid", "EhEG", "--theorem", "c6", "--shards", "8", "--resume"];
    let args = |p: &Path| {
        let mut v: Vec<String> = base.iter().map(|s| s.to_string()).collect();
        v.push(p.to_str().unwrap().to_string());
        v
    };
    let uninterrupted = bin().args(args(&whole)).output().unwrap();
    assert!(uninterrupted.status.success());

    let stopped = bin().args(args(&part)).args(["--stop-after", "4"]).output().unwrap();
    assert_eq!(stopped.status.code(), Some(4));
    assert!(stopped.stdout.is_empty());
    let resumed = bin().args(args(&part)).output().unwrap();
    assert!(resumed.status.success());

    assert_eq!(uninterrupted.stdout, resumed.stdout);
    assert_eq!(std::fs::read(&whole).unwrap(), std::fs::read(&part).unwrap());

    // A different forbidden graph may not reuse the manifest.
    let mut other = args(&part);
    other[5] = "GhCGKC".into();
    other[9] = "c8".into();
    assert_eq!(bin().args(other).output().unwrap().status.code(), Some(2));
}
