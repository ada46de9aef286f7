use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dichotomy"))
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            // usage errors exit before reading input
            if let Err(e) = pipe.write_all(s.as_bytes()) {
                assert_eq!(e.kind(), std::io::ErrorKind::BrokenPipe);
            }
        }
    }
    child.wait_with_output().unwrap()
}

fn json(bytes: &[u8]) -> Value {
    serde_json::from_slice(bytes).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(bytes)))
}

fn counterexample(name: &str) -> String {
    let out = run(&["counterexample", name], None);
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

const PATH4: &str = r#"{"n": 4, "edges": [
  {"u": 0, "v": 1, "kind": "short"}, {"u": 1, "v": 2, "kind": "short"},
  {"u": 2, "v": 3, "kind": "short"}, {"u": 0, "v": 3, "kind": "long"}]}"#;

#[test]
fn k47_has_no_planar_realization() {
    let g = counterexample("k47");
    let out = run(&["realize", "--algorithm", "auto", "--dim", "2", "--restarts", "8", "--max-iters", "300"], Some(&g));
    assert_eq!(out.status.code(), Some(1));
    let err = json(&out.stderr);
    assert_eq!(err["error"], "NoMethodSucceeded");
}

#[test]
fn degenerate_realizes_a_planar_bipartite_graph_in_three_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.json", PATH4);
    let out = run(&["realize", &g, "--algorithm", "degenerate", "--dim", "3", "--seed", "4"], None);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let e = json(&out.stdout);
    assert_eq!(e["space"]["euclidean"], 3);
    assert_eq!(e["coords"].as_array().unwrap().len(), 4);
}

#[test]
fn realize_then_verify_in_a_fresh_process() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.json", PATH4);
    let e = dir.path().join("e.json");
    let out = run(&["realize", &g, "--out", e.to_str().unwrap()], None);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&["verify", &g, e.to_str().unwrap()], None);
    assert!(out.status.success());
    let r = json(&out.stdout);
    assert_eq!(r["valid"], true);
    assert!(r["gap"].as_f64().unwrap() > 0.0);
}

#[test]
fn verify_rejects_a_bad_embedding() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.json", PATH4);
    let e = write(
        dir.path(),
        "e.json",
        r#"{"space": {"euclidean": 1}, "coords": [[0.0], [1.0], [2.0], [0.5]]}"#,
    );
    let out = run(&["verify", &g, &e], None);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out.stdout);
    assert_eq!(report["valid"], false);
    let err = json(&out.stderr);
    assert_eq!(err["error"], "InvalidEmbedding");
    assert!(err["gap"].as_f64().unwrap() <= 0.0);
}

#[test]
fn svg_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.json", PATH4);
    let mut texts = Vec::new();
    for i in 0..2 {
        let svg = dir.path().join(format!("{i}.svg"));
        let out = run(&["realize", &g, "--seed", "9", "--unit-circles", "--svg", svg.to_str().unwrap()], None);
        assert!(out.status.success());
        texts.push(fs::read_to_string(svg).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
    assert!(texts[0].starts_with("<svg"));
    assert!(texts[0].contains("<circle"));
}

#[test]
fn usage_errors_exit_with_two() {
    let out = run(&["realize", "--algorithm", "nonsense"], Some(PATH4));
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["frobnicate"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_graph_is_a_domain_error() {
    let out = run(&["bounds"], Some("{\"n\": 2, \"edges\": [{\"u\": 0, \"v\": 0, \"kind\": \"short\"}]}"));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out.stderr)["error"], "InvalidGraph");
    let out = run(&["bounds"], Some("not json"));
    assert_eq!(json(&out.stderr)["error"], "ParseError");
}

#[test]
fn bounds_reports_intervals() {
    let out = run(&["bounds", "--dim", "2"], Some(&counterexample("k55")));
    assert!(out.status.success());
    let r = json(&out.stdout);
    assert_eq!(r["n"], 10);
    assert_eq!(r["degeneracy"], 5);
    assert_eq!(r["certificate"], "Inconclusive");
    assert!(r["warren_bound"].as_str().unwrap().chars().all(|c| c.is_ascii_digit()));
    let ped = &r["ped_interval"];
    assert!(ped["lo"].as_u64().unwrap() <= ped["hi"].as_u64().unwrap());
}

#[test]
fn arrangement_lists_labels() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(dir.path(), "c.json", r#"{"centers": [[0.0, 0.0], [1.0, 0.0]]}"#);
    let out = run(&["arrangement", &c], None);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out.stdout);
    assert_eq!(r["count"], 4);
    assert_eq!(r["labels"], serde_json::json!(["00", "01", "10", "11"]));
}

#[test]
fn fraction_is_a_lower_bound() {
    let g = r#"{"n": 3, "edges": [{"u": 0, "v": 1, "kind": "short"}, {"u": 1, "v": 2, "kind": "short"}]}"#;
    let out = run(&["fraction", "--samples", "4", "--restarts", "5"], Some(g));
    assert!(out.status.success());
    let r = json(&out.stdout);
    assert_eq!(r["samples"], 4);
    assert_eq!(r["found"], 4);
    assert_eq!(r["fraction_lower_bound"], 1.0);
}

#[test]
fn solve_reports_status() {
    let out = run(&["solve", "--dim", "2", "--restarts", "10"], Some(PATH4));
    assert!(out.status.success());
    let r = json(&out.stdout);
    assert_eq!(r["status"], "found");
    assert!(!r["restarts"].as_array().unwrap().is_empty());

    let out = run(&["solve", "--dim", "1", "--restarts", "4", "--max-iters", "200"], Some(&counterexample("k55")));
    assert!(out.status.success());
    assert_eq!(json(&out.stdout)["status"], "no realization found");
}

#[test]
fn unknown_counterexample_is_reported() {
    let out = run(&["counterexample", "k99"], None);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out.stderr)["error"], "UnknownCounterexample");
}
