use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn coprime(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coprime"))
        .args(args)
        .env_remove("COPRIME_MAX_ORDER")
        .env_remove("COPRIME_EXACT_CAP")
        .output()
        .expect("binary runs")
}

fn coprime_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_coprime"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_z30_table() {
    let out = coprime(&["analyze", "Z:30"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for line in [
        "vertices             2 3 5 6 10 15",
        "edge count           6",
        "diameter             3",
        "girth                3",
        "chromatic number     3",
        "planar               yes",
        "shape                Unicyclic",
        "contains             K1,2 K1,3",
    ] {
        assert!(text.lines().any(|l| l == line), "missing {line:?} in\n{text}");
    }
}

#[test]
fn analyze_json_reports_shape() {
    let out = coprime(&["analyze", "A4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 8);
    assert_eq!(v["edges"].as_array().unwrap().len(), 16);
    assert_eq!(v["analysis"]["chi"], 2);
    assert!(v["labels"].is_array() || v["labels"].is_object());
}

#[test]
fn analyze_nonplanar_names_the_witness() {
    let out = coprime(&["analyze", "Z:210", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l == "planar               no (K3,3 subdivision)"));
}

#[test]
fn export_graphs() {
    let cases = [("Z:30", 6, 6), ("Z:210", 14, 25), ("D:6", 14, 10)];
    for (spec, nodes, edges) in cases {
        let out = coprime(&["export", spec, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{spec}");
        let v = json(&out);
        assert_eq!(v["vertices"].as_array().unwrap().len(), nodes, "{spec}");
        assert_eq!(v["edges"].as_array().unwrap().len(), edges, "{spec}");

        let dot = stdout(&coprime(&["export", spec]));
        assert!(dot.starts_with(&format!("graph \"P({spec})\" {{")));
        assert_eq!(dot.matches(" -- ").count(), edges, "{spec}");
        assert_eq!(dot.matches("[label=").count(), nodes, "{spec}");
    }
}

#[test]
fn export_z6_dot_is_exact() {
    let out = coprime(&["export", "Z:6"]);
    let expected = "graph \"P(Z:6)\" {\n  // rotation system (cyclic neighbor order per vertex)\n  // 0: 1\n  // 1: 0\n  0 [label=\"2\"];\n  1 [label=\"3\"];\n  0 -- 1;\n}\n";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn exit_codes() {
    assert_eq!(coprime(&["analyze", "Z:7"]).status.code(), Some(3));
    assert_eq!(coprime(&["analyze", "Z:1"]).status.code(), Some(3));
    assert_eq!(coprime(&["analyze", "Q:3"]).status.code(), Some(2));
    assert_eq!(coprime(&["analyze", "Z:30", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(coprime(&["analyze", "S3xS3", "--exact-cap", "10"]).status.code(), Some(4));
    assert_eq!(coprime(&["analyze", "D:600", "--max-order", "100"]).status.code(), Some(4));
    assert_eq!(coprime(&["verify", "/nonexistent/catalog.jsonl"]).status.code(), Some(2));
    assert_eq!(coprime(&["bogus"]).status.code(), Some(2));
}

#[test]
fn verify_builtin_catalog() {
    let out = coprime(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["summary"]["entries"], 68);
    assert_eq!(v["summary"]["skipped"], 1);
}

#[test]
fn verify_reports_wrong_expectations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.jsonl");
    fs::write(&path, "{\"spec\":\"A4\",\"expect\":{\"planar\":true,\"vertices\":8}}\n").unwrap();
    let out = coprime(&["verify", path.to_str().unwrap(), "--format", "table"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("FAIL A4 planar"), "{}", stderr(&out));
    let table = stdout(&out);
    assert!(table.lines().any(|l| l.starts_with("A4") && l.contains("planar") && l.ends_with("FAIL")));
    assert!(table.lines().any(|l| l.starts_with("A4") && l.contains("vertices") && l.ends_with("PASS")));
}

#[test]
fn verify_empty_catalog_warns() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.jsonl");
    fs::write(&path, "").unwrap();
    let out = coprime(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning: catalog has 0 entries"));
    assert_eq!(json(&out)["summary"]["checks"], 0);
}

#[test]
fn verify_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let catalog = dir.path().join("small.jsonl");
    let report = dir.path().join("report.json");
    fs::write(&catalog, "{\"spec\":\"Z:6\",\"expect\":{\"shape\":\"Complete(2)\"}}\n").unwrap();
    let out = coprime(&["verify", catalog.to_str().unwrap(), "--out", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["summary"]["entries"], 1);
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn embed_from_stdin_and_file() {
    let out = coprime_with_stdin(&["embed", "-"], "0 1\n1 2\n0 2\n");
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["modulus"], 30);
    assert_eq!(v["labels"]["0"], 2);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("edge.txt");
    fs::write(&path, "0 1\n").unwrap();
    let out = coprime(&["embed", path.to_str().unwrap()]);
    assert_eq!(json(&out)["modulus"], 6);

    let out = coprime_with_stdin(&["embed", "-"], "0 0\n");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_listing() {
    let out = coprime(&["catalog", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v.as_array().map(Vec::len), Some(69));
    let table = stdout(&coprime(&["catalog"]));
    assert!(table.lines().last().unwrap().contains("69 entries"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["analyze", "S3xS3", "--format", "json"][..],
        &["verify", "--format", "table", "--jobs", "4"][..],
        &["export", "Z3xA4"][..],
    ] {
        let first = coprime(args);
        let second = coprime(args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
}
