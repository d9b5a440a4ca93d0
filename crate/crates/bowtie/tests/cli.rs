//! End-to-end tests of the command-line surface: exit codes, JSON shapes,
//! the file formats, and thread-count independence of the output bytes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bowtie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bowtie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("bowtie-cli-{}-{name}", std::process::id()));
    p
}

#[test]
fn gen_writes_the_domino_edge_list() {
    let out = bowtie(&["gen", "--family", "grid:1,2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let g = bowtie::formats::parse_edge_list(&text).unwrap();
    assert_eq!((g.n(), g.m()), (6, 7));
}

#[test]
fn gen_then_compute_pipeline_on_the_domino() {
    let path = tmp("domino.el");
    let out = bowtie(&["gen", "--family", "grid:1,2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let out = bowtie(&["compute", "--in", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["two_delta"]["value"], 2);
    assert_eq!(report["bow"]["mu"][1], 2);
    assert_eq!(report["classes"]["at_free"]["status"], "true");
    std::fs::remove_file(path).ok();
}

#[test]
fn gen_graph6_file_feeds_compute() {
    let path = tmp("ico.g6");
    let out = bowtie(&[
        "gen",
        "--family",
        "icosahedron",
        "--format",
        "graph6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = bowtie(&[
        "compute",
        "--in",
        path.to_str().unwrap(),
        "--format",
        "graph6",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["n"], 12);
    assert_eq!(report["m"], 30);
    assert_eq!(report["diameter"], 3);
    assert_eq!(report["classes"]["meshed"]["status"], "true");
    std::fs::remove_file(path).ok();
}

#[test]
fn compute_rejects_disconnected_with_witness_on_stderr() {
    let path = tmp("disc.el");
    std::fs::write(&path, "4\n0 1\n2 3\n").unwrap();
    let out = bowtie(&["compute", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "disconnected");
    assert_eq!(err["witness"], serde_json::json!([0, 2]));
    std::fs::remove_file(path).ok();
}

#[test]
fn verify_emits_29_checks_and_succeeds_on_a_tree() {
    let out = bowtie(&[
        "verify",
        "--family",
        "tree:9,4",
        "--with-subdivision",
        "--with-linegraph",
    ]);
    assert!(out.status.success(), "exit 0 expected: {out:?}");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 30); // C1..C29 plus the permanent tree-length skip
    assert!(checks
        .iter()
        .all(|c| c["status"]["kind"] == "pass" || c["status"]["kind"] == "skipped"));
    // half-integers serialize as doubled units
    assert_eq!(v["checks"][0]["lhs"]["doubled"], 0);
}

#[test]
fn transform_subdivide_has_n_plus_m_vertices() {
    let out = bowtie(&["transform", "--op", "subdivide", "--family", "cycle:5"]);
    assert!(out.status.success());
    let g = bowtie::formats::parse_edge_list(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!((g.n(), g.m()), (10, 10));
}

#[test]
fn search_exhaustive_stream_exits_clean() {
    let path = tmp("stream.g6");
    let mut text = String::new();
    for g in bowtie::families::enumerate_connected(4).unwrap() {
        text.push_str(&bowtie::formats::serialize_graph6(&g).unwrap());
        text.push('\n');
    }
    std::fs::write(&path, text).unwrap();
    let out = bowtie(&[
        "search",
        "--mode",
        "exhaustive",
        "--in",
        path.to_str().unwrap(),
        "--lambda",
        "0",
        "--mu",
        "1",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["evaluated"], 6);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    std::fs::remove_file(path).ok();
}

#[test]
fn output_bytes_are_thread_count_independent() {
    let one = bowtie(&["compute", "--family", "gnp:18,0.3,5", "--threads", "1"]);
    let two = bowtie(&["compute", "--family", "gnp:18,0.3,5", "--threads", "2"]);
    assert!(one.status.success() && two.status.success());
    assert_eq!(one.stdout, two.stdout);

    let one = bowtie(&["verify", "--family", "gnp:14,0.3,9", "--with-subdivision", "--threads", "1"]);
    let two = bowtie(&["verify", "--family", "gnp:14,0.3,9", "--with-subdivision", "--threads", "2"]);
    assert_eq!(one.stdout, two.stdout);
}

#[test]
fn classify_reports_flags_with_witnesses() {
    let out = bowtie(&["classify", "--family", "cycle:6"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["bipartite"]["status"], "true");
    assert_eq!(v["chordal"]["status"], "false");
    assert!(v["chordal"]["witness"].as_array().unwrap().len() >= 4);
    assert_eq!(v["at_free"]["status"], "false");
    assert_eq!(v["at_free"]["witness"], serde_json::json!([0, 2, 4]));
}

#[test]
fn unknown_family_is_an_input_error() {
    let out = bowtie(&["gen", "--family", "moebius:7"]);
    assert_eq!(out.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "input");
}
