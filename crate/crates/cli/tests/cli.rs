//! End-to-end runs of the binary against the fixture graphs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slashfree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn recognize_k33_is_no() {
    let out = run(&["recognize", "--class", "strong-cocomp", fixture("k33.g").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "NO\n");
}

#[test]
fn recognize_k33_as_cocomp_is_yes() {
    let out = run(&["recognize", "--class", "cocomp", fixture("k33.g").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "YES\n");
}

#[test]
fn certify_p4_prints_ordering() {
    let out = run(&["certify", "--class", "strong-cocomp", fixture("p4.g").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "YES\n0 1 2 3\n");
}

#[test]
fn certify_k33_prints_weak_edge_asteroid() {
    let out = run(&["certify", "--class", "strong-cocomp", fixture("k33.g").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("NO"));
    assert!(lines.next().unwrap().starts_with("weak-edge-asteroid"));
}

#[test]
fn construct_h_plus_plus_of_2k2_is_c4() {
    let out = run(&["construct", "--op", "h-plus-plus", fixture("twok2.bg").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "4 4\n0 1\n0 2\n1 3\n2 3\n");
}

#[test]
fn construct_bipartite_double_of_p4() {
    let out = run(&["construct", "--op", "bipartite-double", fixture("p4.g").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    // loops give the diagonal, path edges both off-diagonal copies
    assert_eq!(
        stdout(&out),
        "4 4 10\n0 0\n0 1\n1 0\n1 1\n1 2\n2 1\n2 2\n2 3\n3 2\n3 3\n"
    );
}

#[test]
fn comparability_c5_is_no() {
    let out = run(&["recognize", "--class", "comparability", fixture("c5.sg").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "NO\n");
}

#[test]
fn malformed_input_exits_2() {
    let out = run(&["recognize", "--class", "strong-cocomp", fixture("bad.g").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn missing_file_exits_2() {
    let out = run(&["recognize", "--class", "strong-cocomp", "/nonexistent/x.g"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_guard_violation_exits_3() {
    let out = run(&["oracle", "--class", "strong-cocomp", fixture("big.g").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(!out.stderr.is_empty());
}

#[test]
fn oracle_p4_matches_recognizer() {
    let out = run(&["oracle", "--class", "strong-cocomp", fixture("p4.g").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "YES\n0 1 2 3\n");
}

#[test]
fn oracle_cocomp_bigraph_yes() {
    let out = run(&["oracle", "--class", "cocomp-bigraph", fixture("twok2.bg").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("YES\nrows "));
}

#[test]
fn kind_flag_overrides_extension() {
    // interpret the simple-graph C5 file as a reflexive graph: still NO
    let out = run(&[
        "recognize",
        "--class",
        "strong-cocomp",
        "--kind",
        "reflexive",
        fixture("c5.sg").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn crosscheck_n3_reports_eight_records() {
    let out = run(&["crosscheck", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("crosscheck n=3 graphs=8 strong=8 disagreements=0\n"));
    assert_eq!(text.lines().count(), 9);
}

#[test]
fn sampled_crosscheck_is_byte_identical() {
    let args = ["crosscheck", "--n", "7", "--seed", "9", "--samples", "25", "--format", "structured"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
