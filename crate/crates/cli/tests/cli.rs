use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bipolar-aba"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let file = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(file.path(), contents).unwrap();
    file
}

#[test]
fn solve_complete_baf() {
    let out = ok(&["solve", "baf", &path("example3_2.baf"), "--sigma", "co"]);
    assert_eq!(out, "[x,u,v]\ncount: 1\n");
}

#[test]
fn solve_verification_on_aba() {
    let out = ok(&[
        "solve", "aba", &path("example2_2.aba"), "--sigma", "ad", "--task", "ver", "--query", "b",
    ]);
    assert_eq!(out.trim(), "YES");
}

#[test]
fn solve_single_argument_stable() {
    let f = temp_file("p baf 1\n");
    let out = ok(&["solve", "baf", f.path().to_str().unwrap(), "--sigma", "stb"]);
    assert_eq!(out, "[0]\ncount: 1\n");
}

#[test]
fn solve_json_shape() {
    let out = ok(&[
        "solve", "baf", &path("example3_2.baf"), "--sigma", "pr", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["semantics"], "pr");
    assert_eq!(v["task"], "enumerate");
    assert_eq!(v["extensions"].as_array().unwrap().len(), 2);
    assert!(v.get("answer").is_none());
}

#[test]
fn translate_lists_every_argument() {
    let out = ok(&["translate", &path("example2_2.aba")]);
    assert!(out.starts_with("p baf 9\n"));
    assert_eq!(out.lines().filter(|l| l.starts_with("arg ")).count(), 9);
}

#[test]
fn translate_to_pbaf_writes_premises() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("out.pbaf");
    ok(&[
        "translate", &path("example2_2.aba"), "--target", "pbaf", "-o", target.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(target).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("prem ")).count(), 9);
}

#[test]
fn translate_cap_is_a_guard_failure() {
    let out = run(&["translate", &path("example2_2.aba"), "--cap", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("guard cap"));
}

#[test]
fn reduce_sizes() {
    let sat = ok(&["reduce", &path("fig.cnf"), "--construction", "sat-baf"]);
    assert!(sat.starts_with("p baf 11\n"));
    let pbaf = ok(&["reduce", &path("fig.cnf"), "--construction", "skept-pbaf"]);
    assert!(pbaf.lines().any(|l| l.starts_with("prem ")));
    assert!(!pbaf.lines().any(|l| l.starts_with("sup ")));
}

#[test]
fn reduce_rejects_empty_clause() {
    let f = temp_file("p cnf 2 1\n0\n");
    let out = run(&["reduce", f.path().to_str().unwrap(), "--construction", "sat-baf"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fuzz_zero_cases() {
    let out = ok(&["fuzz", "--count", "0"]);
    assert_eq!(out.trim(), "cases: 0 failures: 0 skipped: 0");
}

#[test]
fn fuzz_checks_pass() {
    let out = ok(&["fuzz", "--count", "50", "--checks", "defense-eq"]);
    assert!(out.contains("failures: 0"));
    let out = ok(&["fuzz", "--count", "30", "--checks", "correspondence", "--sigma", "co"]);
    assert!(out.contains("failures: 0"));
}

#[test]
fn export_dot_edges() {
    let out = ok(&["export-dot", "baf", &path("example3_2.baf")]);
    assert_eq!(out.lines().filter(|l| l.contains("[label=")).count(), 5);
    let dashed = out.lines().filter(|l| l.contains("style=dashed")).count();
    let solid = out.lines().filter(|l| l.contains("->")).count() - dashed;
    assert_eq!((solid, dashed), (4, 2));
}

#[test]
fn export_dot_single_argument() {
    let f = temp_file("p baf 1\n");
    let out = ok(&["export-dot", "baf", f.path().to_str().unwrap()]);
    assert_eq!(out.lines().filter(|l| l.contains("[label=")).count(), 1);
    assert!(!out.contains("->"));
}

#[test]
fn export_dot_of_translated_aba() {
    let out = ok(&["export-dot", "aba", &path("example2_2.aba")]);
    assert_eq!(out.lines().filter(|l| l.contains("[label=")).count(), 9);
    assert_eq!(out.lines().filter(|l| l.contains("style=dashed")).count(), 8);
}

#[test]
fn unknown_semantics_is_usage_error() {
    let out = run(&["solve", "baf", &path("example3_2.baf"), "--sigma", "xx"]);
    assert!(!out.status.success());
}
