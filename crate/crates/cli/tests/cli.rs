//! End-to-end tests of the crossdet binary: subcommands, exit codes,
//! fixtures, and both output formats.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_crossdet"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

#[test]
fn verify_proves_the_whole_catalog() {
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("13/13 identities proved"));
}

#[test]
fn verify_only_one_identity() {
    let out = run(&["verify", "--only", "P"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1/1 identities proved"));
    let out = run(&["verify", "--only", "quadruple_15"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_unknown_identity_is_a_usage_error() {
    let out = run(&["verify", "--only", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown identity"));
}

#[test]
fn fuzz_exits_clean_over_prime_field_and_rationals() {
    let out = run(&["fuzz", "--field", "gf:7", "--seed", "42", "--n", "500"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("formula (P): 0 failures"));
    let out = run(&["fuzz", "--field", "rational", "--seed", "1", "--n", "200"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn fuzz_rejects_composite_moduli() {
    let out = run(&["fuzz", "--field", "gf:4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not prime"));
}

#[test]
fn check_perspective_fixture() {
    let out = run(&["check", &fixture("perspective.cfg")]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("lines u-x, v-y, w-z concurrent: true"));
    assert!(text.contains("R,S,T collinear: true"));
    assert!(text.contains("all checks pass"));
}

#[test]
fn check_pappus_fixture() {
    let out = run(&["check", &fixture("pappus.cfg")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("hypothesis (u,v,w and x,y,z collinear): true"));
    assert!(text.contains("conclusion det(q,p,o)=0: true"));
}

#[test]
fn check_not_concurrent_fixture() {
    let out = run(&["check", &fixture("not_concurrent.cfg")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("concurrent: false"));
    assert!(text.contains("R,S,T collinear: true"));
}

#[test]
fn check_structured_input() {
    let out = run(&[
        "check",
        &fixture("perspective_gf7.json"),
        "--input",
        "structured",
        "--format",
        "structured",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["field"], "gf:7");
    assert_eq!(doc["desargues"]["concurrent_1st"], true);
    assert_eq!(doc["desargues"]["collinear_2nd"], true);
    assert_eq!(doc["four_triples"]["all_equal"], true);
}

#[test]
fn check_zero_vector_is_rejected() {
    let out = run(&["check", &fixture("zero_vector.cfg")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("zero vector"));
}

#[test]
fn check_missing_file_is_a_usage_error() {
    let out = run(&["check", "/no/such/file.cfg"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_fano_exhaustive() {
    let out = run(&["enumerate", "--q", "2", "--exhaustive"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PG(2,2): 7 points, 7 lines"));
    assert!(text.contains("all sweeps pass"));
}

#[test]
fn enumerate_rejects_bad_orders() {
    let out = run(&["enumerate", "--q", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not prime"));
    let out = run(&["enumerate", "--q", "17"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cap"));
    let out = run(&["enumerate", "--q", "5", "--exhaustive"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("exhaustive"));
}

#[test]
fn structured_output_is_deterministic() {
    for args in [
        vec!["verify", "--format", "structured"],
        vec![
            "fuzz", "--field", "gf:101", "--seed", "9", "--n", "300", "--format", "structured",
        ],
        vec![
            "enumerate", "--q", "5", "--seed", "3", "--n", "400", "--format", "structured",
        ],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.status.code(), Some(0));
        assert_eq!(
            first.stdout, second.stdout,
            "non-deterministic output for {args:?}"
        );
    }
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path: PathBuf = dir.path().join("report.json");
    let args = [
        "fuzz", "--field", "gf:7", "--seed", "5", "--n", "100", "--format", "structured",
    ];
    let piped = run(&args);
    let mut with_out: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    with_out.push("--out".into());
    with_out.push(path.display().to_string());
    let out = bin().args(&with_out).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), piped.stdout);
}

#[test]
fn structured_reports_carry_no_timings() {
    let out = run(&["verify", "--format", "structured"]);
    let text = stdout(&out);
    assert!(!text.contains("elapsed"));
    assert!(!text.contains("wall"));
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["all_proved"], true);
    assert_eq!(doc["proved"], 13);
}
