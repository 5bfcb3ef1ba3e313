//! End-to-end tests for the command-line binary: exit codes, report shape,
//! both input formats, and the random-suite mode.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cpivot"))
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cpivot-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn solves_a_text_problem_and_exits_zero() {
    let path = write_temp("walkthrough.txt", "sense: max\n-1 1\n1 1 | 10\n-1 0 | -5\n");
    let out = bin().arg("--input").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("status: solved"), "{text}");
    assert!(text.contains("x = (5.0000, 5.0000)"), "{text}");
    assert!(text.contains("objective = 0.0000"), "{text}");
    assert!(text.contains("itn\tminorp_col\tmajorp_col"), "{text}");
}

#[test]
fn json_input_with_rational_arithmetic_and_full_precision() {
    let path = write_temp(
        "problem.json",
        r#"{"sense":"max","objective":["3","4","1","7"],
            "constraints":[
              {"coeffs":["8","3","4","1"],"relation":"<=","rhs":"7"},
              {"coeffs":["2","6","1","5"],"relation":"<=","rhs":"3"},
              {"coeffs":["1","4","5","2"],"relation":"<=","rhs":"8"}]}"#,
    );
    let out = bin()
        .args(["--arithmetic", "rational", "--precision", "full", "--input"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("x = (16/19, 0, 0, 5/19)"), "{text}");
    assert!(text.contains("objective = 83/19"), "{text}");
}

#[test]
fn no_solution_exits_one() {
    let path = write_temp("unbounded.txt", "sense: max\n2 1\n-1 -1 | -4\n1 -1 | 6\n");
    let out = bin().arg("--input").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
    assert!(
        stdout(&out).contains("status: no solution"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn oracle_check_on_a_clean_solve_keeps_exit_zero() {
    let path = write_temp("clean.txt", "sense: max\n2 1\n1 1 | 5\n1 0 | 2\n");
    let out = bin()
        .args(["--oracle-check", "--input"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(!stdout(&out).contains("finding:"), "{}", stdout(&out));
}

#[test]
fn tableaux_trace_prints_snapshots() {
    let path = write_temp("traced.txt", "sense: max\n2 1\n1 1 | 5\n1 0 | 2\n");
    let out = bin()
        .args(["--trace", "tableaux", "--input"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(
        stdout(&out).contains("--- initialized ---"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn random_suite_writes_findings_and_reports_summary() {
    let dir = std::env::temp_dir().join(format!("cpivot-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("findings.jsonl");
    let out = bin()
        .args([
            "--random-suite",
            "25",
            "--seed",
            "0",
            "--kmax",
            "4",
            "--nmax",
            "4",
            "--out",
        ])
        .arg(&out_path)
        .output()
        .unwrap();
    let text = stdout(&out);
    assert!(text.contains("suite: 25 instances"), "{text}");
    let findings = std::fs::read_to_string(&out_path).unwrap();
    match out.status.code() {
        Some(0) => assert!(findings.trim().is_empty(), "{findings}"),
        Some(2) => assert!(
            findings.lines().all(|l| l.contains("\"seed\"")),
            "{findings}"
        ),
        other => panic!("unexpected exit code {other:?}: {text}"),
    }
}

#[test]
fn bad_usage_exits_sixtyfour() {
    let out = bin().output().unwrap();
    assert_eq!(out.status.code(), Some(64));

    let out = bin().args(["--arithmetic", "decimal"]).output().unwrap();
    assert_eq!(out.status.code(), Some(64));

    let path = write_temp("ragged.txt", "sense: max\n1 1\n1 | 3\n");
    let out = bin().arg("--input").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(64));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}
