//! End-to-end tests of the binary: flags, formats, exit codes, and
//! determinism across worker counts.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_twist-roots"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn enumerate_lists_the_two_degree_three_sets() {
    let out = run(&["enumerate", "--n", "3", "--g", "1"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "(3, 0, 1; (1, 3), (1, 3))\n(3, 0, 2; (2, 3), (2, 3))\n"
    );
}

#[test]
fn validate_reports_failures_with_exit_one() {
    let out = run(&["validate", "(4,0,2;(1,2),(1,4))"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("unit-a"));
}

#[test]
fn validate_reduces_negative_residues() {
    let out = run(&["validate", "(4, 0, 1; (-1, 2), (-3, 4))"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "valid\n");
}

#[test]
fn validate_reads_standard_input() {
    let mut child = bin()
        .arg("validate")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"(1, 5, 1;)")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn malformed_literals_are_usage_errors() {
    let out = run(&["validate", "not a tuple"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn max_degree_prints_bare_number() {
    let out = run(&["max-degree", "--g", "7"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "210\n");
}

#[test]
fn genus_of_published_set() {
    let out = run(&["genus", "(8,0,1;(1,2),(3,8))"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2\n");
}

#[test]
fn witness_for_split_two_one() {
    let out = run(&["witness", "--g1", "2", "--g2", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("degree 24:"));
}

#[test]
fn table1_csv_has_fixed_header() {
    let out = run(&["table1", "--from", "2", "--to", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("g,g1,g2,m,U_stable,U,ratio\n"));
    assert!(text.contains("2,,,12,,20,0.60\n"));
}

#[test]
fn table2_row_values() {
    let out = run(&[
        "table2", "--N", "11", "--from", "30", "--to", "30", "--format", "csv",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("30,15,15,2790,3038,3658,0.76\n"));
}

#[test]
fn table2_rejects_even_deficit() {
    let out = run(&["table2", "--N", "4", "--from", "30", "--to", "30"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_json_streams_one_object_per_line() {
    let out = run(&["enumerate", "--n", "4", "--g", "1", "--format", "json"]);
    assert!(out.status.success());
    for line in stdout(&out).lines() {
        let value: serde_json::Value = serde_json::from_str(line).expect("line parses");
        assert_eq!(value["n"], 4);
    }
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn verify_passes_at_small_genus() {
    let out = run(&["verify", "--g-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all 14 checks passed"));
}

#[test]
fn classify_text_shows_cross_check() {
    let out = run(&["classify", "--g1", "1", "--g2", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[confirmed]"));
    assert!(!text.contains("typo-suspected"));

    let out = run(&["classify", "--g1", "2", "--g2", "1"]);
    let text = stdout(&out);
    assert!(text.contains("[typo-suspected]"));
    assert!(text.contains("corrected:"));
}

#[test]
fn classify_json_carries_groups_and_cross_check() {
    let out = run(&["classify", "--g1", "2", "--g2", "1", "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["g1"], 2);
    assert!(report["groups"].as_array().unwrap().len() >= 10);
    let entries = report["cross_check"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 39);
    for entry in entries {
        for key in ["location", "printed", "status", "corrected"] {
            assert!(entry.get(key).is_some(), "entry missing {key}");
        }
    }
}

#[test]
fn verify_json_is_a_list_of_checks() {
    let out = run(&["verify", "--g-max", "2", "--format", "json"]);
    assert!(out.status.success());
    let checks: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = checks.as_array().expect("bare list");
    assert_eq!(checks.len(), 14);
    for check in checks {
        for key in ["theorem", "range", "status", "witnesses"] {
            assert!(check.get(key).is_some(), "check missing {key}");
        }
        assert_eq!(check["status"], "pass");
    }
}

#[test]
fn output_is_identical_across_worker_counts() {
    for args in [
        vec!["pairs", "--g1", "2", "--g2", "1", "--format", "json"],
        vec!["table1", "--from", "2", "--to", "5", "--format", "csv"],
        vec!["enumerate", "--g", "3"],
    ] {
        let mut runs = Vec::new();
        for jobs in ["1", "2", "4"] {
            let mut full = args.clone();
            full.extend(["--jobs", jobs]);
            let out = run(&full);
            assert!(out.status.success());
            runs.push(out.stdout);
        }
        assert_eq!(runs[0], runs[1]);
        assert_eq!(runs[0], runs[2]);
    }
}

#[test]
fn jobs_env_variable_is_honored_but_flag_wins() {
    let out = bin()
        .args(["max-degree", "--g", "2"])
        .env("TWIST_ROOTS_JOBS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "12\n");

    let out = bin()
        .args(["max-degree", "--g", "2", "--jobs", "1"])
        .env("TWIST_ROOTS_JOBS", "not-a-number")
        .output()
        .unwrap();
    assert!(out.status.success(), "flag overrides a broken env value");

    let out = bin()
        .args(["max-degree", "--g", "2"])
        .env("TWIST_ROOTS_JOBS", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join("twist-roots-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("genus1.txt");
    let out = run(&[
        "enumerate",
        "--n",
        "2",
        "--g",
        "1",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, "(2, 0, 1; (1, 2), (1, 2), (1, 2))\n");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bad_split_is_usage_error() {
    let out = run(&["pairs", "--g1", "1", "--g2", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["max-degree", "--g", "2", "--g1", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["max-degree"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn degree_above_order_bound_warns_and_returns_empty() {
    let out = run(&["enumerate", "--n", "11", "--g", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("order bound"));
}
