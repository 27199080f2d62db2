//! End-to-end tests of the `pw` binary: golden outputs, exit codes, JSON
//! shape, and determinism across worker counts.

use std::process::{Command, Output};

fn pw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pw"))
        .args(args)
        .env_remove("PW_ORACLE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn tables_csv_matches_permutation_triangle() {
    let out = pw(&["tables", "--family", "permutation", "--nmax", "6", "--format", "csv"]);
    assert!(out.status.success());
    let expected = "\
n/k,0,1,2,3,4,5,6
0,1,,,,,,
1,0,1,,,,,
2,1,1,2,,,,
3,2,3,4,6,,,
4,9,11,14,18,24,,
5,44,53,64,78,96,120,
6,265,309,362,426,504,600,720
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn tables_csv_involution_and_forest_rows() {
    let out = pw(&["tables", "--family", "involution", "--nmax", "8", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(
        text.lines().last().unwrap(),
        "8,105,105,120,150,198,270,376,532,764"
    );

    let out = pw(&["tables", "--family", "forest", "--nmax", "6", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(
        text.lines().last().unwrap(),
        "6,10626,11431,12312,13278,14340,15511,16807"
    );
}

#[test]
fn tables_json_uses_strings_past_64_bits() {
    let out = pw(&["tables", "--family", "forest", "--nmax", "20", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["family"], "forest");
    assert!(v["rows"][6][6].is_i64());
    assert_eq!(v["rows"][6][6], 16807);
    // 21^19 overflows i64 and must arrive as a decimal string
    assert!(v["rows"][20][20].is_string());
}

#[test]
fn value_prints_single_entry() {
    let out = pw(&["value", "--family", "permutation", "--n", "6", "--k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "362\n");

    let out = pw(&["value", "--family", "symbolic", "--n", "2", "--k", "1"]);
    assert_eq!(stdout(&out), "t1*t2\n");
}

#[test]
fn enumerate_streams_partitions_with_weights() {
    let out = pw(&["enumerate", "--n", "3", "--family", "symbolic"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines.contains(&"{1}{2}{3}\tt1^3"));
    assert!(lines.contains(&"{1,2,3}\tt3"));
}

#[test]
fn oracle_cap_env_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_pw"))
        .args(["enumerate", "--n", "3"])
        .env("PW_ORACLE_CAP", "2")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(env!("CARGO_BIN_EXE_pw"))
        .args(["enumerate", "--n", "3"])
        .env("PW_ORACLE_CAP", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bell_prints_canonical_polynomial() {
    let out = pw(&["bell", "--n", "4", "--r", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4*t1*t3 + 3*t2^2\n");

    let out = pw(&["bell", "--n", "6", "--r", "6", "--family", "permutation"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn egf_check_reports_json() {
    for which in ["lemma21", "permutation", "involution", "forest", "tree", "fibonacci"] {
        let out = pw(&["egf-check", "--which", which, "--order", "6"]);
        assert!(out.status.success(), "{which} failed");
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
        assert_eq!(v["pass"], true, "{which}");
        assert_eq!(v["order"], 6);
    }
    let out = pw(&["egf-check", "--which", "lemma21", "--order", "6", "--family", "involution"]);
    assert!(out.status.success());
    // --family with a non-lemma21 check is an invalid combination
    let out = pw(&["egf-check", "--which", "tree", "--order", "6", "--family", "forest"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_exit_codes() {
    let out = pw(&["check", "--id", "3.4", "--n", "1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["status"], "pass");

    // unknown id and malformed bindings are usage errors
    assert_eq!(pw(&["check", "--id", "9.9", "--n", "1"]).status.code(), Some(2));
    assert_eq!(pw(&["check", "--id", "2.4", "--n", "1"]).status.code(), Some(2));
    assert_eq!(pw(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn suite_minimal_grid_exits_zero() {
    let out = pw(&["suite", "--nmax", "0", "--mmax", "0", "--kmax", "0"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let arr = v.as_array().expect("array of reports");
    assert_eq!(arr.len(), 52);
    assert!(arr.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn suite_output_is_deterministic_across_workers() {
    let args_base = ["suite", "--nmax", "2", "--mmax", "1", "--kmax", "1"];
    let one = pw(&[&args_base[..], &["--workers", "1"]].concat());
    let eight = pw(&[&args_base[..], &["--workers", "8"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, eight.stdout);
}

#[test]
fn suite_writes_report_file() {
    let dir = std::env::temp_dir().join("pw-cli-test-out");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = pw(&[
        "suite",
        "--nmax",
        "1",
        "--mmax",
        "0",
        "--kmax",
        "0",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let file = std::fs::read_to_string(&path).unwrap();
    assert_eq!(file, stdout(&out));
    std::fs::remove_file(&path).ok();
}
