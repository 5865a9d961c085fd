//! Black-box tests of the `codeg` binary: output formats, exit codes,
//! determinism, and flag handling.

use std::process::{Command, Output};

use codeg_cli::report::{ReportJson, SweepJson, TableJson};

fn codeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_codeg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn table_psl2_4_has_five_rows() {
    let out = codeg(&["table", "psl2:4"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("char ")).collect();
    assert_eq!(rows.len(), 5);
    let degrees: Vec<&str> = rows
        .iter()
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    assert_eq!(degrees, ["1", "3", "3", "4", "5"]);
}

#[test]
fn table_m10_has_eight_rows() {
    let out = codeg(&["table", "m10"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("char ")).count(), 8);
}

#[test]
fn s3_golden_table() {
    let out = codeg(&["table", "s3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout(&out),
        "order 6\n\
         prime 7\n\
         exponent 6\n\
         sizes 1 2 3\n\
         char 1 : [1] [1] [1]\n\
         char 1 : [1] [1] [-1]\n\
         char 2 : [2] [-1] [0]\n"
    );
}

#[test]
fn table_json_parses() {
    let out = codeg(&["table", "s3", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let t: TableJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(t.order, 6);
    assert_eq!(t.prime, 7);
    assert_eq!(t.class_sizes, vec![1, 2, 3]);
    assert_eq!(t.chars.len(), 3);
    assert_eq!(t.chars[2].degree, 2);
}

#[test]
fn file_specs_resolve() {
    let path = std::env::temp_dir().join("codeg_cli_test_s3.gens");
    std::fs::write(&path, "# S3 on three points\n3\n2 1 3\n2 3 1\n").unwrap();
    let spec = format!("file:{}", path.display());
    let out = codeg(&["table", &spec]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("char ")).count(), 3);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn cod_pgl2_5_report() {
    let out = codeg(&["cod", "pgl2:5"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("cod_nonlinear {20,24,30}"), "{text}");
    assert!(text.contains("verdict ThreeMatched(PGL2(q), q=5)"), "{text}");
    assert!(text.contains("check lemma21: pass"), "{text}");
}

#[test]
fn cod_json_round_trips() {
    let out = codeg(&["cod", "--json", "psl2:7"]);
    assert_eq!(exit_code(&out), 0);
    let report: ReportJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.id, "psl2:7");
    assert_eq!(report.order, 168);
    assert_eq!(report.cod_nonlinear, vec![21, 24, 28, 56]);
    assert_eq!(report.verdict.kind, "NotThree");
    assert_eq!(report.checks.len(), 5);
    let emitted = serde_json::to_string(&report).unwrap();
    let reparsed: ReportJson = serde_json::from_str(&emitted).unwrap();
    assert_eq!(reparsed, report);
}

#[test]
fn classify_verdicts() {
    let out = codeg(&["classify", "sl2:3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "NotApplicable(solvable)\n");

    let out = codeg(&["classify", "psl2:8"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "ThreeMatched(L2(2^f), q=8)\n");
}

#[test]
fn superset_evaluations() {
    let out = codeg(&["superset", "9", "2", "--eq", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "{36,45,72,80,90,144}\n");

    let out = codeg(&["superset", "8", "3", "--eq", "cd"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "{1,7,8,9,21,27}\n");

    let out = codeg(&["superset", "8", "3", "--eq", "1"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("odd q"));
}

#[test]
fn usage_errors_exit_2() {
    let out = codeg(&["cod", "nosuch:99"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("unknown group spec"));

    let out = codeg(&["sweep", "--checks", "bogus"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("unknown check"));

    let out = codeg(&["cod", "psl2:16", "--max-order", "1000"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("exceeds the cap"));
}

#[test]
fn prime_override_is_validated() {
    let out = codeg(&["table", "s3", "--prime", "13"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("prime 13"));

    let out = codeg(&["table", "s3", "--prime", "12"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("rejected"));
}

#[test]
fn sweep_is_deterministic_across_runs_and_threads() {
    let first = codeg(&["sweep", "--threads", "1"]);
    assert_eq!(exit_code(&first), 0);
    let second = codeg(&["sweep", "--threads", "1"]);
    let fourway = codeg(&["sweep", "--threads", "4"]);
    assert_eq!(stdout(&first), stdout(&second));
    assert_eq!(stdout(&first), stdout(&fourway));
    assert!(stdout(&first).contains("summary groups=32"));
}

#[test]
fn sweep_json_summary() {
    let out = codeg(&["sweep", "--json", "--checks", "lemma21,thmA", "--threads", "4"]);
    assert_eq!(exit_code(&out), 0);
    let sweep: SweepJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(sweep.version, env!("CARGO_PKG_VERSION"));
    assert_eq!(sweep.summary.groups, 32);
    assert_eq!(sweep.reports.len(), 32);
    assert_eq!(sweep.summary.fail, 0);
    for r in &sweep.reports {
        assert_eq!(r.checks.len(), 2);
    }
}

#[test]
fn threads_do_not_change_single_group_output() {
    let one = codeg(&["cod", "--json", "pgammal2:9", "--threads", "1"]);
    let four = codeg(&["cod", "--json", "pgammal2:9", "--threads", "4"]);
    assert_eq!(exit_code(&one), 0);
    assert_eq!(stdout(&one), stdout(&four));
}
