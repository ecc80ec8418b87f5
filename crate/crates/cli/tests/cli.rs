//! End-to-end tests of the `qcong` binary: commands, flags, environment
//! precedence, exit codes, and report files.

use std::path::Path;
use std::process::{Command, Output};

fn qcong(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcong"))
        .args(args)
        .env_remove("QCONG_SEED")
        .env_remove("QCONG_SERIES_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn parse_report(path: &Path) -> suite::Report {
    let text = std::fs::read_to_string(path).expect("report file exists");
    serde_json::from_str(&text).expect("report parses")
}

#[test]
fn list_prints_the_full_catalog() {
    let output = qcong(&["list"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("thm1"));
    assert!(text.contains("sum_{k>=0} (1-a q^(3k))/(1-a)"), "gr statement is printed");
    assert!(text.lines().count() >= 20);
}

#[test]
fn verify_passes_on_a_true_congruence() {
    let output = qcong(&["verify", "--claim", "thm1", "--n", "7"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("thm1 n=7: PASS"));
    assert!(text.contains("v_Phi_7"));
}

#[test]
fn verify_rejects_an_even_index_as_inapplicable() {
    let output = qcong(&["verify", "--claim", "thm1", "--n", "4"]);
    assert_eq!(exit_code(&output), 2);
    assert!(stdout(&output).contains("INAPPLICABLE"));
}

#[test]
fn verify_reports_the_achieved_valuation() {
    let output = qcong(&["verify", "--claim", "cor1", "--p", "3", "--r", "1"]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout(&output).contains("v_3 = 5 >= 4"));
}

#[test]
fn verify_rejects_an_unknown_claim() {
    let output = qcong(&["verify", "--claim", "thm99", "--n", "3"]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("unknown claim"));
}

#[test]
fn verify_requires_an_instance_flag() {
    let output = qcong(&["verify", "--claim", "thm1"]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("--n or --p"));

    let output = qcong(&["verify", "--claim", "cor1", "--n", "3", "--p", "3"]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("not both"));
}

#[test]
fn verify_checks_series_identities_at_the_series_order() {
    let output = qcong(&["verify", "--claim", "gr_a", "--series-order", "6"]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout(&output).contains("gr_a order=6: PASS"));
}

#[test]
fn scan_writes_a_valid_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("out.json");
    let output = qcong(&[
        "scan",
        "--n-max", "9",
        "--primes", "3,5",
        "--r-max", "1",
        "--series-order", "10",
        "--specializations", "2",
        "--json", json.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr(&output));
    let report = parse_report(&json);
    assert!(report.all_pass());
    assert!(report.summary.pass > 0);
    assert_eq!(report.summary.fail, 0);
}

#[test]
fn scan_with_empty_bounds_writes_an_empty_report() {
    let output = qcong(&["scan", "--n-max", "0"]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout(&output).contains("summary: 0 passed, 0 failed, 0 inapplicable"));
}

#[test]
fn scans_with_the_same_seed_agree() {
    let dir = tempfile::tempdir().unwrap();
    let args = |path: &str| {
        vec![
            "scan".to_string(),
            "--n-max".into(), "3".into(),
            "--primes".into(), "3".into(),
            "--series-order".into(), "8".into(),
            "--specializations".into(), "2".into(),
            "--seed".into(), "7".into(),
            "--json".into(), path.into(),
        ]
    };
    let first = dir.path().join("a.json");
    let second = dir.path().join("b.json");
    for path in [&first, &second] {
        let args = args(path.to_str().unwrap());
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(exit_code(&qcong(&args)), 0);
    }
    assert_eq!(
        parse_report(&first).without_timings(),
        parse_report(&second).without_timings()
    );
}

#[test]
fn scan_reports_an_unwritable_output_path() {
    let output = qcong(&["scan", "--n-max", "0", "--json", "/nonexistent-dir/out.json"]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("cannot write"));
}

#[test]
fn scan_formats_cover_json_markdown_and_plain() {
    let base = [
        "scan",
        "--n-max", "3",
        "--primes", "3",
        "--series-order", "8",
        "--specializations", "2",
    ];
    let with = |fmt: &'static str| {
        let mut args = base.to_vec();
        args.extend(["--format", fmt]);
        args
    };

    let output = qcong(&with("json"));
    assert_eq!(exit_code(&output), 0);
    let report: suite::Report = serde_json::from_str(&stdout(&output)).expect("stdout is JSON");
    assert!(report.all_pass());

    let output = qcong(&with("markdown"));
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("| claim | instance | result | subchecks | time (ms) |"));
    assert!(text.contains("## Summary"));

    let output = qcong(&with("plain"));
    assert_eq!(exit_code(&output), 0);
    assert!(stdout(&output).contains("thm1 n=3: PASS"));
}

#[test]
fn environment_variables_fill_in_defaults_but_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("env.json");
    let run = |extra: &[&str], envs: &[(&str, &str)]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_qcong"));
        cmd.args([
            "scan",
            "--n-max", "0",
            "--json", json.to_str().unwrap(),
        ])
        .args(extra)
        .env_remove("QCONG_SEED")
        .env_remove("QCONG_SERIES_ORDER");
        for (k, v) in envs {
            cmd.env(k, v);
        }
        let output = cmd.output().expect("binary runs");
        assert_eq!(output.status.code(), Some(0));
        parse_report(&json)
    };

    let report = run(&[], &[]);
    assert_eq!(report.seed, 42, "built-in default");
    assert_eq!(report.config.series_order, 40);

    let report = run(&[], &[("QCONG_SEED", "9"), ("QCONG_SERIES_ORDER", "12")]);
    assert_eq!(report.seed, 9, "environment overrides the default");
    assert_eq!(report.config.series_order, 12);

    let report = run(&["--seed", "5"], &[("QCONG_SEED", "9")]);
    assert_eq!(report.seed, 5, "flag overrides the environment");
}

#[test]
fn gr_checks_both_identities_at_order_zero() {
    let output = qcong(&["gr", "--order", "0", "--trials", "1"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("gr order=0: PASS"));
    assert!(text.contains("gr_a order=0: PASS"));
    assert!(text.contains("through q^0"));
}

#[test]
fn gr_skips_degenerate_specializations_with_a_note() {
    // Seed 1 deterministically draws a tuple with b*f = a, which makes a
    // denominator product vanish; the draw must be skipped, not failed.
    let output = qcong(&["gr", "--order", "4", "--trials", "2", "--seed", "1"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("skipped"));
    assert!(text.contains("degenerate specialization"));
    assert!(text.contains("gr order=4: PASS"));
}
