//! End-to-end tests of the `orthostep` binary: output bytes, schemas and
//! exit codes.

use std::process::{Command, Output};

use orthostep_cli::output::{
    OracleRunDto, PredictDto, ProfileDto, ScanRecordDto, ScanSummaryDto, VerifyDto,
};

fn orthostep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orthostep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

#[test]
fn compute_text_matches_the_block_example() {
    let out = orthostep(&["compute", "7", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 2 3 4 4 4 4 3 2 1\n");
}

#[test]
fn compute_json_round_trips_byte_identically() {
    let out = orthostep(&["compute", "35", "21", "15", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let dto: ProfileDto = serde_json::from_str(text.trim_end()).expect("valid schema");
    assert_eq!(dto.periods, vec![35, 21, 15]);
    assert_eq!(dto.scale, 1);
    assert_eq!(dto.length, 57);
    assert_eq!(dto.values.len(), 57);
    assert_eq!(dto.sign_class, "nonnegative_with_zeros");
    assert!(dto.palindromic);
    let reserialized = format!("{}\n", serde_json::to_string(&dto).unwrap());
    assert_eq!(reserialized, text, "JSON round-trip must be byte-identical");
}

#[test]
fn compute_scaled_pair_reports_original_units() {
    let out = orthostep(&["compute", "6", "10", "--format", "json"]);
    let dto: ProfileDto = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert_eq!(dto.scale, 2);
    assert_eq!(dto.length, 14);
    assert_eq!(dto.values, vec![1, 2, 3, 3, 3, 2, 1]);
}

#[test]
fn compute_rejects_bad_usage() {
    let out = orthostep(&["compute", "0", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let out = orthostep(&["compute", "1", "2", "3", "4", "5"]);
    assert_eq!(out.status.code(), Some(1));
    let out = orthostep(&["compute", "7", "--strategy", "nonsense"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn compute_strategies_agree() {
    let product = orthostep(&["compute", "35", "21", "15"]);
    let chain = orthostep(&["compute", "35", "21", "15", "--strategy", "chain"]);
    let oracle = orthostep(&["compute", "35", "21", "15", "--strategy", "oracle"]);
    assert_eq!(stdout(&product), stdout(&chain));
    assert_eq!(stdout(&product), stdout(&oracle));
}

#[test]
fn compute_csv_has_the_plot_schema() {
    let out = orthostep(&["compute", "6", "10", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("index,start,end,value"));
    assert_eq!(lines.next(), Some("0,0,2,1"));
    assert_eq!(text.lines().last(), Some("6,12,14,1"));
}

#[test]
fn predict_reports_class_and_witness() {
    let out = orthostep(&["predict", "35", "21", "15"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("sign class: nonnegative_with_zeros"));

    let out = orthostep(&["predict", "26", "24", "9"]);
    let text = stdout(&out);
    assert!(text.starts_with("sign class: strictly_positive"));
    assert!(text.contains("witness: gcd(26, 9) = 1"));

    let out = orthostep(&["predict", "4", "8", "13", "--format", "json"]);
    let dto: PredictDto = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert_eq!(dto.sign_class, "strictly_positive");
    let divisor_pair = dto
        .pairs
        .iter()
        .find(|p| p.clause == "gcd_equals_min")
        .expect("(4,8) pair");
    assert_eq!(divisor_pair.periods, [4, 8]);

    let out = orthostep(&["predict", "26", "24"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_pair_agrees() {
    let out = orthostep(&["verify", "3", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let dto: VerifyDto = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert_eq!(dto.values, vec![1, 2, 2, 1]);
    assert_eq!(dto.oracle.minimal_length, Some(4));
    assert_eq!(dto.oracle.dimension, Some(1));
    assert!(dto.oracle.agree);
    assert!(dto.checks.iter().all(|c| c.pass));
}

#[test]
fn verify_golden_triple_agrees() {
    let out = orthostep(&["verify", "35", "21", "15"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("oracle minimal length: 57"));
    assert!(text.contains("nullspace dimension: 1"));
    assert!(text.contains("profiles: agree"));
}

#[test]
fn verify_with_insufficient_bound_fails_loudly() {
    let out = orthostep(&["verify", "3", "2", "--lmax", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("no nontrivial profile below"));
}

#[test]
fn verify_rejects_oracle_as_builder_strategy() {
    let out = orthostep(&["verify", "3", "2", "--strategy", "oracle"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn oracle_reports_found_and_not_found() {
    let out = orthostep(&["oracle", "5", "3", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let dto: OracleRunDto = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert!(dto.found);
    assert_eq!(dto.minimal_length, Some(8));
    assert_eq!(dto.dimension, Some(1));
    assert_eq!(dto.values, vec![1, 3, 5, 6, 6, 5, 3, 1]);

    let out = orthostep(&["oracle", "3", "2", "--lmax", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let dto: OracleRunDto = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert!(!dto.found);
    assert_eq!(dto.minimal_length, None);
}

#[test]
fn scan_small_bounds_agree() {
    let out = orthostep(&["scan", "--n", "3", "--bound", "12", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines: Vec<&str> = text.lines().collect();
    let summary: ScanSummaryDto = serde_json::from_str(lines.pop().unwrap()).unwrap();
    assert_eq!(summary.disagreements, 0);
    assert_eq!(summary.total, lines.len() as u64);
    for line in lines {
        let record: ScanRecordDto = serde_json::from_str(line).unwrap();
        assert!(record.agree, "{:?}", record.tuple);
    }

    // The single degenerate tuple at bound 2 normalizes to (1,1,1).
    let out = orthostep(&["scan", "--n", "3", "--bound", "2", "--format", "json"]);
    let text = stdout(&out);
    let first: ScanRecordDto = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(first.tuple, vec![2, 2, 2]);
    assert_eq!(first.computed, "strictly_positive");
}

#[test]
fn scan_four_periods_respects_the_nonnegativity_guarantee() {
    let out = orthostep(&["scan", "--n", "4", "--bound", "8", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("t1,t2,t3,t4,predicted,computed,agree"));
    for line in text.lines().skip(1) {
        assert!(line.ends_with(",true"), "{line}");
    }
}

#[test]
fn scan_rejects_bad_bounds() {
    assert_eq!(
        orthostep(&["scan", "--n", "3", "--bound", "100"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        orthostep(&["scan", "--n", "5", "--bound", "6"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        orthostep(&["scan", "--n", "3", "--bound", "1"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn family_builds_and_classifies() {
    let out = orthostep(&["family", "2", "3", "5", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("periods: 30 42 70 105"));
    assert!(text.contains("sign class: mixed_sign"));

    let out = orthostep(&["family", "2", "3", "5", "11"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("periods: 30 66 110 165"));

    let out = orthostep(&["family", "2", "4", "5", "7"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(orthostep(&["--help"]).status.code(), Some(0));
    assert_eq!(orthostep(&[]).status.code(), Some(1));
}
