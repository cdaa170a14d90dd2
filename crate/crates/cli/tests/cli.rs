//! End-to-end tests driving the installed binary through its public
//! interface: argument parsing, output formats, and exit codes.

use std::process::{Command, Output};

fn qcrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcrank"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_lines(output: &Output) -> Vec<String> {
    String::from_utf8(output.stdout.clone())
        .expect("stdout is utf-8")
        .lines()
        .map(str::to_string)
        .collect()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn verify_single_case_emits_canonical_json() {
    let out = qcrank(&["verify", "--case", "eq-2-3", "--order", "40"]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 1);
    let value: serde_json::Value = serde_json::from_str(&lines[0]).expect("valid json");
    assert_eq!(value["id"], "eq-2-3");
    assert_eq!(value["order"], 40);
    assert_eq!(value["status"], "verified");
    assert!(value["first_mismatch"].is_null());
    assert!(value["elapsed_ms"].is_u64());
    // Canonical key order: parse -> reserialize reproduces the bytes.
    assert_eq!(serde_json::to_string(&value).unwrap(), lines[0]);
}

#[test]
fn verify_glob_reports_every_match_in_registry_order() {
    let out = qcrank(&["verify", "--case", "eq-2-*", "--order", "25"]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 13, "eq-2-* covers exactly thirteen cases");
    let ids: Vec<String> = lines
        .iter()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            v["id"].as_str().unwrap().to_string()
        })
        .collect();
    assert_eq!(ids[0], "eq-2-3");
    assert_eq!(ids[12], "eq-2-15");
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), 13, "no duplicate reports");
}

#[test]
fn verify_unknown_id_exits_two_and_lists_known_ids() {
    let out = qcrank(&["verify", "--case", "no-such-id"]);
    assert_eq!(exit_code(&out), 2);
    assert!(out.stdout.is_empty(), "errors must not pollute stdout");
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("no registry case matches"));
    assert!(stderr.contains("eq-1-6"));
    assert!(stderr.contains("ramanujan-5n4"));
}

#[test]
fn verify_rejects_nonpositive_order() {
    let out = qcrank(&["verify", "--case", "eq-2-3", "--order", "0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_all_at_reduced_order_verifies_whole_registry() {
    let out = qcrank(&["verify-all", "--order", "12", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(
        lines[0],
        "id,order,status,mismatch_exponent,mismatch_lhs,mismatch_rhs,elapsed_ms"
    );
    assert_eq!(lines.len(), 40, "header plus one row per registry case");
    for row in &lines[1..] {
        assert!(row.contains(",12,verified,"), "unexpected row: {row}");
    }
}

#[test]
fn table_matches_hand_computed_rows() {
    let out = qcrank(&["table", "--k", "2", "--m", "5", "--n-max", "2"]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "n,r0,r1,r2,r3,r4,sum");
    assert_eq!(lines[1], "0,0,0,0,0,0,0");
    assert_eq!(lines[2], "1,0,1,0,0,0,1");
    assert_eq!(lines[3], "2,1,1,2,0,0,4");
}

#[test]
fn table_self_check_passes_against_enumeration() {
    let out = qcrank(&[
        "table",
        "--k",
        "3",
        "--m",
        "5",
        "--n-max",
        "6",
        "--self-check",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let stderr = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(stderr.contains("self-check passed"));
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 7);
    let row: serde_json::Value = serde_json::from_str(&lines[3]).unwrap();
    assert_eq!(row["n"], 3);
    assert_eq!(row["values"].as_array().unwrap().len(), 5);
    // Parse -> reserialize is byte-identical here too.
    assert_eq!(serde_json::to_string(&row).unwrap(), lines[3]);
}

#[test]
fn table_rejects_fewer_than_two_colors() {
    let out = qcrank(&["table", "--k", "1", "--n-max", "3"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn congruence_holds_and_reports_json() {
    let out = qcrank(&["congruence", "--case", "eq-1-2-i4", "--n-max", "30"]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 1);
    let value: serde_json::Value = serde_json::from_str(&lines[0]).unwrap();
    assert_eq!(value["id"], "eq-1-2-i4");
    assert_eq!(value["holds"], true);
    assert_eq!(value["n_max"], 30);
    assert_eq!(value["violations"].as_array().unwrap().len(), 0);
    assert_eq!(serde_json::to_string(&value).unwrap(), lines[0]);
}

#[test]
fn congruence_unknown_id_exits_two() {
    let out = qcrank(&["congruence", "--case", "eq-9-9"]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("unknown congruence id"));
    assert!(stderr.contains("eq-1-5-t2"));
}

#[test]
fn series_prints_pentagonal_expansion() {
    let out = qcrank(&["series", "--expr", "P(1,1)", "--order", "8"]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    let expected = [1i64, -1, -1, 0, 0, 1, 0, 1];
    assert_eq!(lines.len(), expected.len());
    for (e, (line, want)) in lines.iter().zip(expected).enumerate() {
        assert_eq!(line, &format!("q^{e}: {want}"));
    }
}

#[test]
fn series_csv_prints_partition_numbers() {
    let out = qcrank(&[
        "series", "--expr", "1/P(1,1)", "--order", "6", "--format", "csv",
    ]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(
        lines,
        vec![
            "exponent,coefficient",
            "0,1",
            "1,1",
            "2,2",
            "3,3",
            "4,5",
            "5,7"
        ]
    );
}

#[test]
fn series_triple_product_cancels_theta() {
    let out = qcrank(&[
        "series",
        "--expr",
        "P(2,5)*P(3,5)*P(5,5) - theta",
        "--order",
        "100",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    for line in stdout_lines(&out) {
        let value: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(value["coefficient"], "0", "nonzero term: {line}");
    }
}

#[test]
fn series_parse_error_exits_two_with_position() {
    let out = qcrank(&["series", "--expr", "1 + & q", "--order", "5"]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("position 4"));
}

#[test]
fn missing_subcommand_is_a_usage_error() {
    let out = qcrank(&[]);
    assert_eq!(exit_code(&out), 2);
}
