//! End-to-end tests of the binary: documented outputs, format shapes, and
//! the exit-status discipline (0 success, 1 domain, 2 I/O or parse).

use std::process::Command;

use paperweight::{compute_weights, Rational, SchemeSpec};

fn paperweight(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_paperweight"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        String::from_utf8(out.stderr).expect("stderr is UTF-8"),
    )
}

fn assert_single_diagnostic(stderr: &str) {
    assert_eq!(stderr.lines().count(), 1, "stderr: {stderr:?}");
    assert!(stderr.starts_with("error: "), "stderr: {stderr:?}");
}

#[test]
fn weights_prints_the_vector() {
    let (code, stdout, stderr) = paperweight(&["weights", "--k", "3", "--scheme", "poly2", "--x", "2"]);
    assert_eq!((code, stdout.as_str(), stderr.as_str()), (0, "4/7 2/7 1/7\n", ""));
}

#[test]
fn weights_handles_a_single_author() {
    let (code, stdout, _) = paperweight(&["weights", "--k", "1", "--scheme", "equal"]);
    assert_eq!((code, stdout.as_str()), (0, "1\n"));
}

#[test]
fn weights_rejects_type2_below_one() {
    let (code, stdout, stderr) = paperweight(&["weights", "--k", "3", "--scheme", "poly2", "--x", "1/2"]);
    assert_eq!(code, 1);
    assert!(stdout.is_empty());
    assert_single_diagnostic(&stderr);
    assert!(stderr.contains("x >= 1"), "stderr: {stderr:?}");
}

#[test]
fn weights_rejects_missing_and_unexpected_parameters() {
    let (code, _, stderr) = paperweight(&["weights", "--k", "3", "--scheme", "poly2"]);
    assert_eq!(code, 1);
    assert_single_diagnostic(&stderr);

    let (code, _, stderr) = paperweight(&["weights", "--k", "3", "--scheme", "equal", "--x", "2"]);
    assert_eq!(code, 1);
    assert_single_diagnostic(&stderr);
}

#[test]
fn weights_rejects_zero_authors() {
    let (code, _, stderr) = paperweight(&["weights", "--k", "0", "--scheme", "equal"]);
    assert_eq!(code, 1);
    assert_single_diagnostic(&stderr);
}

#[test]
fn unknown_scheme_is_a_usage_error() {
    let (code, _, stderr) = paperweight(&["weights", "--k", "3", "--scheme", "fibonacci"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("fibonacci"));
}

#[test]
fn weights_tsv_labels_each_rank() {
    let (code, stdout, _) = paperweight(&[
        "weights", "--k", "3", "--scheme", "poly2", "--x", "2", "--format", "tsv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "j\tweight\n1\t4/7\n2\t2/7\n3\t1/7\n");
}

#[test]
fn weights_json_carries_scheme_provenance() {
    let (code, stdout, _) = paperweight(&[
        "weights", "--k", "3", "--scheme", "poly2", "--x", "2", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let payload: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(payload["scheme"]["kind"], "poly2");
    assert_eq!(payload["scheme"]["x"], "2");
    assert_eq!(payload["scheme"]["mode"], "exact");
    assert_eq!(payload["k"], 3);
    assert_eq!(payload["weights"][0], serde_json::json!({"j": 1, "weight": "4/7"}));
    assert_eq!(payload["weights"][2]["weight"], "1/7");
}

#[test]
fn weights_float_json_uses_numbers() {
    let (code, stdout, _) = paperweight(&[
        "weights", "--k", "2", "--scheme", "poly2", "--x", "2.5e0", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let payload: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(payload["scheme"]["mode"], "float");
    let w1 = payload["weights"][0]["weight"].as_f64().expect("a number");
    assert!((w1 - 2.5 / 3.5).abs() < 1e-12);
}

#[test]
fn table_matches_the_golden_file() {
    let (code, stdout, stderr) = paperweight(&["table"]);
    assert_eq!(code, 0, "stderr: {stderr}");
    assert_eq!(stdout, include_str!("golden/table_x2_k10.txt"));
}

#[test]
fn table_at_half_is_byte_identical_to_default() {
    let (_, default_out, _) = paperweight(&["table"]);
    let (code, half_out, _) = paperweight(&["table", "--x", "1/2"]);
    assert_eq!(code, 0);
    assert_eq!(default_out, half_out);
    let (code, decimal_out, _) = paperweight(&["table", "--x", "0.5"]);
    assert_eq!(code, 0);
    assert_eq!(default_out, decimal_out);
}

#[test]
fn table_at_one_is_equal_shares() {
    let (code, stdout, _) = paperweight(&["table", "--x", "1", "--kmax", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1\n1/2 1/2\n1/3 1/3 1/3\n");
}

#[test]
fn table_cells_parse_back_to_the_computed_weights() {
    let (code, stdout, _) = paperweight(&["table"]);
    assert_eq!(code, 0);
    let spec = SchemeSpec::polynomial_for("2".parse().unwrap()).unwrap();
    for (row, line) in stdout.lines().enumerate() {
        let k = row + 1;
        let parsed: Vec<Rational> = line
            .split(' ')
            .map(|cell| cell.parse().expect("cell parses as a fraction"))
            .collect();
        let expected = compute_weights(&spec, k).unwrap();
        assert_eq!(parsed.len(), k);
        assert_eq!(&parsed, expected.as_exact().unwrap().weights());
    }
}

#[test]
fn table_rejects_bad_ranges() {
    let (code, _, stderr) = paperweight(&["table", "--kmax", "0"]);
    assert_eq!(code, 1);
    assert_single_diagnostic(&stderr);

    let (code, _, stderr) = paperweight(&["table", "--x", "0"]);
    assert_eq!(code, 1);
    assert_single_diagnostic(&stderr);

    let (code, _, stderr) = paperweight(&["table", "--x", "-3"]);
    assert_eq!(code, 1);
    assert_single_diagnostic(&stderr);
}

#[test]
fn table_tsv_is_long_form() {
    let (code, stdout, _) = paperweight(&["table", "--kmax", "2", "--format", "tsv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "k\tj\tweight\n1\t1\t1\n2\t1\t2/3\n2\t2\t1/3\n");
}

#[test]
fn table_json_nests_rows_under_provenance() {
    let (code, stdout, _) = paperweight(&["table", "--kmax", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let payload: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(payload["scheme"]["kind"], "poly2");
    assert_eq!(payload["scheme"]["x"], "2");
    assert_eq!(payload["k_max"], 3);
    assert_eq!(payload["rows"][2]["k"], 3);
    assert_eq!(payload["rows"][2]["weights"][0], "4/7");
}

#[test]
fn figure_emits_first_and_last_series() {
    let (code, stdout, _) = paperweight(&["figure"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "k\tw_1\tw_k");
    assert_eq!(lines[1], "1\t1\t1");
    assert_eq!(lines[5], "5\t16/31\t1/31");
    assert_eq!(lines[10], "10\t512/1023\t1/1023");
    assert_eq!(lines.len(), 11);
}

#[test]
fn figure_text_format_matches_tsv() {
    let (_, tsv, _) = paperweight(&["figure", "--format", "tsv"]);
    let (code, text, _) = paperweight(&["figure", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(tsv, text);
}

#[test]
fn figure_json_carries_both_series() {
    let (code, stdout, _) = paperweight(&["figure", "--kmax", "5", "--format", "json"]);
    assert_eq!(code, 0);
    let payload: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(payload["scheme"]["kind"], "poly2");
    assert_eq!(payload["k_max"], 5);
    assert_eq!(payload["points"][4]["k"], 5);
    assert_eq!(payload["points"][4]["w_1"], "16/31");
    assert_eq!(payload["points"][4]["w_k"], "1/31");
}

#[test]
fn verify_passes_with_defaults() {
    let (code, stdout, stderr) = paperweight(&["verify"]);
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stderr.is_empty());
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 6);
    for name in [
        "normalization",
        "monotonicity",
        "equal-weight-limit",
        "geometric-specialization",
        "duality",
        "ratio-law",
    ] {
        assert!(
            lines.iter().any(|l| l.starts_with(&format!("{name}: PASS ("))),
            "missing check {name} in {stdout}"
        );
    }
}

#[test]
fn verify_accepts_several_parameters() {
    let (code, _, _) = paperweight(&["verify", "--kmax", "20", "--x", "2", "--x", "3/2"]);
    assert_eq!(code, 0);
}

#[test]
fn verify_reports_the_self_dual_point() {
    let (code, stdout, _) = paperweight(&["verify", "--kmax", "3", "--x", "1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("trivial fixed point"), "stdout: {stdout}");
    assert!(stdout.contains("normalization: PASS"));
}

#[test]
fn verify_handles_float_parameters() {
    let (code, stdout, _) = paperweight(&["verify", "--kmax", "10", "--x", "1.4142135623730951"]);
    assert_eq!(code, 0, "stdout: {stdout}");
}

#[test]
fn verify_rejects_non_positive_parameters() {
    let (code, _, stderr) = paperweight(&["verify", "--x", "0"]);
    assert_eq!(code, 1);
    assert_single_diagnostic(&stderr);

    let (code, _, stderr) = paperweight(&["verify", "--kmax", "0"]);
    assert_eq!(code, 1);
    assert_single_diagnostic(&stderr);
}

#[test]
fn verify_json_reports_every_check() {
    let (code, stdout, _) = paperweight(&["verify", "--kmax", "5", "--format", "json"]);
    assert_eq!(code, 0);
    let payload: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(payload["k_max"], 5);
    assert_eq!(payload["x"], serde_json::json!(["2"]));
    assert_eq!(payload["all_passed"], true);
    assert_eq!(payload["checks"].as_array().unwrap().len(), 6);
    assert_eq!(payload["checks"][0]["passed"], true);
}

fn write_corpus(contents: &str) -> (tempfile::TempDir, String) {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("corpus.csv");
    std::fs::write(&path, contents).expect("corpus written");
    let path = path.to_str().expect("UTF-8 path").to_string();
    (dir, path)
}

const SAMPLE: &str = "paper_id,authors\np1,alice|bob|carol\np2,\"bob|dana\"\n";

#[test]
fn score_prints_a_ranked_tsv_report() {
    let (_dir, path) = write_corpus(SAMPLE);
    let (code, stdout, stderr) = paperweight(&[
        "score", "--input", &path, "--scheme", "poly2", "--x", "2",
    ]);
    assert_eq!(code, 0, "stderr: {stderr}");
    assert_eq!(
        stdout,
        "author_id\ttotal_credit\tpaper_count\n\
         bob\t20/21\t2\nalice\t4/7\t1\ndana\t1/3\t1\ncarol\t1/7\t1\n"
    );
}

#[test]
fn score_json_carries_scheme_provenance() {
    let (_dir, path) = write_corpus(SAMPLE);
    let (code, stdout, _) = paperweight(&[
        "score", "--input", &path, "--scheme", "poly2", "--x", "2", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let payload: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(payload["scheme"]["kind"], "poly2");
    assert_eq!(payload["scheme"]["x"], "2");
    assert_eq!(payload["papers"], 2);
    assert_eq!(payload["entries"][0]["author_id"], "bob");
    assert_eq!(payload["entries"][0]["total_credit"], "20/21");
}

#[test]
fn score_accepts_an_empty_corpus() {
    let (_dir, path) = write_corpus("paper_id,authors\n");
    let (code, stdout, _) = paperweight(&["score", "--input", &path, "--scheme", "equal"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "author_id\ttotal_credit\tpaper_count\n");
}

#[test]
fn score_names_the_malformed_row() {
    let (_dir, path) = write_corpus("paper_id,authors\np1,alice\nbroken\n");
    let (code, _, stderr) = paperweight(&["score", "--input", &path, "--scheme", "equal"]);
    assert_eq!(code, 2);
    assert_single_diagnostic(&stderr);
    assert!(stderr.contains("row 3"), "stderr: {stderr:?}");
}

#[test]
fn score_reports_missing_files() {
    let (code, _, stderr) = paperweight(&[
        "score", "--input", "/nonexistent/corpus.csv", "--scheme", "equal",
    ]);
    assert_eq!(code, 2);
    assert_single_diagnostic(&stderr);
    assert!(stderr.contains("/nonexistent/corpus.csv"));
}

#[test]
fn score_scheme_errors_are_domain_errors() {
    let (_dir, path) = write_corpus(SAMPLE);
    let (code, _, stderr) = paperweight(&[
        "score", "--input", &path, "--scheme", "poly2", "--x", "1/2",
    ]);
    assert_eq!(code, 1);
    assert_single_diagnostic(&stderr);

    let (code, _, stderr) = paperweight(&[
        "score", "--input", &path, "--scheme", "harmonic", "--x", "2",
    ]);
    assert_eq!(code, 1);
    assert_single_diagnostic(&stderr);
}

#[test]
fn score_text_format_matches_tsv() {
    let (_dir, path) = write_corpus(SAMPLE);
    let (_, tsv, _) = paperweight(&["score", "--input", &path, "--scheme", "equal"]);
    let (code, text, _) = paperweight(&[
        "score", "--input", &path, "--scheme", "equal", "--format", "text",
    ]);
    assert_eq!(code, 0);
    assert_eq!(tsv, text);
}
