use std::process::{Command, Output};

use abcensus_cli::render::Table;

fn run(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_abcensus"));
    cmd.args(args)
        .env_remove("ABCENSUS_SPECTRUM_CAP")
        .env_remove("ABCENSUS_ORACLE_CAP")
        .env_remove("ABCENSUS_TABLE_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args, &[]);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    run(args, &[]).status.code()
}

#[test]
fn compute_values() {
    assert_eq!(stdout(&["compute", "4x2", "c"]), "6\n");
    assert_eq!(stdout(&["compute", "6x6", "c"]), "20\n");
    assert_eq!(stdout(&["compute", "2x2x2", "c"]), "8\n");
    assert_eq!(stdout(&["compute", "4x2", "A"]), "23/8\n");
    assert_eq!(stdout(&["compute", "2x2", "s"]), "5\n");
    assert_eq!(stdout(&["compute", "4x2", "c2"]), "6\n");
    assert_eq!(stdout(&["compute", "4x2", "o_delta", "2"]), "3\n");
    assert_eq!(stdout(&["compute", "4x2", "c_delta", "4"]), "2\n");
    assert_eq!(stdout(&["compute", "6", "phi_r", "--r", "2"]), "24\n");
    assert_eq!(stdout(&["--bigint", "compute", "6x6", "c"]), "20\n");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["compute", "4x2", "c"]), Some(0));
    assert_eq!(code(&["compute", "4xa", "c"]), Some(2));
    assert_eq!(code(&["compute", "4x2", "o_delta"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["compute", "4x2", "o_delta", "3"]), Some(3));
    assert_eq!(code(&["compute", "2x2x2", "s"]), Some(3));
    assert_eq!(code(&["--spectrum-cap", "2", "spectrum", "12"]), Some(4));
    assert_eq!(
        code(&["compute", "18446744073709551557x18446744073709551557x7", "c"]),
        Some(5)
    );
    assert_eq!(code(&["--out", "/nonexistent/dir/out.csv", "spectrum", "4x2"]), Some(1));
}

#[test]
fn caps_from_environment() {
    let capped = run(&["table", "s", "1..4", "1..4"], &[("ABCENSUS_TABLE_CAP", "3")]);
    assert_eq!(capped.status.code(), Some(4));
    let flag_wins = run(
        &["--table-cap", "16", "table", "s", "1..4", "1..4"],
        &[("ABCENSUS_TABLE_CAP", "3")],
    );
    assert_eq!(flag_wins.status.code(), Some(0));
    let spectrum = run(&["spectrum", "12"], &[("ABCENSUS_SPECTRUM_CAP", "2")]);
    assert_eq!(spectrum.status.code(), Some(4));
}

#[test]
fn spectrum_csv_round_trip() {
    let text = stdout(&["spectrum", "6x4"]);
    let table = Table::from_csv(&text).unwrap();
    assert_eq!(table.to_csv().unwrap(), text);
    assert_eq!(table.header, ["delta", "o_delta", "c_delta"]);
    assert_eq!(table.rows.last().unwrap(), &["total", "24", "12"]);
}

#[test]
fn spectrum_json_matches_csv() {
    let csv = Table::from_csv(&stdout(&["spectrum", "6x4"])).unwrap();
    let json: serde_json::Value = serde_json::from_str(&stdout(&["spectrum", "6x4", "--format", "json"])).unwrap();
    assert_eq!(json["spec"], serde_json::json!([6, 4]));
    assert_eq!(json["exponent"], "12");
    let entries = json["entries"].as_array().unwrap();
    assert_eq!(entries.len(), csv.rows.len() - 1);
    for (e, row) in entries.iter().zip(&csv.rows) {
        assert_eq!([&e["delta"], &e["o"], &e["c"]].map(|v| v.as_str().unwrap().to_string()), row[..]);
    }
    assert_eq!(json["totals"]["order_sum"], "24");
    assert_eq!(json["totals"]["cyclic_total"], "12");
}

#[test]
fn table_outputs() {
    let t = Table::from_csv(&stdout(&["table", "phi_r", "--r", "2", "1..6"])).unwrap();
    let values: Vec<&str> = t.rows.iter().map(|r| r[1].as_str()).collect();
    assert_eq!(values, ["1", "3", "8", "12", "24", "24"]);

    let t = Table::from_csv(&stdout(&["table", "c_delta", "--delta", "4", "4", "1..4"])).unwrap();
    let values: Vec<&str> = t.rows.iter().map(|r| r[2].as_str()).collect();
    assert_eq!(values, ["1", "2", "1", "6"]);

    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["table", "c", "2", "1..3", "--format", "json"])).unwrap();
    assert_eq!(json["quantity"], "c");
    assert_eq!(json["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "oracle", "--max-n", "6", "--seed", "7"][..],
        &["table", "A", "1..5", "1..5"],
        &["spectrum", "12x18x4", "--format", "json"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spectrum.csv");
    let out = run(&["--out", path.to_str().unwrap(), "spectrum", "4x2"], &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "delta,o_delta,c_delta\n1,1,1\n2,3,3\n4,4,2\ntotal,8,6\n"
    );
}

#[test]
fn verify_small_suites() {
    let text = stdout(&["verify", "jordan", "--max-n", "12"]);
    assert!(text.ends_with("0 failures\n"), "{text}");
    assert!(text.contains("suite jordan:"));
    assert_eq!(code(&["verify", "no-such-suite"]), Some(2));
}
