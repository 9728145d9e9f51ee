use std::process::{Command, Output};

use blockedit::code::is_codeword;
use blockedit::{BitString, CodeParams};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blockedit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

const D1_5_20: [&str; 8] = ["--family", "del", "--delta", "1", "--ell", "5", "--n", "20"];
const WORKED_X: &str = "10101001110001100100";
const WORKED_Y: &str = "10010011100010100";

fn with<'a>(base: &[&'a str], extra: &[&'a str]) -> Vec<&'a str> {
    base.iter().chain(extra).copied().collect()
}

#[test]
fn encode_outputs_codeword() {
    let out = run(&["encode", "--family", "del", "--delta", "1", "--ell", "3", "--n", "6", "--message", "101"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "101001");
}

#[test]
fn encode_rejects_wrong_length() {
    let out = run(&["encode", "--family", "del", "--delta", "1", "--ell", "3", "--n", "6", "--message", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("length mismatch"));
}

#[test]
fn encode_double_insertion_code() {
    let out = run(&["encode", "--family", "ins2", "--ell", "9", "--n", "18", "--message", "1011001"]);
    assert_eq!(out.status.code(), Some(0));
    let x: BitString = stdout(&out).trim().parse().unwrap();
    assert_eq!(x.len(), 18);
    assert!(is_codeword(&CodeParams::insertion2(9, 18).unwrap(), &x));
}

#[test]
fn decode_worked_example() {
    let out = run(&with(&["decode"], &with(&D1_5_20, &["--received", WORKED_Y])));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "del=(1,0,1,1) ins=(0,0,0,0)");

    let out = run(&with(&["decode"], &with(&D1_5_20, &["--received", WORKED_X])));
    assert_eq!(stdout(&out).trim(), "del=(0,0,0,0) ins=(0,0,0,0)");
}

#[test]
fn decode_malformed_input() {
    let out = run(&with(&["decode"], &with(&D1_5_20, &["--received", "1001"])));
    assert_eq!(out.status.code(), Some(3));
    let out = run(&with(&["decode"], &with(&D1_5_20, &["--received", "10a1"])));
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn decode_json() {
    let out = run(&with(&["--format", "json", "decode"], &with(&D1_5_20, &["--received", WORKED_Y])));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["deletions"], serde_json::json!([1, 0, 1, 1]));
    assert_eq!(v["received"], WORKED_Y);
}

#[test]
fn corrupt_with_pattern() {
    let args = with(&["corrupt"], &with(&D1_5_20, &["--codeword", WORKED_X, "--pattern", "1=del@3,3=del@5,4=del@1"]));
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), WORKED_Y);

    let out = run(&with(&["corrupt"], &with(&D1_5_20, &["--codeword", WORKED_X, "--pattern", ""])));
    assert_eq!(stdout(&out).trim(), WORKED_X);
}

#[test]
fn corrupt_random_replays() {
    let args = with(&["corrupt"], &with(&D1_5_20, &["--codeword", WORKED_X, "--random", "--seed", "7"]));
    let a = stdout(&run(&args));
    assert_eq!(a, stdout(&run(&args)));
    // the printed pattern reproduces the output
    let mut lines = a.lines();
    let y = lines.next().unwrap();
    let pattern = lines.next().unwrap().strip_prefix("pattern ").unwrap();
    let replay = run(&with(&["corrupt"], &with(&D1_5_20, &["--codeword", WORKED_X, "--pattern", pattern])));
    assert_eq!(stdout(&replay).trim(), y);
}

#[test]
fn corrupt_rejects_bad_pattern() {
    let out = run(&with(&["corrupt"], &with(&D1_5_20, &["--codeword", WORKED_X, "--pattern", "1=del@9"])));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    for args in [
        ["verify", "--family", "del", "--delta", "1", "--ell", "3", "--n", "6"],
        ["verify", "--family", "del", "--delta", "2", "--ell", "5", "--n", "10"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
        assert!(stdout(&out).contains("PASS"));
    }
    let out = run(&[
        "verify", "--family", "del", "--delta", "1", "--ell", "3", "--n", "6", "--mutate", "0", "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn verify_json_report() {
    let out = run(&[
        "--format", "json", "verify", "--family", "del", "--delta", "1", "--ell", "3", "--n", "6",
        "--mutate", "0", "-1",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["kind"], "decoder_exhaustive");
    assert_eq!(v["passed"], false);
    assert!(v["counterexample"]["x"].is_string());
}

#[test]
fn bounds_caps() {
    let out = run(&["bounds", "--delta", "1", "--ell", "3", "--n", "9"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("thm2 4.41504 bits, cap 24"));
    let out = run(&["bounds", "--delta", "1", "--ell", "2", "--n", "8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn maxcode_small() {
    let out = run(&["maxcode", "--ell", "3", "--n", "6", "--delta", "1", "--block-decodable"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("code_size = 8"));
    let out = run(&["--format", "json", "maxcode", "--ell", "3", "--n", "6", "--delta", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["metrics"]["code_size"], 16);
    assert_eq!(v["witness"].as_array().unwrap().len(), 16);
}

#[test]
fn stress_runs_clean() {
    let out = run(&["stress", "--family", "mix1", "--ell", "8", "--n", "800", "--trials", "200", "--no-scaling"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 mismatches"));
}

#[test]
fn missing_delta_is_usage_error() {
    let out = run(&["encode", "--family", "del", "--ell", "3", "--n", "6", "--message", "101"]);
    assert_eq!(out.status.code(), Some(2));
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../../../docs/report.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).unwrap()
}

#[test]
fn json_outputs_match_schema() {
    let validator = schema();
    let commands: Vec<Vec<&str>> = vec![
        with(&["encode"], &with(&D1_5_20, &["--message", "10101101100"])),
        with(&["decode"], &with(&D1_5_20, &["--received", WORKED_Y])),
        with(&["corrupt"], &with(&D1_5_20, &["--codeword", WORKED_X, "--random", "--seed", "3"])),
        vec!["verify", "--family", "mix1", "--ell", "7", "--n", "14"],
        vec!["verify", "--family", "del", "--delta", "1", "--ell", "3", "--n", "6", "--mutate", "0", "1"],
        vec!["bounds", "--delta", "2", "--ell", "5", "--n", "20"],
        vec!["maxcode", "--ell", "3", "--n", "6", "--delta", "1", "--block-decodable"],
        vec!["stress", "--family", "ins2", "--ell", "10", "--n", "200", "--trials", "20"],
    ];
    for args in commands {
        let out = run(&with(&["--format", "json"], &args));
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
    // a mismatched shape is rejected
    assert!(!validator.is_valid(&serde_json::json!({"kind": "decoder_exhaustive"})));
}

#[test]
fn file_input_skips_comments() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    use std::io::Write;
    writeln!(file, "# messages\n101\n\n000").unwrap();
    let path = file.path().to_str().unwrap();
    let out = run(&["encode", "--family", "del", "--delta", "1", "--ell", "3", "--n", "6", "--input", path]);
    assert_eq!(stdout(&out), "101001\n001000\n");
}
