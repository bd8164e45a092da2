//! Set `BLESS=1` to rewrite the golden files from the current binary.

mod common;

use common::{golden_path, run_binary, GOLDEN_CASES};
use jacobi_bc::rational::parse_rational;
use serde_json::Value;

#[test]
fn outputs_match_goldens() {
    let bless = std::env::var_os("BLESS").is_some();
    for (name, args) in GOLDEN_CASES {
        let (code, stdout, _) = run_binary(args);
        assert_eq!(code, 0, "{name}");
        let path = golden_path(name);
        if bless {
            std::fs::write(&path, &stdout).unwrap();
            continue;
        }
        let expected = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(
            String::from_utf8_lossy(&stdout),
            String::from_utf8_lossy(&expected),
            "{name}"
        );
    }
}

#[test]
fn repeated_runs_are_identical() {
    for (_, args) in GOLDEN_CASES {
        assert_eq!(run_binary(args).1, run_binary(args).1);
    }
}

fn collect_rationals(value: &Value, out: &mut Vec<String>) {
    match value {
        Value::String(s) if s.contains('/') => out.push(s.clone()),
        Value::Array(items) => items.iter().for_each(|v| collect_rationals(v, out)),
        Value::Object(map) => map.values().for_each(|v| collect_rationals(v, out)),
        _ => {}
    }
}

#[test]
fn rationals_are_canonical() {
    for args in [
        &[
            "ho", "--system", "bc", "--rank", "2", "--lambda", "2,1", "--k1", "2/4", "--k2",
            "-3/9", "--k3", "5/10",
        ][..],
        &["jack", "--lambda", "3,1", "--nvars", "3", "--k", "6/14"][..],
        &["jacobi1d", "--n", "5", "--alpha", "0.25", "--beta", "3"][..],
    ] {
        let (code, stdout, stderr) = run_binary(args);
        assert_eq!(code, 0, "{}", String::from_utf8_lossy(&stderr));
        let record: Value = serde_json::from_slice(&stdout).unwrap();
        let mut found = Vec::new();
        collect_rationals(&record["payload"], &mut found);
        assert!(!found.is_empty());
        for text in found {
            let value = parse_rational(&text).unwrap();
            assert_eq!(text, format!("{}/{}", value.numer(), value.denom()));
        }
    }
}

#[test]
fn csv_and_json_tables() {
    let (_, csv, _) = run_binary(&["limits", "monomial", "--n", "2", "--sweep", "10,100"]);
    let csv = String::from_utf8(csv).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "s,deviation,skipped");
    assert_eq!(lines.len(), 3);
    let (_, json, _) = run_binary(&[
        "limits", "hermite", "--n", "2", "--sweep", "10,100", "--format", "json",
    ]);
    let record: Value = serde_json::from_slice(&json).unwrap();
    assert_eq!(record["payload"]["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn error_streams_and_codes() {
    let (code, stdout, stderr) = run_binary(&[
        "ho", "--system", "bc", "--rank", "1", "--lambda", "1", "--k1", "-1",
    ]);
    assert_eq!(code, 3);
    assert!(stdout.is_empty());
    assert!(String::from_utf8_lossy(&stderr).starts_with("error:"));
    let (code, _, _) = run_binary(&["jack", "--lambda", "1,2", "--nvars", "2", "--k", "1"]);
    assert_eq!(code, 3);
    let (code, _, _) = run_binary(&["limits", "ratio", "--n", "2"]);
    assert_eq!(code, 2);
    let (code, _, stderr) = run_binary(&[
        "limits", "theorem1", "--lambda", "1", "--rank", "1", "--k3", "1", "--a", "1", "--sweep",
        "10,100",
    ]);
    assert_eq!(code, 0);
    assert!(String::from_utf8_lossy(&stderr).contains("empirical constant"));
}
