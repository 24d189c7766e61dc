use std::process::{Command, Output};

use krein_spectra::cli::emit::{reemit_json, to_csv, to_json};
use krein_spectra::cli::{Cell, Table};
use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krein-spectra")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is a JSON error object")
}

#[test]
fn spectrum_csv_has_header_and_rows() {
    let out = bin(&["spectrum", "--model", "oscillator", "--nu", "0.3", "--theta", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,lambda,bracket_lo,bracket_hi,residual");
    assert_eq!(lines.len(), 21);
    for line in &lines[1..] {
        let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert!(cols[2] <= cols[1] && cols[1] <= cols[3], "{line}");
    }
}

#[test]
fn poles_json_carries_anomalous_residue() {
    let out = bin(&["poles", "--model", "oscillator", "--nu", "0.3", "--theta", "1", "--smin", "-1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    // Γ(−0.3) = Γ(0.7)/(−0.3)
    let g = 1.298_055_332_647_558_f64 / -0.3;
    let want = 4f64.powf(0.3) / (g * g);
    let data = v["data"].as_array().unwrap();
    let entry = data.iter().find(|e| (e["s"].as_f64().unwrap() + 0.3).abs() < 1e-12).expect("pole at -0.3");
    assert!((entry["residue"].as_f64().unwrap() - want).abs() < 1e-12);
    for e in data {
        let mut keys: Vec<&str> = e.as_object().unwrap().keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(keys, ["multiplicity", "residue", "s", "source"]);
    }
}

#[test]
fn sample_schema() {
    let out = bin(&["zeta", "--model", "interval", "--nu", "0.3", "--theta", "1", "--s", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let top: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(top, ["command", "data", "extension", "model", "schema_version"]);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "zeta");
    let row = v["data"][0].as_object().unwrap();
    let keys: Vec<&str> = row.keys().map(String::as_str).collect();
    assert_eq!(keys, ["argument", "bound", "terms", "value"]);
    assert!(row["bound"].as_f64().unwrap() >= 0.0);
}

#[test]
fn verify_exit_codes() {
    let ok = bin(&["verify", "--suite", "9"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let failing = bin(&["verify", "--suite", "5"]);
    assert_eq!(failing.status.code(), Some(1), "{}", stdout(&failing));
}

#[test]
fn invalid_parameters_exit_2_with_distinct_messages() {
    let cases: [&[&str]; 3] = [
        &["spectrum", "--model", "oscillator", "--nu", "1.3"],
        &["spectrum", "--model", "susy", "--alpha", "7"],
        &["spectrum", "--model", "ab", "--kappa", "-2"],
    ];
    let mut messages = Vec::new();
    for args in cases {
        let out = bin(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = stderr_json(&out);
        assert_eq!(err["error"], "invalid_parameter");
        messages.push(err["message"].as_str().unwrap().to_owned());
    }
    messages.sort();
    messages.dedup();
    assert_eq!(messages.len(), 3);

    let both = bin(&["spectrum", "--model", "dirac", "--alpha", "0.2", "--nu", "0.3"]);
    assert_eq!(both.status.code(), Some(2));
}

#[test]
fn library_errors_map_to_exit_codes() {
    let divergent = bin(&["zeta", "--model", "oscillator", "--nu", "0.3", "--s", "0.5"]);
    assert_eq!(divergent.status.code(), Some(2));
    assert_eq!(stderr_json(&divergent)["error"], "divergent");

    let infeasible = bin(&["heat", "--model", "oscillator", "--nu", "0.3", "--theta", "1", "--t", "1e-7"]);
    assert_eq!(infeasible.status.code(), Some(3));
    assert_eq!(stderr_json(&infeasible)["error"], "infeasible_tolerance");
}

#[test]
fn empty_table_is_header_only() {
    let t = Table::new("spectrum", &["n", "lambda"]);
    assert_eq!(to_csv(&t), "n,lambda\n");
    let v: Value = serde_json::from_str(&to_json(&t)).unwrap();
    assert_eq!(v["data"].as_array().unwrap().len(), 0);
}

#[test]
fn json_round_trip_is_byte_identical() {
    let mut t = Table::new("heat", &["argument", "value", "label"]);
    t.push(vec![Cell::from(0.1), Cell::from(1.0 / 3.0), Cell::from("a,b")]);
    t.push(vec![Cell::from(1e-300), Cell::from(-2.5e17), Cell::from("x")]);
    let once = to_json(&t);
    assert_eq!(reemit_json(&once).unwrap(), once);

    let out = bin(&["spectrum", "--model", "interval", "--nu", "0.3", "--theta", "2", "--count", "5", "--format", "json"]);
    let text = stdout(&out);
    assert_eq!(reemit_json(&text).unwrap(), text);
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["heat", "--model", "interval", "--nu", "0.3", "--theta", "1", "--t", "0.01", "--format", "json"];
    let one = bin(&[&["--threads", "1"], &args[..]].concat());
    let four = bin(&[&["--threads", "4"], &args[..]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("krein-spectra-cli-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let out = bin(&["spectrum", "--model", "dirac", "--nu", "0.3", "--count", "3", "--output", p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.starts_with("n,lambda"));
}

#[test]
fn help_exits_zero() {
    let out = bin(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("spectrum"));
}
