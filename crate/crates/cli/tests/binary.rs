use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cage-spectra"))
        .args(args)
        .env_remove("CAGE_SPECTRA_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Re-serializes with the same canonical settings the binary uses.
fn reserialize(line: &str) -> String {
    let v: Value = serde_json::from_str(line).unwrap();
    cage_spectra_cli::report::to_canonical_json(&v)
}

#[test]
fn moore_bound() {
    let o = run(&["moore", "3", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "14");
}

#[test]
fn feasibility_json_example() {
    let o = run(&["feasibility", "4", "3", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["multiplicities"], serde_json::json!([1, 7, 6, 6, 7, 1]));
    assert_eq!(v["verdict"], "spectrally-admissible");
    assert_eq!(v["n"], 28);
}

#[test]
fn scan_example_is_all_excluded_by_gap() {
    let o = run(&["scan", "--k", "4..10", "--d", "7,9", "--e", "2,4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 7 * 2 * 2);
    let mut in_regime = 0;
    for r in &rows {
        if r["verdict"] == "outside-regime" {
            // Only (k, e) = (4, 4) and (5, 4) break e <= k - 2.
            assert_eq!(r["e"], 4);
            assert!(r["k"].as_u64().unwrap() < 6);
            continue;
        }
        in_regime += 1;
        assert_eq!(r["verdict"], "excluded-by-gap", "{r}");
    }
    assert_eq!(in_regime, 24);
    // Rows arrive in k-major input order.
    let keys: Vec<(u64, u64, u64)> = rows
        .iter()
        .map(|r| (r["k"].as_u64().unwrap(), r["d"].as_u64().unwrap(), r["e"].as_u64().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    assert_eq!(keys, sorted);
}

#[test]
fn formats_agree_on_verdicts() {
    let args = ["scan", "--k", "4..7", "--d", "3,4,7", "--e", "2,4"];
    let text = stdout(&run(&args));
    let json = stdout(&run(&[&args[..], &["--format", "json"]].concat()));
    let csv = stdout(&run(&[&args[..], &["--format", "csv"]].concat()));

    let from_text: Vec<String> = text
        .lines()
        .map(|l| l.split_whitespace().find_map(|w| w.strip_prefix("verdict=")).unwrap().to_string())
        .collect();
    let from_json: Vec<String> = json
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["verdict"].as_str().unwrap().to_string())
        .collect();
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let from_csv: Vec<String> = reader.records().map(|r| r.unwrap()[4].to_string()).collect();

    assert_eq!(from_text.len(), 4 * 3 * 2);
    assert_eq!(from_text, from_json);
    assert_eq!(from_text, from_csv);
    assert!(from_text.iter().any(|v| v == "spectrally-admissible"));
    assert!(from_text.iter().any(|v| v == "outside-regime"));
}

#[test]
fn json_round_trips_byte_for_byte() {
    let cases: [&[&str]; 5] = [
        &["feasibility", "4", "3", "2"],
        &["feasibility", "9", "7", "4"],
        &["poly", "H", "5", "9"],
        &["verify", "catalog:pg23_incidence", "--k", "4", "--d", "3"],
        &["catalog"],
    ];
    for args in cases {
        let out = stdout(&run(&[args, &["--format", "json"]].concat()));
        for line in out.lines() {
            assert_eq!(reserialize(line), line, "{args:?}");
        }
    }
}

#[test]
fn csv_schema() {
    let out = stdout(&run(&["feasibility", "6", "7", "4", "--format", "csv"]));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("k,d,e,n,verdict,gap_lo,gap_hi,max_integrality_deviation"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&row[..5], ["6", "7", "4", "39066", "excluded-by-gap"]);
    let (lo, hi): (f64, f64) = (row[5].parse().unwrap(), row[6].parse().unwrap());
    assert!(0.0 < lo && lo <= hi && hi < 1.0);
}

#[test]
fn big_coefficients_are_strings() {
    let out = stdout(&run(&["poly", "F", "1000", "20", "--format", "json"]));
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    let coeffs = v["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 21);
    assert!(coeffs.iter().any(Value::is_string));
    assert!(coeffs.iter().all(|c| c.is_string() || c.is_i64()));
}

#[test]
fn verify_catalog_and_file() {
    let o = run(&["verify", "catalog:heawood", "--k", "3", "--d", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result: verified"));

    // Wrong girth: the graph is fine, the claim is not.
    let o = run(&["verify", "catalog:heawood", "--k", "3", "--d", "4"]);
    assert_eq!(o.status.code(), Some(1));

    let dir = std::env::temp_dir().join(format!("cage-spectra-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("star.g6");
    std::fs::write(&path, ">>graph6<<D?{\n").unwrap();
    let o = run(&["verify", path.to_str().unwrap(), "--k", "3", "--d", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["passes"], false);
    assert_eq!(v["structure"]["order"], 5);

    std::fs::write(&path, "D?\n").unwrap();
    let o = run(&["verify", path.to_str().unwrap(), "--k", "3", "--d", "3"]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_and_domain_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["moore", "3"],
        &["moore", "3", "6", "--bogus"],
        &["feasibility", "4", "4", "2"],
        &["feasibility", "4", "7", "3"],
        &["poly", "Q", "3", "2"],
        &["scan", "--k", "9..4", "--d", "7", "--e", "2"],
        &["verify", "catalog:petersen", "--k", "3", "--d", "3"],
        &["verify", "catalog:heawood", "--k", "3", "--d", "2"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn precision_variable() {
    let o = Command::new(env!("CARGO_BIN_EXE_cage-spectra"))
        .args(["feasibility", "5", "5", "2", "--format", "json"])
        .env("CAGE_SPECTRA_PRECISION", "256")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["roots"].as_array().unwrap().iter().all(|r| r["precision_bits"].as_u64().unwrap() >= 256));

    let o = Command::new(env!("CARGO_BIN_EXE_cage-spectra"))
        .args(["moore", "3", "6"])
        .env("CAGE_SPECTRA_PRECISION", "nope")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalog_listing() {
    let out = stdout(&run(&["catalog", "--format", "csv"]));
    let names: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(names, ["heawood", "tutte_coxeter", "moebius_kantor", "pg23_incidence"]);
}
