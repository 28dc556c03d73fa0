mod common;

use bohr_radius::cli::run;
use common::printed::PRINTED;

fn bohr(args: &[&str]) -> bohr_radius::cli::Outcome {
    run(std::iter::once("bohr").chain(args.iter().copied()))
}

#[test]
fn radius_prints_classical_value() {
    let out = bohr(&["radius", "--family", "power", "--p", "1", "--gamma", "0"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("0.3333333333\n"));
    assert!(out.stdout.contains("residual"));
}

#[test]
fn radius_for_each_family() {
    for (family, extra, want) in [
        ("n1", vec![], 1.0 - (2.0f64 / 3.0).sqrt()),
        ("n", vec![], 2.0 - 3f64.sqrt()),
        ("cesaro", vec!["--alpha", "0"], 0.53359),
        ("bernardi", vec!["--beta", "1"], 0.58281),
    ] {
        let mut args = vec!["radius", "--family", family, "--p", "1", "--gamma", "0"];
        args.extend(extra);
        let out = bohr(&args);
        assert_eq!(out.code, 0, "{family}: {}", out.stderr);
        let v: f64 = out.stdout.lines().next().unwrap().parse().unwrap();
        assert!((v - want).abs() < 1e-5, "{family}: {v} vs {want}");
    }
}

#[test]
fn radius_with_lambda() {
    let out = bohr(&["radius", "--family", "power", "--p", "2", "--lambda", "1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("0.5\n"));
}

#[test]
fn usage_errors_exit_two() {
    let out = bohr(&["radius", "--family", "power", "--p", "1", "--gamma", "-0.5"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("usage"));
    assert_eq!(bohr(&["radius", "--family", "nope"]).code, 2);
    assert_eq!(bohr(&["table", "--id", "9"]).code, 2);
    assert_eq!(bohr(&["bounds", "--p", "2.5"]).code, 2);
    assert_eq!(bohr(&[]).code, 2);
}

#[test]
fn help_exits_zero() {
    let out = bohr(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("radius"));
}

#[test]
fn table_four_markdown_matches_reference_values() {
    let out = bohr(&["table", "--id", "4", "--format", "markdown"]);
    assert_eq!(out.code, 0);
    let rows: Vec<&str> = out.stdout.lines().skip(2).collect();
    assert_eq!(rows.len(), 5);
    for (row, line) in rows.iter().enumerate() {
        let cells: Vec<&str> = line.split('|').map(str::trim).filter(|s| !s.is_empty()).skip(1).collect();
        for (col, cell) in cells.iter().enumerate() {
            let (l, r) = cell.split_once(" ↗ ").unwrap();
            let (pl, pr) = PRINTED[3][row][col];
            assert!((l.parse::<f64>().unwrap() - pl).abs() <= 2e-4, "{cell}");
            assert!((r.parse::<f64>().unwrap() - pr).abs() <= 2e-4, "{cell}");
        }
    }
}

#[test]
fn table_csv_and_json() {
    let out = bohr(&["table", "--id", "1", "--format", "csv"]);
    assert!(out.stdout.starts_with("gamma_lo,gamma_hi,R1(1,gamma):left,R1(1,gamma):right,"));
    assert_eq!(out.stdout.lines().count(), 6);
    let out = bohr(&["table", "--id", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["id"], 6);
    assert_eq!(v["cells"].as_array().unwrap().len(), 5);
}

#[test]
fn curve_writes_one_file_per_gamma() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("g.csv");
    let out = bohr(&[
        "curve", "--tag", "G", "--p", "1", "--gamma-list", "0,0.5", "--samples", "3", "--out", base.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let text = std::fs::read_to_string(dir.path().join("g-gamma-0.csv")).unwrap();
    assert_eq!(text.lines().nth(2), Some("0.5,-1.375"));
    assert!(dir.path().join("g-gamma-0.5.csv").exists());
}

#[test]
fn curve_to_stdout() {
    let out = bohr(&["curve", "--tag", "B", "--m", "0", "--beta", "1", "--gamma-list", "0", "--samples", "5"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("r,value\n"));
    assert_eq!(out.stdout.lines().count(), 6);
}

#[test]
fn verify_confirms_sharpness() {
    let out = bohr(&["verify", "--family", "power", "--p", "1", "--gamma", "0.5"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert_eq!(out.stdout.matches("[ok]").count(), 2);
    let out = bohr(&["verify", "--family", "n2", "--p", "2", "--gamma", "0", "--r", "0.2", "--a-list", "0.9,0.99"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
}

#[test]
fn verify_reports_unexpected_behaviour() {
    // a schedule far from 1 cannot exhibit the violation just above the radius
    let out = bohr(&["verify", "--family", "power", "--p", "1", "--gamma", "0", "--a-list", "0.1"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("unexpected"));
}

#[test]
fn sum_from_coefficient_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    std::fs::write(&path, r#"{"m": 0, "moduli": [0.5, 0.75], "tail": {"ratio": 0.5, "constant": 1.5}}"#).unwrap();
    let p = path.to_str().unwrap();
    let out = bohr(&["sum", "--coeffs", p, "--family", "power", "--p", "1", "--r", "0.2"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("satisfied true"));
    let out = bohr(&["sum", "--coeffs", p, "--family", "power", "--p", "1", "--q", "1", "--format", "json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v["radius"].as_f64().unwrap() > 0.2);

    std::fs::write(&path, r#"{"m": 0, "moduli": [-1]}"#).unwrap();
    assert_eq!(bohr(&["sum", "--coeffs", p, "--family", "power", "--r", "0.2"]).code, 2);
    let missing = dir.path().join("missing.json");
    assert_eq!(bohr(&["sum", "--coeffs", missing.to_str().unwrap(), "--family", "power", "--r", "0.2"]).code, 2);
}

#[test]
fn bounds_prints_lower_and_upper() {
    let out = bohr(&["bounds", "--p", "1.5"]);
    assert_eq!(out.code, 0);
    let vals: Vec<f64> = out.stdout.lines().map(|l| l.split_whitespace().nth(1).unwrap().parse().unwrap()).collect();
    assert!(vals[0] <= vals[1]);
}

#[test]
fn output_is_deterministic() {
    for args in [&["table", "--id", "5"][..], &["curve", "--tag", "C", "--gamma-list", "0,1", "--samples", "50"][..]] {
        assert_eq!(bohr(args).stdout, bohr(args).stdout);
    }
}
