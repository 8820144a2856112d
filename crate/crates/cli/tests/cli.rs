//! End-to-end runs of the compiled binary: flag parsing, exit codes, and
//! the promise that CSV and JSON carry identical number strings.

use std::collections::HashMap;
use std::process::Command;

fn run(args: &[&str], envs: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_discrimkit"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

/// CSV body as (header, rows), comments stripped.
fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header: Vec<String> = lines
        .next()
        .expect("header line")
        .split(',')
        .map(str::to_string)
        .collect();
    let rows = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    (header, rows)
}

fn col(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap_or_else(|| panic!("column {name}"))
}

#[test]
fn helstrom_sweep_traces_the_closed_curve() {
    let (code, stdout, stderr) =
        run(&["minerr", "--two-pure", "--theta-sweep", "0:45:10", "--p0", "0.5"], &[]);
    assert_eq!(code, 0, "stderr: {stderr}");
    let (header, rows) = parse_csv(&stdout);
    assert_eq!(rows.len(), 10);
    let (it, ie, ir, ig) = (
        col(&header, "theta_deg"),
        col(&header, "p_error"),
        col(&header, "residual"),
        col(&header, "grid_oracle"),
    );
    for row in &rows {
        let theta: f64 = row[it].parse().unwrap();
        let p_err: f64 = row[ie].parse().unwrap();
        let expected = 0.5 * (1.0 - (2.0 * theta.to_radians()).sin());
        assert!((p_err - expected).abs() < 1e-10, "theta {theta}: {p_err} vs {expected}");
        assert!(row[ir].parse::<f64>().unwrap() < 1e-9);
        assert!((row[ig].parse::<f64>().unwrap() - expected).abs() < 1e-6);
    }
}

#[test]
fn csv_and_json_render_identical_numbers() {
    let args = ["maxconf", "--trine", "--theta", "30", "--compare-minerr"];
    let (code, csv_text, _) = run(&args, &[]);
    assert_eq!(code, 0);
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let (code, json_text, _) = run(&json_args, &[]);
    assert_eq!(code, 0);

    let (header, rows) = parse_csv(&csv_text);
    assert_eq!(rows.len(), 1);
    let parsed: serde_json::Value = serde_json::from_str(&json_text).unwrap();
    let obj = parsed["rows"][0].as_object().unwrap();
    assert_eq!(obj.len(), header.len());
    for (name, cell) in header.iter().zip(&rows[0]) {
        assert_eq!(
            obj[name].as_str().unwrap(),
            cell,
            "column {name} differs between formats"
        );
    }

    // The quoted comparison: confidence 2/3 against (1 + sin 60 deg)/3.
    let conf: f64 = rows[0][col(&header, "confidence_0")].parse().unwrap();
    assert!((conf - 2.0 / 3.0).abs() < 1e-9);
    let avg: f64 = rows[0][col(&header, "minerr_avg_confidence")].parse().unwrap();
    assert!((avg - (1.0 + 60f64.to_radians().sin()) / 3.0).abs() < 1e-8);
}

#[test]
fn mutinfo_table_reproduces_the_reference_values() {
    let (code, stdout, _) = run(&["mutinfo", "--table"], &[]);
    assert_eq!(code, 0);
    let (header, rows) = parse_csv(&stdout);
    let (im, ib) = (col(&header, "measurement"), col(&header, "bits"));
    let ie = col(&header, "ensemble");
    let mut bits = HashMap::new();
    for row in &rows {
        bits.insert(
            (row[ie].clone(), row[im].clone()),
            row[ib].parse::<f64>().unwrap(),
        );
    }
    let expect = |ens: &str, meas: &str, val: f64, tol: f64| {
        let got = bits[&(ens.to_string(), meas.to_string())];
        assert!((got - val).abs() < tol, "{ens}/{meas}: {got} vs {val}");
    };
    expect("trine", "elimination", 3f64.log2() - 1.0, 1e-3);
    expect("tetrad", "elimination", 2.0 - 3f64.log2(), 1e-3);
    expect("trine", "best-projective", 0.459, 2e-3);
    expect("tetrad", "best-projective", 0.311, 2e-3);
    expect("two-pure-15deg", "min-error", 0.189, 1e-3);
    // Experimental context rides along without being checked against.
    assert!(stdout.contains("0.196(7)"));
}

#[test]
fn domain_violations_exit_2() {
    let cases: &[&[&str]] = &[
        &["unamb", "--two-pure", "--theta", "50"],
        &["unamb", "--two-pure", "--theta", "0"],
        &["minerr", "--two-pure", "--theta", "10", "--p0", "1.5"],
        &["minerr", "--two-pure", "--sweep", "latitude:1:10:3"],
        &["unamb", "--trine", "--latitude", "20"],
        &["maxconf", "--two-pure", "--sweep", "theta:0:45:5"],
        &["minerr", "--ensemble", "/nonexistent/ens.json"],
        &["simulate", "--coherent", "--alpha", "1", "--strategy", "srm"],
        &["minerr", "--no-such-flag"],
    ];
    for args in cases {
        let (code, _, stderr) = run(args, &[]);
        assert_eq!(code, 2, "args {args:?} gave {code}: {stderr}");
    }
}

#[test]
fn malformed_ensemble_json_reports_position() {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("broken.json");
    std::fs::write(&path, "{\"dim\": 2,\n \"states\": [").unwrap();
    let (code, _, stderr) = run(&["minerr", "--ensemble", path.to_str().unwrap()], &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("line"), "diagnostics missing position: {stderr}");
}

#[test]
fn ensemble_files_flow_through_every_strategy() {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("pair.json");
    std::fs::write(
        &path,
        r#"{
  "dim": 2,
  "states": [
    {"vector": [[1, 0], [0, 0]]},
    {"matrix": [[[0.5, 0], [0, 0]], [[0, 0], [0.5, 0]]]}
  ],
  "priors": [0.4, 0.6]
}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();

    let (code, stdout, stderr) = run(&["minerr", "--ensemble", p], &[]);
    assert_eq!(code, 0, "{stderr}");
    let (header, rows) = parse_csv(&stdout);
    // Gamma = 0.4|0><0| - 0.3 I has positive part 0.1|0><0|, so the best
    // success probability is 0.6 + 0.1 = 0.7.
    let pc: f64 = rows[0][col(&header, "p_correct")].parse().unwrap();
    assert!((pc - 0.7).abs() < 1e-7);

    let (code, stdout, _) = run(&["maxconf", "--ensemble", p], &[]);
    assert_eq!(code, 0);
    let (header, rows) = parse_csv(&stdout);
    let c0: f64 = rows[0][col(&header, "confidence_0")].parse().unwrap();
    let c1: f64 = rows[0][col(&header, "confidence_1")].parse().unwrap();
    assert!((c0 - 4.0 / 7.0).abs() < 1e-9, "posterior of state 0 given its outcome");
    assert!((c1 - 1.0).abs() < 1e-9, "state 1 is certain on the kernel of state 0");

    let (code, stdout, _) = run(&["unamb", "--ensemble", p], &[]);
    assert_eq!(code, 0);
    assert!(stdout.contains("no,yes"));

    let (code, stdout, _) = run(&["mutinfo", "--ensemble", p], &[]);
    assert_eq!(code, 0);
    assert!(stdout.contains("bits_srm"));
}

#[test]
fn non_convergence_exits_3() {
    let (code, _, stderr) = run(
        &["minerr", "--trine", "--threshold", "1e-30", "--max-iters", "5"],
        &[],
    );
    assert_eq!(code, 3);
    assert!(stderr.contains("did not converge"), "{stderr}");
}

#[test]
fn simulate_is_deterministic_and_unambiguous_runs_clean() {
    let args = [
        "simulate", "--two-pure", "--theta", "18", "--strategy", "unamb", "--trials", "5000",
        "--seed", "5",
    ];
    let (code, first, stderr) = run(&args, &[]);
    assert_eq!(code, 0, "{stderr}");
    let (_, second, _) = run(&args, &[]);
    assert_eq!(first, second, "same flags and seed must reproduce the record");

    assert!(first.contains("# p_error=0.00000000000e0"));
    let (header, rows) = parse_csv(&first);
    let (is, io, ic) = (col(&header, "state"), col(&header, "outcome"), col(&header, "count"));
    let mut conclusive = 0u64;
    for row in &rows {
        let state = &row[is];
        let outcome = &row[io];
        let count: u64 = row[ic].parse().unwrap();
        if outcome != "?" && outcome != state {
            assert_eq!(count, 0, "cross error {state}->{outcome}");
        }
        if outcome != "?" {
            conclusive += count;
        }
    }
    assert!(conclusive > 0, "some trials must identify a state");
}

#[test]
fn verify_reports_every_check_and_honors_the_tolerance_override() {
    let (code, stdout, stderr) = run(&["verify", "--trials", "500"], &[]);
    assert_eq!(code, 0, "{stderr}\n{stdout}");
    assert!(!stdout.contains("FAIL"));
    let summary = stdout.lines().last().unwrap();
    assert!(summary.ends_with("checks passed"), "{summary}");

    // An absurdly tight uniform tolerance must produce a controlled failure,
    // not a weaker report.
    let (code, stdout, _) =
        run(&["verify", "--trials", "500"], &[("DISCRIMKIT_TOL", "1e-18")]);
    assert_eq!(code, 1);
    assert!(stdout.contains("FAIL"));

    let (code, stdout, _) = run(&["verify", "--trials", "500", "--json"], &[]);
    assert_eq!(code, 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(parsed["all_pass"], serde_json::Value::Bool(true));
    let checks = parsed["checks"].as_array().unwrap();
    assert!(checks.len() >= 30);
    for c in checks {
        assert_eq!(c["pass"], serde_json::Value::Bool(true), "{c}");
        assert!(c["value"].as_str().unwrap().contains('e'));
    }
}
