use std::process::{Command, Output};

use hemisphere::records::{AddedMassRecord, ConvergenceRow, ReportRow, COEFFS_HEADER};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hemisphere")).args(args).output().expect("spawn hemisphere")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn report_matches_golden() {
    assert_eq!(stdout(&["report"]), include_str!("golden/report.csv"));
}

#[test]
fn report_json_rows() {
    let rows: Vec<ReportRow> = serde_json::from_str(&stdout(&["report", "--format", "json"])).unwrap();
    assert_eq!(rows.len(), 4);
    let surge_high = &rows[1];
    assert_eq!((surge_high.coefficient.as_str(), surge_high.limit.as_str()), ("A'_11", "Ka->inf"));
    assert_eq!(surge_high.panel_method, "0.25");
    assert_eq!(surge_high.paper, "0.14231");
    assert!((1.90..=2.02).contains(&surge_high.ratio_paper));
    assert_eq!(rows[0].computed, 0.5);
    assert_eq!(rows[3].computed, 0.5);
}

#[test]
fn added_mass_json_round_trips() {
    let text = stdout(&["added-mass", "--mode", "heave", "--limit", "low", "--n-max", "40"]);
    let record: AddedMassRecord = serde_json::from_str(&text).unwrap();
    assert_eq!(record.n_max, 40);
    assert!((record.a_prime - 0.83093).abs() < 5e-4);
    assert_eq!(record.partials.len(), 41);
    let mut again = serde_json::to_string_pretty(&record).unwrap();
    again.push('\n');
    assert_eq!(again, text);
}

#[test]
fn added_mass_scales_with_rho_and_radius() {
    let base: AddedMassRecord =
        serde_json::from_str(&stdout(&["added-mass", "--mode", "heave", "--limit", "high"])).unwrap();
    let scaled: AddedMassRecord = serde_json::from_str(&stdout(&[
        "added-mass", "--mode", "heave", "--limit", "high", "--rho", "1025", "--radius", "2",
    ]))
    .unwrap();
    assert!(base.closed_form);
    assert!((scaled.dimensional_value - 1025.0 * 8.0 * base.dimensional_value).abs() < 1e-6);
}

#[test]
fn out_file_is_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = run(&["convergence", "--mode", "surge", "--limit", "high", "--n-max", "64", "--out", path.to_str().unwrap()]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn coeffs_csv_layout() {
    let text = stdout(&["coeffs", "--mode", "surge", "--limit", "low", "--n-max", "6", "--convention", "cs"]);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), COEFFS_HEADER.join(","));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 14);
    assert!(rows[..7].iter().all(|r| r[2] == "dirichlet" && r[4] == "cs" && r[1] == "1"));
    assert!(rows[7..].iter().all(|r| r[2] == "neumann"));
}

#[test]
fn convergence_rows_follow_doubling_schedule() {
    let rows: Vec<ConvergenceRow> = serde_json::from_str(&stdout(&[
        "convergence", "--mode", "heave", "--limit", "low", "--n-max", "100", "--format", "json",
    ]))
    .unwrap();
    let ns: Vec<usize> = rows.iter().map(|r| r.n_max).collect();
    assert_eq!(ns, [8, 16, 32, 64, 100]);
    assert!(rows.windows(2).all(|w| w[1].a_prime >= w[0].a_prime));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["added-mass", "--mode", "heave"]).status.code(), Some(2));
    assert_eq!(run(&["coeffs", "--mode", "heave", "--limit", "low", "--n-max", "0"]).status.code(), Some(2));
    assert_eq!(run(&["added-mass", "--mode", "sway", "--limit", "low"]).status.code(), Some(2));
    assert_eq!(run(&["added-mass", "--mode", "heave", "--limit", "low", "--rho", "-1"]).status.code(), Some(2));
}

#[test]
fn non_convergence_exits_3() {
    // surge at Ka -> inf has a single nonzero term at N = 2
    let out = run(&["added-mass", "--mode", "surge", "--limit", "high", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not converged"));
    assert!(out.stdout.is_empty());
}
