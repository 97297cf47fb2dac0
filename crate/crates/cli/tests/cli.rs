//! End-to-end tests of the installed binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_h2plus1d"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn energy_curve_ground_closed2_anchor() {
    let out = run(&["energy-curve", "--state", "ground", "--method", "closed2", "--nu", "2.6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("nu,epsilon,oracle,delta"));
    let row = lines.next().unwrap();
    let fields: Vec<&str> = row.split(',').collect();
    assert_eq!(fields.len(), 4);
    let eps: f64 = fields[1].parse().unwrap();
    assert!((eps + 0.830672).abs() < 2e-6, "{eps}");
    assert_eq!(fields[2], "");
    assert_eq!(fields[3], "");
}

#[test]
fn energy_curve_excited_closed2_anchor() {
    let out = run(&["energy-curve", "--state", "excited", "--nu", "9.6"]);
    assert!(out.status.success());
    let eps: f64 = stdout(&out).lines().nth(1).unwrap().split(',').nth(1).unwrap().parse().unwrap();
    assert!((eps + 0.514557).abs() < 2e-6, "{eps}");
}

#[test]
fn energy_curve_closed1_anchor() {
    let out = run(&["energy-curve", "--method", "closed1", "--nu", "10"]);
    assert!(out.status.success());
    let eps: f64 = stdout(&out).lines().nth(1).unwrap().split(',').nth(1).unwrap().parse().unwrap();
    assert!((eps + 0.494552).abs() < 2e-6, "{eps}");
}

#[test]
fn energy_curve_with_oracle_fills_delta() {
    let out = run(&[
        "energy-curve", "--nu", "10", "--with-oracle", "--grid-points", "2000",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let fields: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let oracle: f64 = fields[2].parse().unwrap();
    let delta: f64 = fields[3].parse().unwrap();
    assert!((oracle + 0.524383).abs() < 2e-5, "{oracle}");
    assert!((3e-4..8e-4).contains(&delta), "{delta}");
}

#[test]
fn energy_curve_range_and_json() {
    let out = run(&[
        "energy-curve", "--nu-min", "1", "--nu-max", "2", "--nu-step", "0.5",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["nu"], 1.0);
    assert_eq!(rows[2]["nu"], 2.0);
    assert!(rows[0]["oracle"].is_null());
}

#[test]
fn energy_curve_deterministic_bytes() {
    let args = ["energy-curve", "--nu-min", "0.5", "--nu-max", "3", "--nu-step", "0.25"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn energy_curve_ev_units() {
    let dimless = run(&["energy-curve", "--nu", "2.6"]);
    let ev = run(&["energy-curve", "--nu", "2.6", "--units", "ev"]);
    let parse = |o: &Output| -> f64 {
        stdout(o).lines().nth(1).unwrap().split(',').nth(1).unwrap().parse().unwrap()
    };
    assert!((parse(&ev) / parse(&dimless) - 27.211386245988).abs() < 1e-9);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["energy-curve"][..],
        &["energy-curve", "--nu", "0"],
        &["energy-curve", "--nu-min", "2", "--nu-max", "1"],
        &["energy-curve", "--state", "excited", "--method", "closed1", "--nu", "2"],
        &["energy-curve", "--method", "order-n", "--order", "0", "--nu", "2"],
        &["wavefunction", "--nu", "-1"],
        &["plot", "--preset", "fig10"],
        &["no-such-command"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn wavefunction_headers_and_nodes() {
    let out = run(&[
        "wavefunction", "--state", "excited", "--nu", "15", "--samples", "101",
        "--grid-points", "2000",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let overlap: f64 = text
        .lines()
        .find(|l| l.starts_with("# overlap"))
        .unwrap()
        .rsplit(' ')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!(overlap > 0.999, "{overlap}");
    let data: Vec<Vec<f64>> = text
        .lines()
        .skip_while(|l| l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(|f| f.parse().unwrap()).collect())
        .collect();
    assert_eq!(data.len(), 101);
    // Dirichlet walls and the odd midpoint node
    assert_eq!(data[0][1], 0.0);
    assert_eq!(data[100][1], 0.0);
    assert!(data[50][1].abs() < 1e-12);
}

#[test]
fn box_demo_prints_exact_rational() {
    let out = run(&["box-demo"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("153/31"), "{text}");
    assert!(text.contains("pi^2/2"), "{text}");
}

#[test]
fn plot_preset_writes_deterministic_files() {
    let dir = std::env::temp_dir().join("h2plus1d-plot-test");
    let run_once = || {
        let out = run(&["plot", "--preset", "fig4", "--output-dir", dir.to_str().unwrap()]);
        assert!(out.status.success());
        (
            std::fs::read(dir.join("fig4.csv")).unwrap(),
            std::fs::read(dir.join("fig4.gp")).unwrap(),
        )
    };
    let (csv1, gp1) = run_once();
    let (csv2, gp2) = run_once();
    assert_eq!(csv1, csv2);
    assert_eq!(gp1, gp2);
    let text = String::from_utf8(csv1).unwrap();
    assert_eq!(text.lines().next(), Some("x_over_L,psi_trial,psi_oracle"));
    assert_eq!(text.lines().count(), 1002);
    let gp = String::from_utf8(gp1).unwrap();
    assert!(gp.contains("plot 'fig4.csv'"), "{gp}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_reports_every_row() {
    let out = run(&["verify"]);
    let text = stdout(&out);
    let rows: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("[PASS]") || l.starts_with("[FAIL]"))
        .collect();
    assert!(rows.len() >= 30, "only {} rows", rows.len());
    // Known red rows (documented spec-level contradictions); everything
    // else must pass, and the exit code reflects the failures honestly.
    let unexpected: Vec<&&str> = rows
        .iter()
        .filter(|l| l.starts_with("[FAIL]"))
        .filter(|l| !l.contains("epsilon1(40)") && !l.contains("order2-order"))
        .collect();
    assert!(unexpected.is_empty(), "{unexpected:?}");
    assert_eq!(out.status.code(), Some(1));
}
