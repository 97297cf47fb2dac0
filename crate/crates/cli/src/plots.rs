//! Figure presets: each writes <preset>.csv and a gnuplot script
//! <preset>.gp next to it. Output bytes depend only on the preset.

use std::fs;
use std::process::ExitCode;

use rayon::prelude::*;

use h2plus1d::oracle::solve_spectrum;
use h2plus1d::variational::{build_trial, epsilon1, epsilon2, optimize_order_n};
use h2plus1d::wavefunction::{sample_oracle, sample_trial};
use h2plus1d::Parity;

use crate::output::fmt;
use crate::run::CliError;
use crate::PlotArgs;

const ORACLE_N: usize = 4000;

fn nu_grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step + 0.5).floor() as usize;
    (0..=n).map(|i| lo + step * i as f64).collect()
}

/// Closed-form curve with the eigensolver overlaid.
fn curve_vs_oracle(
    parity: Parity,
    closed: impl Fn(f64) -> Result<f64, String> + Sync,
    grid: &[f64],
) -> Result<(String, Vec<String>), String> {
    let level = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    let rows: Result<Vec<String>, String> = grid
        .par_iter()
        .map(|&nu| {
            let c = closed(nu).map_err(|e| format!("nu = {nu}: {e}"))?;
            let o = solve_spectrum(nu, ORACLE_N, level + 1)
                .map_err(|e| format!("nu = {nu}: {e}"))?
                .levels[level]
                .richardson;
            Ok(format!("{},{},{}", fmt(nu), fmt(c), fmt(o)))
        })
        .collect();
    Ok(("nu,epsilon,oracle".into(), rows?))
}

/// Order-2/3/4 curves for one parity.
fn order_overlay(parity: Parity, grid: &[f64]) -> Result<(String, Vec<String>), String> {
    let rows: Result<Vec<String>, String> = grid
        .par_iter()
        .map(|&nu| {
            let mut cells = vec![fmt(nu)];
            for order in [2usize, 3, 4] {
                let (_, e) =
                    optimize_order_n(parity, nu, order).map_err(|e| format!("nu = {nu}: {e}"))?;
                cells.push(fmt(e));
            }
            Ok(cells.join(","))
        })
        .collect();
    Ok(("nu,order2,order3,order4".into(), rows?))
}

/// Trial and eigensolver wavefunctions at one nu.
fn wavefunction_overlay(parity: Parity, nu: f64) -> Result<(String, Vec<String>), String> {
    let level = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    let err = |e: &dyn std::fmt::Display| format!("nu = {nu}: {e}");
    let trial = build_trial(parity, nu, 2).map_err(|e| err(&e))?;
    let a = sample_trial(&trial, 1001).map_err(|e| err(&e))?;
    let spectrum = solve_spectrum(nu, ORACLE_N, level + 1).map_err(|e| err(&e))?;
    let b = sample_oracle(&spectrum, level, 1001).map_err(|e| err(&e))?;
    let rows = a
        .xs
        .iter()
        .zip(&a.values)
        .zip(&b.values)
        .map(|((&x, &t), &o)| format!("{},{},{}", fmt(x), fmt(t), fmt(o)))
        .collect();
    Ok(("x_over_L,psi_trial,psi_oracle".into(), rows))
}

struct Preset {
    header: String,
    rows: Vec<String>,
    title: String,
    xlabel: &'static str,
    ylabel: &'static str,
    series: Vec<(usize, String)>, // (csv column, legend)
}

fn build(preset: &str) -> Result<Preset, String> {
    let energy_grid = nu_grid(0.5, 20.0, 0.1);
    let labels = |names: &[&str]| -> Vec<(usize, String)> {
        names
            .iter()
            .enumerate()
            .map(|(i, n)| (i + 2, n.to_string()))
            .collect()
    };
    let curve = |title: &str, data: (String, Vec<String>), series: Vec<(usize, String)>| Preset {
        header: data.0,
        rows: data.1,
        title: title.into(),
        xlabel: "nu = L/a",
        ylabel: "epsilon",
        series,
    };
    let wave = |title: &str, data: (String, Vec<String>)| Preset {
        header: data.0,
        rows: data.1,
        title: title.into(),
        xlabel: "x/L",
        ylabel: "psi",
        series: labels(&["trial", "eigensolver"]),
    };
    match preset {
        "fig1" => Ok(curve(
            "ground state: order-1 closed form vs eigensolver",
            curve_vs_oracle(Parity::Even, |nu| Ok(epsilon1(nu).value), &energy_grid)?,
            labels(&["order-1 closed form", "eigensolver"]),
        )),
        "fig2" => Ok(curve(
            "ground state: order-2 closed form vs eigensolver",
            curve_vs_oracle(
                Parity::Even,
                |nu| epsilon2(Parity::Even, nu).map_err(|e| e.to_string()),
                &energy_grid,
            )?,
            labels(&["order-2 closed form", "eigensolver"]),
        )),
        "fig3" => Ok(wave(
            "ground state wavefunction, nu = 10",
            wavefunction_overlay(Parity::Even, 10.0)?,
        )),
        "fig4" => Ok(wave(
            "ground state wavefunction, nu = 2",
            wavefunction_overlay(Parity::Even, 2.0)?,
        )),
        "fig5" => Ok(curve(
            "ground state: truncation orders 2, 3, 4",
            order_overlay(Parity::Even, &energy_grid)?,
            labels(&["order 2", "order 3", "order 4"]),
        )),
        "fig6" => Ok(curve(
            "first excited state: order-2 closed form vs eigensolver",
            curve_vs_oracle(
                Parity::Odd,
                |nu| epsilon2(Parity::Odd, nu).map_err(|e| e.to_string()),
                &nu_grid(8.0, 12.0, 0.05),
            )?,
            labels(&["order-2 closed form", "eigensolver"]),
        )),
        "fig7" => Ok(wave(
            "first excited wavefunction, nu = 15",
            wavefunction_overlay(Parity::Odd, 15.0)?,
        )),
        "fig8" => Ok(wave(
            "first excited wavefunction, nu = 6",
            wavefunction_overlay(Parity::Odd, 6.0)?,
        )),
        "fig9" => Ok(curve(
            "first excited state: truncation orders 2, 3, 4",
            order_overlay(Parity::Odd, &energy_grid)?,
            labels(&["order 2", "order 3", "order 4"]),
        )),
        other => Err(format!(
            "unknown preset '{other}' (expected fig1 through fig9)"
        )),
    }
}

pub fn run(args: &PlotArgs) -> Result<ExitCode, CliError> {
    let preset = build(&args.preset).map_err(|e| {
        if e.starts_with("unknown preset") {
            CliError::Usage(e)
        } else {
            CliError::Numeric(e)
        }
    })?;
    fs::create_dir_all(&args.output_dir)
        .map_err(|e| CliError::Numeric(format!("{}: {e}", args.output_dir.display())))?;
    let csv_path = args.output_dir.join(format!("{}.csv", args.preset));
    let gp_path = args.output_dir.join(format!("{}.gp", args.preset));

    let mut csv = String::with_capacity(preset.rows.len() * 48);
    csv.push_str(&preset.header);
    csv.push('\n');
    for row in &preset.rows {
        csv.push_str(row);
        csv.push('\n');
    }
    fs::write(&csv_path, csv).map_err(|e| CliError::Numeric(format!("{}: {e}", csv_path.display())))?;

    let mut gp = String::new();
    gp.push_str("set datafile separator ','\n");
    gp.push_str(&format!("set title '{}'\n", preset.title));
    gp.push_str(&format!("set xlabel '{}'\n", preset.xlabel));
    gp.push_str(&format!("set ylabel '{}'\n", preset.ylabel));
    gp.push_str("set key top right\n");
    let plots: Vec<String> = preset
        .series
        .iter()
        .map(|(col, legend)| {
            format!(
                "'{}' using 1:{} with lines title '{}'",
                csv_path.file_name().unwrap().to_string_lossy(),
                col,
                legend
            )
        })
        .collect();
    gp.push_str(&format!("plot {}\n", plots.join(", \\\n     ")));
    fs::write(&gp_path, gp).map_err(|e| CliError::Numeric(format!("{}: {e}", gp_path.display())))?;

    println!("wrote {}", csv_path.display());
    println!("wrote {}", gp_path.display());
    Ok(ExitCode::SUCCESS)
}
