//! Subcommand drivers.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::process::ExitCode;

use rayon::prelude::*;

use h2plus1d::oracle::solve_spectrum;
use h2plus1d::report::run_all;
use h2plus1d::variational::{box_energy, box_energy_order1_rational, build_trial, epsilon1, epsilon2, optimize_order_n};
use h2plus1d::wavefunction::{compare, sample_oracle, sample_trial};
use h2plus1d::Parity;

use crate::output::{self, EnergyRow, WavefunctionRow};
use crate::{BoxDemoArgs, EnergyCurveArgs, Format, Method, State, Units, WavefunctionArgs};

/// me^4/hbar^2 in electronvolts (one hartree).
const HARTREE_EV: f64 = 27.211386245988;

pub enum CliError {
    Usage(String),
    Numeric(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl State {
    fn parity(self) -> Parity {
        match self {
            State::Ground => Parity::Even,
            State::Excited => Parity::Odd,
        }
    }

    fn level(self) -> usize {
        match self {
            State::Ground => 0,
            State::Excited => 1,
        }
    }
}

fn write_out<F>(path: Option<&std::path::Path>, emit: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> std::io::Result<()>,
{
    match path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            emit(&mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut w = stdout.lock();
            emit(&mut w)?;
        }
    }
    Ok(())
}

fn energy_at(args: &EnergyCurveArgs, nu: f64) -> Result<f64, String> {
    let parity = args.state.parity();
    match args.method {
        Method::Closed1 => {
            if args.state != State::Ground {
                return Err("method closed1 covers the ground state only".into());
            }
            Ok(epsilon1(nu).value)
        }
        Method::Closed2 => epsilon2(parity, nu).map_err(|e| e.to_string()),
        Method::OrderN => {
            optimize_order_n(parity, nu, args.order).map(|(_, e)| e).map_err(|e| e.to_string())
        }
        Method::Oracle => solve_spectrum(nu, args.grid_points, args.state.level() + 1)
            .map(|s| s.levels[args.state.level()].richardson)
            .map_err(|e| e.to_string()),
    }
}

pub fn energy_curve(args: &EnergyCurveArgs) -> Result<ExitCode, CliError> {
    let grid = args.grid.values().map_err(CliError::Usage)?;
    if args.method == Method::OrderN && args.order == 0 {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    if args.method == Method::Closed1 && args.state != State::Ground {
        return Err(CliError::Usage(
            "method closed1 covers the ground state only".into(),
        ));
    }
    let scale = match args.units {
        Units::Dimensionless => 1.0,
        Units::Ev => HARTREE_EV,
    };
    let level = args.state.level();
    let rows: Result<Vec<EnergyRow>, String> = grid
        .par_iter()
        .map(|&nu| {
            let epsilon = energy_at(args, nu).map_err(|e| format!("nu = {nu}: {e}"))?;
            let oracle = if args.with_oracle && args.method != Method::Oracle {
                Some(
                    solve_spectrum(nu, args.grid_points, level + 1)
                        .map(|s| s.levels[level].richardson)
                        .map_err(|e| format!("nu = {nu}: {e}"))?,
                )
            } else {
                None
            };
            Ok(EnergyRow {
                nu,
                epsilon: epsilon * scale,
                oracle: oracle.map(|o| o * scale),
                delta: oracle.map(|o| (epsilon - o) * scale),
            })
        })
        .collect();
    let rows = rows.map_err(CliError::Numeric)?;
    write_out(args.output.as_deref(), |w| match args.format {
        Format::Csv => output::energy_csv(w, &rows),
        Format::Json => output::json_array(w, &rows),
    })?;
    Ok(ExitCode::SUCCESS)
}

pub fn wavefunction(args: &WavefunctionArgs) -> Result<ExitCode, CliError> {
    if args.nu <= 0.0 || !args.nu.is_finite() {
        return Err(CliError::Usage(format!(
            "nu must be positive and finite, got {}",
            args.nu
        )));
    }
    if args.samples < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    let parity = args.state.parity();
    let level = args.state.level();
    let trial = build_trial(parity, args.nu, args.order)
        .map_err(|e| CliError::Numeric(format!("nu = {}: {e}", args.nu)))?;
    let sampled = sample_trial(&trial, args.samples)
        .map_err(|e| CliError::Numeric(format!("nu = {}: {e}", args.nu)))?;
    let spectrum = solve_spectrum(args.nu, args.grid_points, level + 1)
        .map_err(|e| CliError::Numeric(format!("nu = {}: {e}", args.nu)))?;
    let oracle = sample_oracle(&spectrum, level, args.samples)
        .map_err(|e| CliError::Numeric(format!("nu = {}: {e}", args.nu)))?;
    let report = compare(&sampled, &oracle)
        .map_err(|e| CliError::Numeric(format!("nu = {}: {e}", args.nu)))?;

    let header = vec![
        format!("overlap = {}", output::fmt(report.overlap)),
        format!("l2_diff = {}", output::fmt(report.l2_diff)),
        format!("max_diff = {}", output::fmt(report.max_diff)),
    ];
    let rows: Vec<WavefunctionRow> = sampled
        .xs
        .iter()
        .zip(&sampled.values)
        .zip(&oracle.values)
        .map(|((&x, &t), &o)| WavefunctionRow {
            x_over_l: x,
            psi_trial: t,
            psi_oracle: Some(o),
        })
        .collect();
    write_out(args.output.as_deref(), |w| match args.format {
        Format::Csv => output::wavefunction_csv(w, &header, &rows),
        Format::Json => output::json_array(w, &rows),
    })?;
    Ok(ExitCode::SUCCESS)
}

pub fn verify() -> Result<ExitCode, CliError> {
    let rows = run_all();
    let mut all_pass = true;
    for row in &rows {
        println!("{}", row.line());
        all_pass &= row.pass;
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    println!(
        "{} of {} rows passed",
        rows.len() - failed,
        rows.len()
    );
    if all_pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}

pub fn box_demo(args: &BoxDemoArgs) -> Result<ExitCode, CliError> {
    if args.max_order == 0 {
        return Err(CliError::Usage("--max-order must be at least 1".into()));
    }
    let exact = std::f64::consts::PI * std::f64::consts::PI / 2.0;
    let (num, den) = box_energy_order1_rational();
    println!("particle in a box, ground state, energies in hbar^2/(m L^2)");
    println!("exact: pi^2/2 = {}", output::fmt(exact));
    println!("order 1 (exact rational): {num}/{den}");
    for order in 1..=args.max_order {
        let e = box_energy(order).map_err(|e| CliError::Numeric(e.to_string()))?;
        println!(
            "order {order}: {} (relative error {})",
            output::fmt(e),
            output::fmt((e - exact).abs() / exact)
        );
    }
    Ok(ExitCode::SUCCESS)
}
