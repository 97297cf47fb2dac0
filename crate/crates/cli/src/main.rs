//! Command-line front end: energy-curve tables, wavefunction samples,
//! verification report, box demo and plot-script generation.

mod output;
mod plots;
mod run;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Electronic energy curves and wavefunctions of the one-dimensional
/// hydrogen molecular ion, from closed-form variational series and an
/// independent finite-difference eigensolver.
#[derive(Parser)]
#[command(name = "h2plus1d", version, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Tabulate epsilon(nu) for a state and method over a nu grid.
    EnergyCurve(EnergyCurveArgs),
    /// Sample the trial wavefunction (and the eigensolver's) on [0, L].
    Wavefunction(WavefunctionArgs),
    /// Run the verification table; exit 0 iff every row passes.
    Verify,
    /// Particle-in-a-box demonstration of the series method.
    BoxDemo(BoxDemoArgs),
    /// Emit a gnuplot script plus the CSV it reads for a figure preset.
    Plot(PlotArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum State {
    /// Even ground state.
    Ground,
    /// Odd first excited state.
    Excited,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Order-1 closed form (ground state only).
    Closed1,
    /// Order-2 closed form via the quadratic forms in epsilon.
    Closed2,
    /// Order-n variational minimization (see --order).
    OrderN,
    /// Finite-difference eigensolver with Richardson extrapolation.
    Oracle,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Units {
    /// Dimensionless epsilon = E hbar^2 / (m e^4).
    Dimensionless,
    /// Electronvolts (epsilon times 27.211386245988).
    Ev,
}

#[derive(Args)]
pub struct GridArgs {
    /// Explicit nu values (comma-separated); mutually exclusive with the
    /// range flags.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub nu: Option<Vec<f64>>,
    /// Start of the nu range.
    #[arg(long, requires = "nu_max", conflicts_with = "nu")]
    pub nu_min: Option<f64>,
    /// End of the nu range (inclusive to within half a step).
    #[arg(long, requires = "nu_min", conflicts_with = "nu")]
    pub nu_max: Option<f64>,
    /// Step of the nu range.
    #[arg(long, default_value_t = 0.1)]
    pub nu_step: f64,
}

impl GridArgs {
    pub fn values(&self) -> Result<Vec<f64>, String> {
        let grid = match (&self.nu, self.nu_min, self.nu_max) {
            (Some(list), _, _) => list.clone(),
            (None, Some(lo), Some(hi)) => {
                if self.nu_step <= 0.0 {
                    return Err("--nu-step must be positive".into());
                }
                if hi < lo {
                    return Err("--nu-max must be >= --nu-min".into());
                }
                let n = ((hi - lo) / self.nu_step + 0.5).floor() as usize;
                (0..=n).map(|i| lo + self.nu_step * i as f64).collect()
            }
            _ => return Err("provide --nu or both --nu-min and --nu-max".into()),
        };
        if grid.is_empty() {
            return Err("empty nu grid".into());
        }
        if let Some(&bad) = grid.iter().find(|&&nu| nu <= 0.0 || !nu.is_finite()) {
            return Err(format!("nu must be positive and finite, got {bad}"));
        }
        Ok(grid)
    }
}

#[derive(Args)]
pub struct EnergyCurveArgs {
    #[arg(long, value_enum, default_value_t = State::Ground)]
    pub state: State,
    #[arg(long, value_enum, default_value_t = Method::Closed2)]
    pub method: Method,
    /// Truncation order for --method order-n.
    #[arg(long, default_value_t = 2)]
    pub order: usize,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Coarse grid size N for the eigensolver (fine grid is 2N).
    #[arg(long, default_value_t = 4000)]
    pub grid_points: usize,
    /// Also solve numerically and emit the oracle and delta columns.
    #[arg(long)]
    pub with_oracle: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output path (stdout when omitted).
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = Units::Dimensionless)]
    pub units: Units,
}

#[derive(Args)]
pub struct WavefunctionArgs {
    #[arg(long, value_enum, default_value_t = State::Ground)]
    pub state: State,
    /// Single nu value.
    #[arg(long)]
    pub nu: f64,
    /// Truncation order of the trial.
    #[arg(long, default_value_t = 2)]
    pub order: usize,
    /// Coarse grid size N for the eigensolver.
    #[arg(long, default_value_t = 4000)]
    pub grid_points: usize,
    /// Number of sample points on [0, L].
    #[arg(long, default_value_t = 1001)]
    pub samples: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Args)]
pub struct BoxDemoArgs {
    /// Highest truncation order to tabulate.
    #[arg(long, default_value_t = 4)]
    pub max_order: usize,
}

#[derive(Args)]
pub struct PlotArgs {
    /// Figure preset, fig1 through fig9.
    #[arg(long)]
    pub preset: String,
    /// Directory receiving <preset>.csv and <preset>.gp.
    #[arg(long, default_value = ".")]
    pub output_dir: std::path::PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::EnergyCurve(args) => run::energy_curve(&args),
        Command::Wavefunction(args) => run::wavefunction(&args),
        Command::Verify => run::verify(),
        Command::BoxDemo(args) => run::box_demo(&args),
        Command::Plot(args) => plots::run(&args),
    };
    match result {
        Ok(code) => code,
        Err(run::CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(run::CliError::Numeric(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        // A closed pipe (e.g. piping into `head`) is not a failure.
        Err(run::CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => {
            ExitCode::SUCCESS
        }
        Err(run::CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
