//! The `abcd` command: parse an optical system, analyse it, print a report.
//!
//! Exit codes: `0` success, `1` parse or validation failure, `2` domain error
//! (unstable cavity, singular transform, ...). Errors go to stderr as
//! `{"error": {"kind": ..., "message": ...}}`.

pub mod error;
pub mod output;
pub mod report;
pub mod spec;

use std::path::PathBuf;

use abcd_core::cavity::CavitySpec;
use abcd_core::lorentz::{
    four_momentum_massive, four_momentum_massless, gauge_limit_matrix, lift_wigner4,
};
use abcd_core::multilayer::LayerCycleSpec;
use abcd_core::Tolerances;
use clap::{Parser, Subcommand};

pub use error::CliError;
pub use output::{render, Format};
pub use report::{analyze, AnalysisReport, AnalyzeOptions};
pub use spec::{parse_spec, SystemSpec};

use report::{check_momentum, MomentumKind};

#[derive(Debug, Parser)]
#[command(
    name = "abcd",
    version,
    about = "Analyse unimodular ABCD ray-transfer systems"
)]
pub struct Cli {
    /// Determinant tolerance.
    #[arg(long, global = true, env = "ABCD_TOL", default_value_t = 1e-9)]
    pub tol: f64,
    /// Half-width of the parabolic trace band around ±2.
    #[arg(long = "class-tol", global = true, default_value_t = 1e-9)]
    pub class_tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyse a spec file.
    Analyze {
        file: PathBuf,
        /// Add the matching Lorentz little-group check.
        #[arg(long)]
        lorentz: bool,
    },
    /// Analyse a spec file and raise it to the `n`th power.
    Power {
        file: PathBuf,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        lorentz: bool,
    },
    /// Two identical mirrors of radius `r`, `d` apart.
    Cavity {
        #[arg(long, allow_hyphen_values = true)]
        d: f64,
        #[arg(long, allow_hyphen_values = true)]
        r: f64,
        /// Number of round trips.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        lorentz: bool,
    },
    /// One period of a two-medium stack.
    Multilayer {
        #[arg(long, allow_hyphen_values = true)]
        delta1: f64,
        #[arg(long, allow_hyphen_values = true)]
        delta2: f64,
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        lorentz: bool,
    },
    /// Little-group check: `--eta --theta --mass` (massive) or `--gauge-gamma --p` (massless).
    Lorentz {
        #[arg(long, allow_hyphen_values = true)]
        eta: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        mass: Option<f64>,
        #[arg(long = "gauge-gamma", allow_hyphen_values = true)]
        gauge_gamma: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<f64>,
    },
}

impl Cli {
    fn tolerances(&self) -> Result<Tolerances<f64>, CliError> {
        for (name, v) in [("--tol", self.tol), ("--class-tol", self.class_tol)] {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(CliError::Usage(format!(
                    "{name} must be a finite non-negative number"
                )));
            }
        }
        Ok(Tolerances::new(self.tol, self.class_tol))
    }
}

fn read_spec(path: &PathBuf) -> Result<SystemSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_spec(&text)
}

/// Runs a parsed command line and returns the rendered report.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let tol = cli.tolerances()?;
    let report = |spec: SystemSpec, n: Option<u32>, lorentz: bool| {
        let opts = AnalyzeOptions { tol, n, lorentz };
        analyze(&spec, &opts).map(|r| render(&r, cli.format))
    };
    match &cli.command {
        Command::Analyze { file, lorentz } => report(read_spec(file)?, None, *lorentz),
        Command::Power { file, n, lorentz } => report(read_spec(file)?, Some(*n), *lorentz),
        Command::Cavity { d, r, n, lorentz } => {
            report(SystemSpec::Cavity(CavitySpec::new(*d, *r)), *n, *lorentz)
        }
        Command::Multilayer {
            delta1,
            delta2,
            sigma,
            n,
            lorentz,
        } => report(
            SystemSpec::Multilayer(LayerCycleSpec::new(*delta1, *delta2, *sigma)),
            *n,
            *lorentz,
        ),
        Command::Lorentz {
            eta,
            theta,
            mass,
            gauge_gamma,
            p,
        } => {
            let check =
                match (eta, theta, mass, gauge_gamma, p) {
                    (Some(eta), Some(theta), Some(mass), None, None) => check_momentum(
                        MomentumKind::Massive,
                        lift_wigner4(*eta, *theta),
                        four_momentum_massive(*mass, *eta)?,
                        tol.det,
                    ),
                    (None, None, None, Some(g), Some(p)) => check_momentum(
                        MomentumKind::Massless,
                        gauge_limit_matrix(*g),
                        four_momentum_massless(*p),
                        tol.det,
                    ),
                    _ => return Err(CliError::Usage(
                        "lorentz takes either --eta, --theta and --mass, or --gauge-gamma and --p"
                            .into(),
                    )),
                };
            Ok(render(&check, cli.format))
        }
    }
}

/// Full entry point: parses `args`, runs, writes output, returns the exit code.
pub fn main_with_args<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            eprintln!(
                "{}",
                CliError::Usage(e.to_string().trim_end().to_string()).to_json()
            );
            return 1;
        }
    };
    let result = run(&cli).and_then(|out| match &cli.output {
        Some(path) => {
            std::fs::write(path, out).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{out}");
            Ok(())
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{}", e.to_json());
            e.exit_code()
        }
    }
}
