//! `quartic-pd`: positivity verdicts for quartic scalar potentials.
//!
//! Exit status: 0 positive definite, 1 positive semidefinite only,
//! 2 indefinite, 3 inconclusive, 64 bad input, 66 I/O failure.

mod engine;
mod report;
mod scan;
mod spec;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quartic_pd::{GridConfig, Tolerance};

use crate::engine::Settings;
use crate::scan::{Axis, Scan};
use crate::spec::{Arith, PotentialSpec};

const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 66;

#[derive(Parser)]
#[command(
    name = "quartic-pd",
    version,
    about = "Positivity verdicts for quartic scalar potentials"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ArithArg {
    Float,
    Rational,
}

impl From<ArithArg> for Arith {
    fn from(a: ArithArg) -> Arith {
        match a {
            ArithArg::Float => Arith::Float,
            ArithArg::Rational => Arith::Rational,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a potential and print the certificate.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Relative tolerance band for floating-point sign tests.
        #[arg(long, default_value_t = Tolerance::DEFAULT_REL)]
        tolerance: f64,
        /// Override the arithmetic declared in the file.
        #[arg(long, value_enum)]
        arith: Option<ArithArg>,
        /// Outer samples of the numeric fallback.
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Minimize the potential on the unit sphere.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = Tolerance::DEFAULT_REL)]
        tolerance: f64,
        #[arg(long, value_enum)]
        arith: Option<ArithArg>,
    },
    /// Classify every point of a two-parameter grid and write CSV.
    Scan {
        file: PathBuf,
        /// `name:min:max:steps`
        #[arg(long)]
        axis1: String,
        #[arg(long)]
        axis2: String,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = Tolerance::DEFAULT_REL)]
        tolerance: f64,
        #[arg(long, value_enum)]
        arith: Option<ArithArg>,
        #[arg(long)]
        grid: Option<usize>,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_USAGE,
        msg: msg.to_string(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_IO,
        msg: format!("{}: {e}", path.display()),
    })
}

fn load(path: &Path) -> Result<PotentialSpec, Failure> {
    PotentialSpec::parse(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn settings(
    tolerance: f64,
    arith: Option<ArithArg>,
    grid: Option<usize>,
) -> Result<Settings, Failure> {
    let tol = Tolerance::new(tolerance).map_err(usage)?;
    let grid = match grid {
        Some(0..=2) => return Err(usage("--grid must be at least 3")),
        Some(n) => GridConfig::with_samples(n),
        None => GridConfig::default(),
    };
    Ok(Settings {
        arith: arith.map(Arith::from),
        tol,
        grid,
    })
}

fn to_json(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.cmd {
        Cmd::Check {
            file,
            json,
            tolerance,
            arith,
            grid,
        } => {
            let set = settings(tolerance, arith, grid)?;
            let out = engine::check(&load(&file)?, &set);
            if json {
                println!("{}", to_json(&report::check_json(&out)));
            } else {
                print!("{}", report::check_text(&out));
            }
            Ok(out.class.code() as u8)
        }
        Cmd::Oracle {
            file,
            grid,
            json,
            tolerance,
            arith,
        } => {
            let set = settings(tolerance, arith, grid)?;
            let out = engine::oracle(&load(&file)?, &set);
            if json {
                println!("{}", to_json(&report::oracle_json(&out)));
            } else {
                print!("{}", report::oracle_text(&out));
            }
            Ok(out.class.code() as u8)
        }
        Cmd::Scan {
            file,
            axis1,
            axis2,
            output,
            jobs,
            tolerance,
            arith,
            grid,
        } => {
            let set = settings(tolerance, arith, grid)?;
            let (a1, a2) = (
                Axis::parse(&axis1).map_err(usage)?,
                Axis::parse(&axis2).map_err(usage)?,
            );
            let text = read(&file)?;
            let scan =
                Scan::new(&text, a1, a2).map_err(|e| usage(format!("{}: {e}", file.display())))?;
            let jobs =
                jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            if jobs == 0 {
                return Err(usage("--jobs must be at least 1"));
            }
            let csv = scan.run(&set, jobs);
            std::fs::write(&output, csv).map_err(|e| Failure {
                code: EXIT_IO,
                msg: format!("{}: {e}", output.display()),
            })?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("quartic-pd: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
