use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use witten_local::harness::{self, DEFAULT_SLOPE_TOL};
use witten_local::scenario::Scenario;
use witten_local::Error;

#[derive(Parser)]
#[command(name = "witten", about = "Local Witten-integral expansions and their quadrature oracle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Scenario TOML file.
    #[arg(long, global = true)]
    scenario: Option<PathBuf>,
    /// Output directory; tables go to stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for the oracle.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Allowed shortfall of a remainder slope below M + 2.
    #[arg(long, global = true, default_value_t = DEFAULT_SLOPE_TOL)]
    tol: f64,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Exact coefficient tables for the scenario's model.
    Coeff,
    /// Expansion against oracle: remainder slopes, coefficients, jumps.
    Verify,
    /// Expansion coefficients across the scenario's ζ values.
    Sweep,
    /// Oracle integrals on the ε grid.
    Oracle,
}

fn emit(out: Option<&Path>, name: &str, text: &str) -> Result<(), Error> {
    match out {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            std::fs::write(dir.join(name), text)?;
        }
        None => {
            println!("# {name}");
            print!("{text}");
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<bool, Error> {
    let path = cli.scenario.as_deref().ok_or_else(|| Error::Config("--scenario is required".into()))?;
    if !(cli.tol >= 0.0) {
        return Err(Error::Config(format!("--tol must be nonnegative, got {}", cli.tol)));
    }
    if let Some(n) = cli.jobs {
        if n == 0 {
            return Err(Error::Config("--jobs must be positive".into()));
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let sc = Scenario::load(path)?;
    let out = cli.out.as_deref();
    match cli.command {
        Command::Coeff => emit(out, "coeff.txt", &harness::coeff_text(&sc)?)?,
        Command::Sweep => emit(out, "sweep.csv", &harness::sweep_csv(&sc)?)?,
        Command::Oracle => emit(out, "oracle.csv", &harness::oracle_csv(&sc)?)?,
        Command::Verify => {
            let report = harness::verify(&sc, cli.tol)?;
            emit(out, "verify_slopes.csv", &report.slopes_csv()?)?;
            emit(out, "verify_coefficients.csv", &report.coefficients_csv()?)?;
            if !report.jumps.is_empty() {
                emit(out, "verify_jumps.csv", &report.jumps_csv()?)?;
            }
            for r in &report.slopes {
                eprintln!("zeta={:+.4} M={} slope={:.3} [{}]", r.zeta, r.m, r.slope, r.status.label());
            }
            return Ok(report.passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("tolerance failure");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
