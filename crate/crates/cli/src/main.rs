use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use schmidt_gates_cli::{execute, output_path, CheckStatus, CommandKind, Scenario};

/// Simulate, classify and sweep geometric Schmidt-sphere gates.
#[derive(Parser)]
#[command(name = "schmidt-gates", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reverse engineer and propagate a path; write a JSON report.
    Simulate(Common),
    /// Makhlin invariants and entangler class of one gate; write a JSON report.
    Classify(Common),
    /// Invariants over an (alpha0, omega) grid; write CSV.
    SweepMap(Common),
    /// Trotter error and extracted rotation angle over (theta, n); write CSV.
    TrotterSweep(Common),
}

#[derive(Args)]
struct Common {
    /// Scenario file (JSON).
    scenario: PathBuf,
    /// Output file; defaults to the scenario's `output` field, then stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Tolerance for checks and classification.
    #[arg(long)]
    tol: Option<f64>,
}

const EXIT_CHECKS_FAILED: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (kind, args) = match cli.command {
        Command::Simulate(a) => (CommandKind::Simulate, a),
        Command::Classify(a) => (CommandKind::Classify, a),
        Command::SweepMap(a) => (CommandKind::SweepMap, a),
        Command::TrotterSweep(a) => (CommandKind::TrotterSweep, a),
    };
    match run(kind, &args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_CHECKS_FAILED),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_BAD_INPUT)
        }
    }
}

fn run(kind: CommandKind, args: &Common) -> anyhow::Result<bool> {
    let scenario = Scenario::load(&args.scenario)?;
    let outcome = execute(kind, &scenario, args.tol)?;
    match output_path(args.out.as_deref(), &scenario, &args.scenario) {
        Some(path) => std::fs::write(&path, &outcome.body).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().lock().write_all(outcome.body.as_bytes()).context("writing stdout")?,
    }
    for check in &outcome.checks {
        let tag = match check.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::NotApplicable => "n/a ",
        };
        eprintln!("[{tag}] {}", check.name);
    }
    Ok(outcome.passed())
}
