//! Scenario runner behind the `schmidt-gates` binary.
//!
//! Each command reads a versioned JSON scenario and produces one artifact:
//! a JSON report for `simulate` and `classify`, a CSV table for `sweep-map`
//! and `trotter-sweep`. Every artifact comes with a list of tolerance checks;
//! the binary exits with status 0 only when none of them fail.

pub mod classify;
pub mod error;
pub mod numfmt;
pub mod report;
pub mod scenario;
pub mod simulate;
pub mod sweep;

use std::path::{Path, PathBuf};

pub use error::CliError;
pub use report::{all_passed, Check, CheckStatus};
pub use scenario::{CommandKind, Scenario};

#[derive(Debug, Clone)]
pub struct Outcome {
    pub body: String,
    pub checks: Vec<Check>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

/// Runs `scenario` as `command`; `tol` overrides the scenario tolerance.
pub fn execute(command: CommandKind, scenario: &Scenario, tol: Option<f64>) -> Result<Outcome, CliError> {
    if scenario.command != command {
        return Err(CliError::CommandMismatch { expected: command.as_str(), found: scenario.command.as_str() });
    }
    let tol = match tol {
        Some(t) if t.is_finite() && t > 0.0 => t,
        Some(t) => return Err(CliError::invalid("--tol", format!("must be a positive finite number, got {t}"))),
        None => scenario.tolerance(),
    };
    match command {
        CommandKind::Simulate => {
            let spec = scenario.simulate.as_ref().expect("validated");
            let report = simulate::run_simulate(spec, tol)?;
            Ok(Outcome { checks: report.checks.clone(), body: report::to_json(&report) })
        }
        CommandKind::Classify => {
            let spec = scenario.classify.as_ref().expect("validated");
            let report = classify::run_classify(spec, tol)?;
            Ok(Outcome { checks: report.checks.clone(), body: report::to_json(&report) })
        }
        CommandKind::SweepMap => {
            let spec = scenario.sweep_map.clone().unwrap_or_default();
            let rows = sweep::sweep_map_rows(&spec, tol)?;
            Ok(Outcome { checks: sweep::sweep_map_checks(&rows), body: sweep::sweep_map_csv(&rows) })
        }
        CommandKind::TrotterSweep => {
            let spec = scenario.trotter_sweep.as_ref().expect("validated");
            let rows = sweep::trotter_rows(spec)?;
            Ok(Outcome { checks: sweep::trotter_checks(spec, tol)?, body: sweep::trotter_csv(&rows) })
        }
    }
}

/// Where the artifact goes: `--out` first, then the scenario's `output`
/// (relative to the scenario file), otherwise stdout.
pub fn output_path(cli_out: Option<&Path>, scenario: &Scenario, scenario_path: &Path) -> Option<PathBuf> {
    if let Some(p) = cli_out {
        return Some(p.to_path_buf());
    }
    scenario.output.as_ref().map(|p| {
        if p.is_absolute() {
            p.clone()
        } else {
            scenario_path.parent().unwrap_or(Path::new("")).join(p)
        }
    })
}
