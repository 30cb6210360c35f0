//! `sweep-map` and `trotter-sweep`: grid evaluations written as CSV.
//!
//! Grid points are evaluated in parallel; rows always come out in grid order.

use std::f64::consts::FRAC_PI_2;

use rayon::prelude::*;

use schmidt_gates::dynamics::rotation_form_deviation;
use schmidt_gates::invariants::closed_form_invariants;
use schmidt_gates::{
    classify, composed_trotter_gate, extract_rotation_angle, gate_distance, makhlin_invariants, propagate,
    schmidt_gate, tilted_schedule, trotter_propagate, trotter_target, EntanglerClass, GeometricGateSpec,
    LocalInvariants, TrotterPlan,
};

use crate::error::CliError;
use crate::numfmt::fmt_f64;
use crate::report::Check;
use crate::scenario::{SweepMapSpec, TrotterSweepSpec};

pub const SWEEP_MAP_COLUMNS: [&str; 6] = ["alpha0", "omega", "g1_re", "g1_im", "g2", "class"];
pub const TROTTER_COLUMNS: [&str; 5] = ["theta", "n", "infidelity", "omega_empirical", "omega_exact"];

/// Pulse timing used for the exact tilted reference; the gate does not
/// depend on it.
const T1: f64 = 1.0;
const TAU: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub alpha0: f64,
    pub omega: f64,
    pub invariants: LocalInvariants,
    pub class: EntanglerClass,
}

pub fn sweep_map_rows(spec: &SweepMapSpec, tol: f64) -> Result<Vec<SweepRow>, CliError> {
    let alphas = spec.alpha0.points();
    let omegas = spec.omega.points();
    let n_omega = omegas.len();
    (0..alphas.len() * n_omega)
        .into_par_iter()
        .map(|idx| {
            let (alpha0, omega) = (alphas[idx / n_omega], omegas[idx % n_omega]);
            let u = schmidt_gate(&GeometricGateSpec::gamma(alpha0, 0.0, omega));
            let inv = makhlin_invariants(&u).map_err(CliError::core(format!("sweep-map row {idx}")))?;
            Ok(SweepRow { alpha0, omega, invariants: inv, class: classify(&inv, tol) })
        })
        .collect()
}

pub fn sweep_map_checks(rows: &[SweepRow]) -> Vec<Check> {
    let worst = rows
        .iter()
        .map(|r| r.alpha0.cos().powi(4) - r.invariants.g1.norm())
        .fold(f64::NEG_INFINITY, f64::max);
    vec![Check::at_most("g1_lower_bound", worst, 1e-10)]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrotterRow {
    pub theta: f64,
    pub n: usize,
    /// Phase-aligned distance between `(U_n)ⁿ` and the exact second pulse.
    pub infidelity: f64,
    /// Rotation angle read off the Trotterized composite gate.
    pub omega_empirical: f64,
    /// Rotation angle read off the exactly propagated tilted schedule.
    pub omega_exact: f64,
}

pub fn trotter_rows(spec: &TrotterSweepSpec) -> Result<Vec<TrotterRow>, CliError> {
    let thetas = spec.theta.values();
    let ns = &spec.n;
    (0..thetas.len() * ns.len())
        .into_par_iter()
        .map(|idx| {
            let (theta, n) = (thetas[idx / ns.len()], ns[idx % ns.len()]);
            let plan = TrotterPlan::new(theta, n).map_err(CliError::core("trotter-sweep"))?;
            let exact = propagate(&tilted_schedule(theta, T1, TAU).map_err(CliError::core("trotter-sweep"))?);
            Ok(TrotterRow {
                theta,
                n,
                infidelity: gate_distance(&trotter_propagate(&plan), &trotter_target(theta)),
                omega_empirical: extract_rotation_angle(&composed_trotter_gate(&plan)),
                omega_exact: extract_rotation_angle(&exact),
            })
        })
        .collect()
}

/// The exact composite must have the rotation form, and its invariants must
/// agree with the closed form at the extracted angle.
pub fn trotter_checks(spec: &TrotterSweepSpec, tol: f64) -> Result<Vec<Check>, CliError> {
    let mut shape: f64 = 0.0;
    let mut consistency: f64 = 0.0;
    for theta in spec.theta.values() {
        let u = propagate(&tilted_schedule(theta, T1, TAU).map_err(CliError::core("trotter-sweep"))?);
        shape = shape.max(rotation_form_deviation(&u));
        let inv = makhlin_invariants(&u).map_err(CliError::core("trotter-sweep"))?;
        let cf = closed_form_invariants(FRAC_PI_2, extract_rotation_angle(&u));
        consistency = consistency.max((inv.g1 - cf.g1).norm()).max((inv.g2 - cf.g2).abs());
    }
    Ok(vec![
        Check::at_most("exact_rotation_form", shape, tol),
        Check::at_most("invariant_consistency", consistency, tol),
    ])
}

fn csv_string<I: IntoIterator<Item = Vec<String>>>(header: &[&str], rows: I) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

pub fn sweep_map_csv(rows: &[SweepRow]) -> String {
    csv_string(
        &SWEEP_MAP_COLUMNS,
        rows.iter().map(|r| {
            vec![
                fmt_f64(r.alpha0),
                fmt_f64(r.omega),
                fmt_f64(r.invariants.g1.re),
                fmt_f64(r.invariants.g1.im),
                fmt_f64(r.invariants.g2),
                r.class.as_str().to_owned(),
            ]
        }),
    )
}

pub fn trotter_csv(rows: &[TrotterRow]) -> String {
    csv_string(
        &TROTTER_COLUMNS,
        rows.iter().map(|r| {
            vec![
                fmt_f64(r.theta),
                r.n.to_string(),
                fmt_f64(r.infidelity),
                fmt_f64(r.omega_empirical),
                fmt_f64(r.omega_exact),
            ]
        }),
    )
}
