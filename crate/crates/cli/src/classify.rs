//! `classify`: Makhlin invariants and entangler class of one gate.

use serde::Serialize;

use schmidt_gates::geometry::bloch_state;
use schmidt_gates::invariants::closed_form_invariants;
use schmidt_gates::linalg::{c, unitary_deviation};
use schmidt_gates::{
    classify, makhlin_invariants, tolerance, u_general, EntanglerClass, Frame, GeometricGateSpec, Matrix4c,
};

use crate::error::CliError;
use crate::numfmt::Num;
use crate::report::{all_passed, matrix_json, Check, InvariantsJson};
use crate::scenario::{ClassifySpec, GateSpec, MatrixSpec, SchmidtGateSpec, SectorName, UGeneralSpec, SCHEMA_VERSION};

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub tolerance: Num,
    pub gate_kind: &'static str,
    pub unitary: Vec<Vec<[Num; 2]>>,
    pub invariants: InvariantsJson,
    /// Closed-form invariants when the gate is a Schmidt gate.
    pub closed_form: Option<InvariantsJson>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// The unitary described by `spec`, plus `(α₀, Ω)` when the closed form applies.
pub fn build_gate(spec: &GateSpec) -> Result<(Matrix4c, Option<(f64, f64)>), CliError> {
    const FIELD: &str = "classify.gate";
    Ok(match spec {
        GateSpec::Schmidt(SchmidtGateSpec { alpha0, beta0, omega, sector, frame }) => {
            let base = match sector {
                SectorName::Gamma => GeometricGateSpec::gamma(alpha0.0, beta0.0, omega.0),
                SectorName::Lambda => GeometricGateSpec::lambda(alpha0.0, beta0.0, omega.0),
            };
            let gate = match frame {
                Some(f) => base.with_frame(
                    Frame::new(bloch_state(f.n_theta.0, f.n_phi.0), bloch_state(f.m_theta.0, f.m_phi.0))
                        .map_err(CliError::core(format!("{FIELD}.frame")))?,
                ),
                None => base,
            };
            (gate.unitary(), Some((alpha0.0, omega.0)))
        }
        GateSpec::UGeneral(UGeneralSpec { omega }) => (u_general(omega.0), Some((std::f64::consts::FRAC_PI_2, omega.0))),
        GateSpec::Matrix(MatrixSpec { rows }) => {
            let u = Matrix4c::from_fn(|r, k| c(rows[r][k][0].0, rows[r][k][1].0));
            let dev = unitary_deviation(&u);
            if dev > tolerance::UNITARY {
                return Err(CliError::invalid(format!("{FIELD}.rows"), format!("matrix is not unitary (deviation {dev:e})")));
            }
            (u, None)
        }
    })
}

pub fn run_classify(spec: &ClassifySpec, tol: f64) -> Result<ClassifyReport, CliError> {
    let (u, closed) = build_gate(&spec.gate)?;
    let inv = makhlin_invariants(&u).map_err(CliError::core("classify.gate"))?;
    let class = classify(&inv, tol);
    let mut checks = vec![Check::at_most("unitarity", unitary_deviation(&u), tolerance::UNITARY)];
    let closed_form = closed.map(|(alpha0, omega)| {
        let cf = closed_form_invariants(alpha0, omega);
        let diff = (cf.g1 - inv.g1).norm().max((cf.g2 - inv.g2).abs());
        checks.push(Check::at_most("closed_form_agreement", diff, tolerance::PIPELINE));
        InvariantsJson::new(&cf, classify(&cf, tol))
    });
    if let Some(want) = spec.expect_class {
        let want = EntanglerClass::from(want);
        checks.push(Check::condition("expected_class", class == want, format!("got {class}, expected {want}")));
    }
    let passed = all_passed(&checks);
    Ok(ClassifyReport {
        schema_version: SCHEMA_VERSION,
        command: "classify",
        tolerance: Num(tol),
        gate_kind: match spec.gate {
            GateSpec::Schmidt(_) => "schmidt",
            GateSpec::UGeneral(_) => "u_general",
            GateSpec::Matrix(_) => "matrix",
        },
        unitary: matrix_json(&u),
        invariants: InvariantsJson::new(&inv, class),
        closed_form,
        checks,
        passed,
    })
}
