//! `simulate`: reverse engineer a path, propagate it and compare with the
//! predicted geometric gate.

use serde::Serialize;

use schmidt_gates::dynamics::{reverse_engineer_in, Pulse};
use schmidt_gates::geometry::{assemble_state, Branch, Frame};
use schmidt_gates::linalg::{basis_state, unitary_deviation};
use schmidt_gates::{
    classify, dynamical_phase, gate_fidelity, makhlin_invariants, orange_slice_path, propagate, schmidt_gate,
    solid_angle, tolerance, EntanglerClass, GeometricGateSpec, RotationArc, SampledSegment, SchmidtCoordinates,
    SchmidtPath, Sector, Segment,
};

use crate::error::CliError;
use crate::numfmt::Num;
use crate::report::{all_passed, matrix_json, Check, InvariantsJson, PointJson};
use crate::scenario::{
    ArcSpec, LatitudeLoopSpec, LatitudeSpec, MeridianSpec, OrangeSliceSpec, PathSpec, SampledLatitudeSpec, SampledSpec,
    SegmentSpec, SegmentsSpec, SimulateMode, SimulateSpec, StationarySpec, SCHEMA_VERSION,
};

const FIELD: &str = "simulate.path";

pub fn build_path(spec: &PathSpec) -> Result<SchmidtPath, CliError> {
    let path = match spec {
        PathSpec::OrangeSlice(OrangeSliceSpec { t1, tau }) => orange_slice_path(t1.0, tau.0),
        PathSpec::LatitudeLoop(LatitudeLoopSpec { alpha, beta_start, winding, duration }) => SchmidtPath::new(vec![Segment::Latitude {
            alpha: alpha.0,
            beta_start: beta_start.0,
            beta_end: beta_start.0 + winding.0,
            duration: duration.0,
        }]),
        PathSpec::SampledLatitude(SampledLatitudeSpec { alpha, beta_start, winding, duration, samples }) => {
            let (a, b0, w, d) = (alpha.0, beta_start.0, winding.0, duration.0);
            let seg = SampledSegment::from_fn(d, *samples, |t| SchmidtCoordinates::new(a, b0 + w * t / d));
            SchmidtPath::new(vec![Segment::Sampled(seg)])
        }
        PathSpec::Stationary(StationarySpec { alpha, beta, duration }) => {
            SchmidtPath::stationary(SchmidtCoordinates::new(alpha.0, beta.0), duration.0)
        }
        PathSpec::Segments(SegmentsSpec { segments }) => {
            let mut out = Vec::with_capacity(segments.len());
            for (k, seg) in segments.iter().enumerate() {
                out.push(match seg {
                    SegmentSpec::Latitude(LatitudeSpec { alpha, beta_start, beta_end, duration }) => Segment::Latitude {
                        alpha: alpha.0,
                        beta_start: beta_start.0,
                        beta_end: beta_end.0,
                        duration: duration.0,
                    },
                    SegmentSpec::Meridian(MeridianSpec { beta, alpha_start, alpha_end, duration }) => Segment::Meridian {
                        beta: beta.0,
                        alpha_start: alpha_start.0,
                        alpha_end: alpha_end.0,
                        duration: duration.0,
                    },
                    SegmentSpec::Arc(ArcSpec { alpha, beta, towards, angle, duration }) => {
                        let towards = nalgebra::Vector3::new(towards[0].0, towards[1].0, towards[2].0);
                        let start = SchmidtCoordinates::new(alpha.0, beta.0);
                        Segment::Arc(
                            RotationArc::great_circle(start, towards, angle.0, duration.0)
                                .map_err(CliError::core(format!("{FIELD}.segments[{k}]")))?,
                        )
                    }
                    SegmentSpec::Sampled(SampledSpec { duration, alpha, beta }) => Segment::Sampled(
                        SampledSegment::new(
                            duration.0,
                            alpha.iter().map(|r| r.0).collect(),
                            beta.iter().map(|r| r.0).collect(),
                        )
                        .map_err(CliError::core(format!("{FIELD}.segments[{k}]")))?,
                    ),
                });
            }
            SchmidtPath::new(out)
        }
    };
    path.map_err(CliError::core(FIELD))
}

#[derive(Debug, Serialize)]
pub struct PathSummary {
    pub segments: usize,
    pub duration: Num,
    pub start: PointJson,
    pub end: PointJson,
    pub closure_gap: Num,
}

#[derive(Debug, Serialize)]
pub struct PulseSummary {
    pub kind: &'static str,
    pub duration: Num,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<[Num; 3]>,
    /// `∫ (c_XY, c_DM, c_Z) dt`.
    pub area: [Num; 3],
}

#[derive(Debug, Serialize)]
pub struct ScheduleSummary {
    pub sector: &'static str,
    pub duration: Num,
    pub pulses: Vec<PulseSummary>,
}

#[derive(Debug, Serialize)]
pub struct PhaseSummary {
    pub plus: Num,
    pub minus: Num,
    pub vanishes: bool,
}

#[derive(Debug, Serialize)]
pub struct GeometricGateSummary {
    pub alpha0: Num,
    pub beta0: Num,
    pub omega: Num,
    pub fidelity: Num,
    pub applicable: bool,
}

#[derive(Debug, Serialize)]
pub struct SimulateReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub mode: &'static str,
    pub tolerance: Num,
    pub path: PathSummary,
    pub schedule: ScheduleSummary,
    pub propagator: Vec<Vec<[Num; 2]>>,
    pub solid_angle: Option<Num>,
    pub dynamical_phase: PhaseSummary,
    pub tracking_error: Num,
    pub geometric_gate: Option<GeometricGateSummary>,
    pub invariants: InvariantsJson,
    pub checks: Vec<Check>,
    pub passed: bool,
}

pub fn run_simulate(spec: &SimulateSpec, tol: f64) -> Result<SimulateReport, CliError> {
    let path = build_path(&spec.path)?;
    let omega = match spec.mode {
        SimulateMode::Loop => Some(solid_angle(&path).map_err(|e| {
            CliError::invalid(FIELD, format!("{e}; set \"mode\": \"open\" to simulate an open path"))
        })?),
        SimulateMode::Open => None,
    };
    let schedule = reverse_engineer_in(&path, Sector::Gamma);
    let u = propagate(&schedule);
    let (phi_plus, phi_minus) = dynamical_phase(&path);
    let vanishes = phi_plus.abs() <= tol;

    let r0 = path.start();
    let std = Frame::standard();
    let tracked = u * assemble_state(r0, &std, Branch::GammaPlus);
    let tracking_error = (tracked - assemble_state(path.end(), &std, Branch::GammaPlus)).norm();
    let leak = [0, 3].iter().map(|&k| (u * basis_state(k) - basis_state(k)).norm()).fold(0.0, f64::max);

    let inv = makhlin_invariants(&u).map_err(CliError::core("propagator"))?;
    let class = classify(&inv, tol);

    let mut checks = vec![
        Check::at_most("unitarity", unitary_deviation(&u), tolerance::UNITARY),
        Check::at_most("schmidt_tracking", tracking_error, tol),
        Check::at_most("frame_preserved", leak, tol),
    ];

    let geometric_gate = omega.map(|omega| {
        let predicted = schmidt_gate(&GeometricGateSpec::gamma(r0.alpha, r0.beta, omega));
        let fidelity = gate_fidelity(&u, &predicted);
        checks.push(if vanishes {
            Check::at_most("geometric_gate_fidelity", 1.0 - fidelity, tol)
        } else {
            Check::not_applicable(
                "geometric_gate_fidelity",
                format!("dynamical phase {phi_plus} does not vanish; the gate is not purely geometric"),
            )
        });
        GeometricGateSummary {
            alpha0: Num(r0.alpha),
            beta0: Num(r0.beta),
            omega: Num(omega),
            fidelity: Num(fidelity),
            applicable: vanishes,
        }
    });

    if let Some(expect) = &spec.expect {
        if let Some(want) = expect.solid_angle {
            match omega {
                Some(got) => checks.push(Check::at_most("expected_solid_angle", (got - want.0).abs(), tol)),
                None => checks.push(Check::not_applicable("expected_solid_angle", "open path")),
            }
        }
        if let Some(want) = expect.class {
            let want = EntanglerClass::from(want);
            checks.push(Check::condition("expected_class", class == want, format!("got {class}, expected {want}")));
        }
    }

    let pulses = schedule
        .pulses()
        .iter()
        .map(|p| {
            let a = p.area();
            let (kind, samples, coefficients) = match p {
                Pulse::Constant { coeffs, .. } => ("constant", None, Some([Num(coeffs.xy), Num(coeffs.dm), Num(coeffs.z)])),
                Pulse::Sampled { samples, .. } => ("sampled", Some(samples.len()), None),
            };
            PulseSummary { kind, duration: Num(p.duration()), samples, coefficients, area: [Num(a.xy), Num(a.dm), Num(a.z)] }
        })
        .collect();

    let passed = all_passed(&checks);
    Ok(SimulateReport {
        schema_version: SCHEMA_VERSION,
        command: "simulate",
        mode: match spec.mode {
            SimulateMode::Loop => "loop",
            SimulateMode::Open => "open",
        },
        tolerance: Num(tol),
        path: PathSummary {
            segments: path.segments().len(),
            duration: Num(path.duration()),
            start: r0.into(),
            end: path.end().into(),
            closure_gap: Num(path.closure_gap()),
        },
        schedule: ScheduleSummary { sector: "gamma", duration: Num(schedule.duration()), pulses },
        propagator: matrix_json(&u),
        solid_angle: omega.map(Num),
        dynamical_phase: PhaseSummary { plus: Num(phi_plus), minus: Num(phi_minus), vanishes },
        tracking_error: Num(tracking_error),
        geometric_gate,
        invariants: InvariantsJson::new(&inv, class),
        checks,
        passed,
    })
}
