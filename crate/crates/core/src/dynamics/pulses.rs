use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::gates::{u_general, Sector};
use crate::linalg::{c, herm_exp, max_abs_diff, Matrix4c};

use super::schedule::{HamiltonianSchedule, Pulse};
use super::spin::{Coefficients, SpinOperators};

fn check_times(t1: f64, tau: f64) -> Result<()> {
    if t1 > 0.0 && tau > t1 && tau.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("need 0 < t1 < tau, got t1 = {t1}, tau = {tau}")))
    }
}

/// `-(π/2t₁) h_Z` on `[0, t₁]`, then `-(π/2(τ-t₁)) h_XY` on `[t₁, τ]`.
pub fn two_pulse_schedule(t1: f64, tau: f64) -> Result<HamiltonianSchedule> {
    tilted_schedule(0.0, t1, tau)
}

/// Same first pulse; the second pulse field is tilted by `θ` towards `-h_Z`:
/// `-(π/2(τ-t₁)) (cos θ h_XY - sin θ h_Z)`.
pub fn tilted_schedule(theta: f64, t1: f64, tau: f64) -> Result<HamiltonianSchedule> {
    check_times(t1, tau)?;
    if !theta.is_finite() {
        return Err(Error::NonFinite("theta"));
    }
    let t2 = tau - t1;
    let k = -FRAC_PI_2 / t2;
    let (s, co) = theta.sin_cos();
    HamiltonianSchedule::new(
        Sector::Gamma,
        vec![
            Pulse::Constant { duration: t1, coeffs: Coefficients::new(0.0, 0.0, -FRAC_PI_2 / t1) },
            Pulse::Constant { duration: t2, coeffs: Coefficients::new(k * co, 0.0, -k * s) },
        ],
    )
}

/// Splitting of the tilted second pulse into `n` alternating XY and Z steps,
/// each carrying rotation angle `π/2n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrotterPlan {
    pub theta: f64,
    pub n: usize,
}

impl TrotterPlan {
    pub fn new(theta: f64, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("Trotter step count must be at least 1".into()));
        }
        if !theta.is_finite() {
            return Err(Error::NonFinite("theta"));
        }
        Ok(Self { theta, n })
    }
}

/// `exp(i (π/2n) cos θ h_XY) · exp(-i (π/2n) sin θ h_Z)`.
pub fn trotter_step(plan: &TrotterPlan) -> Matrix4c {
    let ops = SpinOperators::gamma();
    let dt = FRAC_PI_2 / plan.n as f64;
    let (s, co) = plan.theta.sin_cos();
    let xy = herm_exp(&(ops.h_xy * c(-co, 0.0)), dt).expect("finite");
    let z = herm_exp(&(ops.h_z * c(s, 0.0)), dt).expect("finite");
    xy * z
}

/// `trotter_step(plan)ⁿ`.
pub fn trotter_propagate(plan: &TrotterPlan) -> Matrix4c {
    let step = trotter_step(plan);
    (0..plan.n).fold(Matrix4c::identity(), |acc, _| step * acc)
}

/// The exact second pulse `exp(i (π/2)(cos θ h_XY - sin θ h_Z))`.
pub fn trotter_target(theta: f64) -> Matrix4c {
    let ops = SpinOperators::gamma();
    let (s, co) = theta.sin_cos();
    let h = ops.h_xy * c(-co, 0.0) + ops.h_z * c(s, 0.0);
    herm_exp(&h, FRAC_PI_2).expect("finite")
}

/// Trotterized second pulse after the exact first pulse `exp(i (π/2) h_Z)`.
pub fn composed_trotter_gate(plan: &TrotterPlan) -> Matrix4c {
    let first = herm_exp(&(SpinOperators::gamma().h_z * c(-1.0, 0.0)), FRAC_PI_2).expect("finite");
    trotter_propagate(plan) * first
}

/// `Ω` for a gate of the form [`u_general`]: `2 atan2(Re U₂₁, Re U₁₁)`.
pub fn extract_rotation_angle(u: &Matrix4c) -> f64 {
    2.0 * u[(2, 1)].re.atan2(u[(1, 1)].re)
}

/// Distance of `u` from `u_general` at its extracted angle.
pub fn rotation_form_deviation(u: &Matrix4c) -> f64 {
    max_abs_diff(u, &u_general(extract_rotation_angle(u)))
}
