use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::gates::Sector;
use crate::geometry::SchmidtCoordinates;
use crate::path::{SchmidtPath, Segment, DEFAULT_SAMPLES};

use super::schedule::{HamiltonianSchedule, Pulse};
use super::spin::Coefficients;

/// Coefficients that keep `Γ₊(α(t), β(t))` an exact solution:
/// `c_XY = -(α̇/2) sin β`, `c_DM = (α̇/2) cos β`, `c_Z = β̇/2`.
pub fn coefficients_from_rates(at: SchmidtCoordinates, alpha_dot: f64, beta_dot: f64) -> Coefficients {
    let (s, c) = at.beta.sin_cos();
    Coefficients::new(-0.5 * alpha_dot * s, 0.5 * alpha_dot * c, 0.5 * beta_dot)
}

/// Derivative of uniformly spaced samples, fourth order where at least five
/// samples are available.
pub fn finite_difference(f: &[f64], h: f64) -> Vec<f64> {
    let n = f.len();
    match n {
        0 | 1 => vec![0.0; n],
        2 => vec![(f[1] - f[0]) / h; 2],
        3 | 4 => (0..n)
            .map(|i| {
                if i == 0 {
                    (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h)
                } else if i == n - 1 {
                    (3.0 * f[i] - 4.0 * f[i - 1] + f[i - 2]) / (2.0 * h)
                } else {
                    (f[i + 1] - f[i - 1]) / (2.0 * h)
                }
            })
            .collect(),
        _ => {
            let d = 12.0 * h;
            let fwd = |g: &dyn Fn(usize) -> f64, i: usize| match i {
                0 => (-25.0 * g(0) + 48.0 * g(1) - 36.0 * g(2) + 16.0 * g(3) - 3.0 * g(4)) / d,
                _ => (-3.0 * g(0) - 10.0 * g(1) + 18.0 * g(2) - 6.0 * g(3) + g(4)) / d,
            };
            let head = |k: usize| f[k];
            let tail = |k: usize| f[n - 1 - k];
            (0..n)
                .map(|i| match i {
                    0 | 1 => fwd(&head, i),
                    _ if i >= n - 2 => -fwd(&tail, n - 1 - i),
                    _ => (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / d,
                })
                .collect()
        }
    }
}

fn segment_pulse(seg: &Segment) -> Pulse {
    let duration = seg.duration();
    match seg {
        Segment::Latitude { alpha, beta_start, beta_end, .. } => Pulse::Constant {
            duration,
            coeffs: coefficients_from_rates(
                SchmidtCoordinates::new(*alpha, *beta_start),
                0.0,
                (beta_end - beta_start) / duration,
            ),
        },
        Segment::Meridian { beta, alpha_start, alpha_end, .. } => Pulse::Constant {
            duration,
            coeffs: coefficients_from_rates(
                SchmidtCoordinates::new(*alpha_start, *beta),
                (alpha_end - alpha_start) / duration,
                0.0,
            ),
        },
        Segment::Arc(arc) => Pulse::Sampled {
            duration,
            samples: arc
                .track(DEFAULT_SAMPLES)
                .into_iter()
                .map(|(at, ad, bd)| coefficients_from_rates(at, ad, bd))
                .collect(),
        },
        Segment::Sampled(s) => {
            let h = s.step();
            let ad = finite_difference(&s.alpha, h);
            let bd = finite_difference(&s.beta, h);
            Pulse::Sampled {
                duration,
                samples: (0..s.alpha.len()).map(|k| coefficients_from_rates(s.coords(k), ad[k], bd[k])).collect(),
            }
        }
    }
}

/// Γ-sector schedule whose propagator carries `Γ₊(r(0))` along the path.
pub fn reverse_engineer(path: &SchmidtPath) -> HamiltonianSchedule {
    reverse_engineer_in(path, Sector::Gamma)
}

/// As [`reverse_engineer`], in either sector.
pub fn reverse_engineer_in(path: &SchmidtPath, sector: Sector) -> HamiltonianSchedule {
    let pulses = path.segments().iter().map(segment_pulse).collect();
    HamiltonianSchedule::new(sector, pulses).expect("validated paths give finite, positive-length pulses")
}

/// Dynamical phases `(φ₊, φ₋)` acquired by `Γ±` along the path:
/// `φ₊ = -½ ∫ cos α dβ = -φ₋`.
pub fn dynamical_phase(path: &SchmidtPath) -> (f64, f64) {
    let phi: f64 = -0.5 * path.segments().iter().map(Segment::cos_alpha_dbeta).sum::<f64>();
    (phi, -phi)
}

/// Two-segment loop from `(π/2, π/2)`: along the equator to `β = -π/2`
/// during `[0, t₁]`, then over the north pole along the `β = -π/2` meridian
/// until `τ`. Encloses `Ω = -π`.
pub fn orange_slice_path(t1: f64, tau: f64) -> Result<SchmidtPath> {
    if !(t1 > 0.0 && tau > t1 && tau.is_finite()) {
        return Err(Error::InvalidParameter(format!("need 0 < t1 < tau, got t1 = {t1}, tau = {tau}")));
    }
    SchmidtPath::new(vec![
        Segment::Latitude { alpha: FRAC_PI_2, beta_start: FRAC_PI_2, beta_end: -FRAC_PI_2, duration: t1 },
        Segment::Meridian { beta: -FRAC_PI_2, alpha_start: FRAC_PI_2, alpha_end: -FRAC_PI_2, duration: tau - t1 },
    ])
}
