use crate::error::{Error, Result};
use crate::gates::Sector;
use crate::linalg::{herm_exp, Matrix4c};

use super::spin::{Coefficients, SpinOperators};

const SQRT3_6: f64 = 0.288_675_134_594_812_9;

#[derive(Debug, Clone, PartialEq)]
pub enum Pulse {
    Constant { duration: f64, coeffs: Coefficients },
    /// Coefficients sampled on a uniform grid over the pulse, endpoints
    /// included.
    Sampled { duration: f64, samples: Vec<Coefficients> },
}

impl Pulse {
    pub fn duration(&self) -> f64 {
        match self {
            Pulse::Constant { duration, .. } | Pulse::Sampled { duration, .. } => *duration,
        }
    }

    /// Coefficients at local time `t ∈ [0, duration]`.
    pub fn coeffs_at(&self, t: f64) -> Coefficients {
        match self {
            Pulse::Constant { coeffs, .. } => *coeffs,
            Pulse::Sampled { duration, samples } => {
                let n = samples.len() - 1;
                interpolate(samples, (t / duration).clamp(0.0, 1.0) * n as f64)
            }
        }
    }

    /// `∫ c(t) dt` over the pulse.
    pub fn area(&self) -> Coefficients {
        match self {
            Pulse::Constant { duration, coeffs } => *coeffs * *duration,
            Pulse::Sampled { duration, samples } => {
                let n = samples.len() - 1;
                let h = duration / n as f64;
                let inner = samples[1..n].iter().fold(Coefficients::default(), |acc, &c| acc + c);
                (inner + (samples[0] + samples[n]) * 0.5) * h
            }
        }
    }

    fn validate(&self, index: usize) -> Result<()> {
        let d = self.duration();
        if !(d.is_finite() && d > 0.0) {
            return Err(Error::InvalidParameter(format!("pulse {index}: duration must be positive, got {d}")));
        }
        let finite = match self {
            Pulse::Constant { coeffs, .. } => coeffs.is_finite(),
            Pulse::Sampled { samples, .. } => {
                if samples.len() < 2 {
                    return Err(Error::InvalidParameter(format!("pulse {index}: need at least 2 samples")));
                }
                samples.iter().all(Coefficients::is_finite)
            }
        };
        if finite {
            Ok(())
        } else {
            Err(Error::NonFinite("pulse coefficients"))
        }
    }
}

/// Lagrange interpolation through up to four neighbouring samples at
/// fractional index `x`.
fn interpolate(samples: &[Coefficients], x: f64) -> Coefficients {
    let n = samples.len() - 1;
    if n < 3 {
        let k = (x.floor() as usize).min(n - 1);
        let u = x - k as f64;
        return samples[k] * (1.0 - u) + samples[k + 1] * u;
    }
    let k = (x.floor() as usize).min(n - 1);
    let j0 = k.saturating_sub(1).min(n - 3);
    let mut out = Coefficients::default();
    for i in 0..4 {
        let mut w = 1.0;
        for j in 0..4 {
            if j != i {
                w *= (x - (j0 + j) as f64) / (i as f64 - j as f64);
            }
        }
        out = out + samples[j0 + i] * w;
    }
    out
}

/// Ordered pulses acting in one sector.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianSchedule {
    sector: Sector,
    pulses: Vec<Pulse>,
}

impl HamiltonianSchedule {
    pub fn new(sector: Sector, pulses: Vec<Pulse>) -> Result<Self> {
        if pulses.is_empty() {
            return Err(Error::InvalidParameter("schedule has no pulses".into()));
        }
        for (k, p) in pulses.iter().enumerate() {
            p.validate(k)?;
        }
        Ok(Self { sector, pulses })
    }

    pub fn gamma(pulses: Vec<Pulse>) -> Result<Self> {
        Self::new(Sector::Gamma, pulses)
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn pulses(&self) -> &[Pulse] {
        &self.pulses
    }

    pub fn duration(&self) -> f64 {
        self.pulses.iter().map(Pulse::duration).sum()
    }

    /// Coefficients at global time `t`; the later pulse wins at a boundary.
    pub fn coeffs_at(&self, t: f64) -> Coefficients {
        let mut start = 0.0;
        for (k, p) in self.pulses.iter().enumerate() {
            let end = start + p.duration();
            if t < end || k + 1 == self.pulses.len() {
                return p.coeffs_at(t - start);
            }
            start = end;
        }
        unreachable!("schedule is non-empty")
    }

    pub fn hamiltonian_at(&self, t: f64) -> Matrix4c {
        SpinOperators::for_sector(self.sector).hamiltonian(&self.coeffs_at(t))
    }

    pub fn pulse_areas(&self) -> Vec<Coefficients> {
        self.pulses.iter().map(Pulse::area).collect()
    }

    /// Concatenation, `self` first.
    pub fn then(&self, other: &HamiltonianSchedule) -> Result<Self> {
        if self.sector != other.sector {
            return Err(Error::InvalidParameter("cannot join schedules from different sectors".into()));
        }
        let mut pulses = self.pulses.clone();
        pulses.extend(other.pulses.iter().cloned());
        Ok(Self { sector: self.sector, pulses })
    }
}

fn exp_step(ops: &SpinOperators, k: &Coefficients, dt: f64) -> Matrix4c {
    herm_exp(&ops.hamiltonian(k), dt).expect("schedule coefficients are validated finite")
}

/// Fourth-order Magnus step over `[t, t + h]` given the coefficients at the
/// two Gauss nodes (earlier node first).
fn magnus4(ops: &SpinOperators, c1: &Coefficients, c2: &Coefficients, h: f64) -> Matrix4c {
    // Ω₄ = -i h (H₁+H₂)/2 - (√3/12) h² [H₂, H₁]; with [s_a, s_b] = 2i ε s_c
    // the commutator folds into an effective field
    let eff = (*c1 + *c2) * 0.5 + c2.cross(c1) * (SQRT3_6 * h);
    exp_step(ops, &eff, h)
}

/// Time-ordered propagator `T exp(-i ∫ H dt)`.
///
/// Constant pulses are exponentiated exactly. Sampled pulses use one
/// fourth-order Magnus step per sample interval with cubic interpolation.
pub fn propagate(schedule: &HamiltonianSchedule) -> Matrix4c {
    walk(schedule, |_, _| {})
}

/// Cumulative propagators `U(t, 0)` at `t = 0`, at every sample of sampled
/// pulses, and at every pulse boundary.
pub fn trajectory(schedule: &HamiltonianSchedule) -> Vec<(f64, Matrix4c)> {
    let mut out = vec![(0.0, Matrix4c::identity())];
    walk(schedule, |t, u| out.push((t, *u)));
    out
}

fn walk<F: FnMut(f64, &Matrix4c)>(schedule: &HamiltonianSchedule, mut visit: F) -> Matrix4c {
    let ops = SpinOperators::for_sector(schedule.sector);
    let mut u = Matrix4c::identity();
    let mut t = 0.0;
    for pulse in &schedule.pulses {
        match pulse {
            Pulse::Constant { duration, coeffs } => {
                u = exp_step(&ops, coeffs, *duration) * u;
                t += duration;
                visit(t, &u);
            }
            Pulse::Sampled { duration, samples } => {
                let n = samples.len() - 1;
                let h = duration / n as f64;
                let t0 = t;
                for k in 0..n {
                    let mid = k as f64 + 0.5;
                    let c1 = interpolate(samples, mid - SQRT3_6);
                    let c2 = interpolate(samples, mid + SQRT3_6);
                    u = magnus4(&ops, &c1, &c2, h) * u;
                    t = if k + 1 == n { t0 + duration } else { t0 + h * (k + 1) as f64 };
                    visit(t, &u);
                }
            }
        }
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{max_abs_diff, unitary_deviation};

    #[test]
    fn rejects_bad_pulses() {
        let ok = Coefficients::new(1.0, 0.0, 0.0);
        assert!(HamiltonianSchedule::gamma(vec![]).is_err());
        assert!(HamiltonianSchedule::gamma(vec![Pulse::Constant { duration: 0.0, coeffs: ok }]).is_err());
        assert!(HamiltonianSchedule::gamma(vec![Pulse::Constant { duration: -1.0, coeffs: ok }]).is_err());
        let nan = Coefficients::new(f64::NAN, 0.0, 0.0);
        assert!(matches!(
            HamiltonianSchedule::gamma(vec![Pulse::Constant { duration: 1.0, coeffs: nan }]),
            Err(Error::NonFinite(_))
        ));
    }

    #[test]
    fn sampled_constant_matches_exact() {
        let k = Coefficients::new(0.4, -0.9, 1.3);
        let exact = propagate(&HamiltonianSchedule::gamma(vec![Pulse::Constant { duration: 2.0, coeffs: k }]).unwrap());
        let sampled = propagate(
            &HamiltonianSchedule::gamma(vec![Pulse::Sampled { duration: 2.0, samples: vec![k; 7] }]).unwrap(),
        );
        assert!(max_abs_diff(&exact, &sampled) < 1e-13);
    }

    #[test]
    fn magnus_converges_at_fourth_order() {
        // rotating field, compared against a very fine reference
        let f = |t: f64| Coefficients::new(t.cos(), t.sin(), 0.3);
        let run = |n: usize| {
            let samples = (0..=n).map(|k| f(2.0 * k as f64 / n as f64)).collect();
            propagate(&HamiltonianSchedule::gamma(vec![Pulse::Sampled { duration: 2.0, samples }]).unwrap())
        };
        let reference = run(4096);
        let e1 = max_abs_diff(&run(32), &reference);
        let e2 = max_abs_diff(&run(64), &reference);
        assert!(unitary_deviation(&reference) < 1e-12);
        assert!(e1 / e2 > 12.0, "ratio {}", e1 / e2);
    }

    #[test]
    fn later_pulse_is_left() {
        let a = Pulse::Constant { duration: 1.0, coeffs: Coefficients::new(0.0, 0.0, 0.7) };
        let b = Pulse::Constant { duration: 0.5, coeffs: Coefficients::new(1.1, 0.0, 0.0) };
        let ua = propagate(&HamiltonianSchedule::gamma(vec![a.clone()]).unwrap());
        let ub = propagate(&HamiltonianSchedule::gamma(vec![b.clone()]).unwrap());
        let uab = propagate(&HamiltonianSchedule::gamma(vec![a, b]).unwrap());
        assert!(max_abs_diff(&uab, &(ub * ua)) < 1e-15);
    }

    #[test]
    fn areas() {
        let k = Coefficients::new(1.0, 2.0, 3.0);
        assert_eq!(Pulse::Constant { duration: 0.5, coeffs: k }.area(), k * 0.5);
        let lin: Vec<_> = (0..=4).map(|i| Coefficients::new(i as f64, 0.0, 0.0)).collect();
        let a = Pulse::Sampled { duration: 1.0, samples: lin }.area();
        assert!((a.xy - 2.0).abs() < 1e-15);
    }
}
