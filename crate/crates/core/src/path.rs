//! Paths on the Schmidt sphere and the solid angle they enclose.
//!
//! A path is a sequence of segments in the extended `(α, β)` chart. Adjacent
//! segments must agree on their shared coordinates (not merely on the sphere
//! point), since the chart fixes the phase convention of `Γ₊`.
//!
//! The chart covers everything except the south pole; segments may cross the
//! north pole (`α` changing sign at fixed `β`) but must keep `|α| < π`.

use std::f64::consts::{PI, TAU};

use nalgebra::{Rotation3, Unit, Vector3};

use crate::error::{Error, Result};
use crate::geometry::SchmidtCoordinates;
use crate::quadrature::integrate;
use crate::tolerance;

/// Default number of intervals used when a segment is sampled from a function.
pub const DEFAULT_SAMPLES: usize = 1000;

/// Closest approach to either pole allowed for a rotation arc, in radians.
pub const ARC_POLE_CLEARANCE: f64 = 1e-3;

const QUAD_TOL: f64 = 1e-14;

/// A uniformly time-sampled stretch of `(α(t), β(t))`, endpoints included.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSegment {
    pub duration: f64,
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
}

impl SampledSegment {
    pub fn new(duration: f64, alpha: Vec<f64>, beta: Vec<f64>) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(Error::InvalidParameter(format!(
                "sampled segment has {} alpha and {} beta values",
                alpha.len(),
                beta.len()
            )));
        }
        if alpha.len() < 2 {
            return Err(Error::InvalidParameter("sampled segment needs at least two samples".into()));
        }
        Ok(Self { duration, alpha, beta })
    }

    /// Samples `f` on `intervals + 1` equally spaced times in `[0, duration]`.
    pub fn from_fn<F: Fn(f64) -> SchmidtCoordinates>(duration: f64, intervals: usize, f: F) -> Self {
        let intervals = intervals.max(1);
        let (alpha, beta) = (0..=intervals)
            .map(|k| {
                let p = f(duration * k as f64 / intervals as f64);
                (p.alpha, p.beta)
            })
            .unzip();
        Self { duration, alpha, beta }
    }

    pub fn intervals(&self) -> usize {
        self.alpha.len() - 1
    }

    pub fn step(&self) -> f64 {
        self.duration / self.intervals() as f64
    }

    pub fn coords(&self, k: usize) -> SchmidtCoordinates {
        SchmidtCoordinates::new(self.alpha[k], self.beta[k])
    }

    /// Trapezoid rule for `∫ w(α) dβ`.
    fn trapezoid<W: Fn(f64) -> f64>(&self, weight: W) -> f64 {
        self.alpha
            .windows(2)
            .zip(self.beta.windows(2))
            .map(|(a, b)| 0.5 * (weight(a[0]) + weight(a[1])) * (b[1] - b[0]))
            .sum()
    }

    /// Index of the first step that looks like a coordinate jump rather than
    /// smooth motion.
    fn find_jump(&self) -> Option<usize> {
        [&self.alpha, &self.beta].into_iter().find_map(|series| {
            let steps: Vec<f64> = series.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
            let mut sorted = steps.clone();
            sorted.sort_by(f64::total_cmp);
            let limit = (10.0 * sorted[sorted.len() / 2]).max(0.25);
            steps.iter().position(|&s| s > limit)
        })
    }
}

/// Rigid rotation of the sphere point about a fixed axis at constant rate.
///
/// With the axis orthogonal to the start point this traces a great-circle
/// arc. The arc must stay [`ARC_POLE_CLEARANCE`] away from both poles; use
/// meridian segments to pass through a pole.
#[derive(Debug, Clone, PartialEq)]
pub struct RotationArc {
    pub start: SchmidtCoordinates,
    pub axis: Unit<Vector3<f64>>,
    /// Signed rotation angle (right-handed about `axis`).
    pub angle: f64,
    pub duration: f64,
}

impl RotationArc {
    pub fn new(start: SchmidtCoordinates, axis: Vector3<f64>, angle: f64, duration: f64) -> Result<Self> {
        if !axis.iter().all(|x| x.is_finite()) || axis.norm() == 0.0 {
            return Err(Error::InvalidParameter("rotation axis must be a finite nonzero vector".into()));
        }
        Ok(Self { start, axis: Unit::new_normalize(axis), angle, duration })
    }

    /// Great-circle arc from `start` through the point `towards`, sweeping
    /// `angle` radians.
    pub fn great_circle(
        start: SchmidtCoordinates,
        towards: Vector3<f64>,
        angle: f64,
        duration: f64,
    ) -> Result<Self> {
        Self::new(start, start.point().cross(&towards), angle, duration)
    }

    /// Effective field `B` with `ṙ = B × r`.
    pub fn field(&self) -> Vector3<f64> {
        self.axis.into_inner() * (self.angle / self.duration)
    }

    fn point_at_phase(&self, phi: f64) -> Vector3<f64> {
        Rotation3::from_axis_angle(&self.axis, phi) * self.start.point()
    }

    /// `(x dy/dφ - y dx/dφ, x² + y², z)` at rotation phase `phi`.
    fn azimuth_terms(&self, phi: f64) -> (f64, f64, f64) {
        let r = self.point_at_phase(phi);
        let dr = self.axis.cross(&r);
        (r.x * dr.y - r.y * dr.x, r.x * r.x + r.y * r.y, r.z)
    }

    /// Continuous change of the azimuth between two rotation phases.
    fn azimuth_change(&self, phi_a: f64, phi_b: f64) -> f64 {
        let estimate = integrate(
            |phi| {
                let (num, rho2, _) = self.azimuth_terms(phi);
                num / rho2
            },
            phi_a,
            phi_b,
            QUAD_TOL,
        );
        let (ra, rb) = (self.point_at_phase(phi_a), self.point_at_phase(phi_b));
        let raw = rb.y.atan2(rb.x) - ra.y.atan2(ra.x);
        raw + TAU * ((estimate - raw) / TAU).round()
    }

    fn sign(&self) -> f64 {
        if self.start.alpha < 0.0 {
            -1.0
        } else {
            1.0
        }
    }

    /// Extended-chart coordinates at rotation phase `phi`, given the azimuth
    /// change accumulated since the start.
    fn coords_from(&self, phi: f64, dbeta: f64) -> SchmidtCoordinates {
        let r = self.point_at_phase(phi);
        let alpha_std = r.z.clamp(-1.0, 1.0).acos();
        SchmidtCoordinates::new(self.sign() * alpha_std, self.start.beta + dbeta)
    }

    /// Coordinates together with `(α̇, β̇)` at `intervals + 1` equally spaced
    /// times.
    pub fn track(&self, intervals: usize) -> Vec<(SchmidtCoordinates, f64, f64)> {
        let intervals = intervals.max(1);
        let omega = self.angle / self.duration;
        let mut dbeta = 0.0;
        let mut prev_phi = 0.0;
        (0..=intervals)
            .map(|k| {
                let phi = self.angle * k as f64 / intervals as f64;
                dbeta += self.azimuth_change(prev_phi, phi);
                prev_phi = phi;
                let r = self.point_at_phase(phi);
                let rdot = self.axis.cross(&r) * omega;
                let rho2 = r.x * r.x + r.y * r.y;
                let beta_dot = (r.x * rdot.y - r.y * rdot.x) / rho2;
                let alpha_dot = -self.sign() * rdot.z / rho2.sqrt();
                (self.coords_from(phi, dbeta), alpha_dot, beta_dot)
            })
            .collect()
    }

    fn end(&self) -> SchmidtCoordinates {
        self.coords_from(self.angle, self.azimuth_change(0.0, self.angle))
    }

    fn min_pole_distance(&self) -> f64 {
        // the z-coordinate along the circle is c + a cos φ + b sin φ
        let r0 = self.start.point();
        let k = self.axis.into_inner();
        let center = k * k.dot(&r0);
        let u = r0 - center;
        let v = k.cross(&r0);
        let (cz, a, b) = (center.z, u.z, v.z);
        let mut candidates = vec![0.0, self.angle];
        let phase = b.atan2(a);
        for m in -4..=4 {
            for base in [phase, phase + PI] {
                let phi = base + TAU * m as f64;
                if (phi >= 0.0_f64.min(self.angle)) && (phi <= 0.0_f64.max(self.angle)) {
                    candidates.push(phi);
                }
            }
        }
        candidates
            .into_iter()
            .map(|phi| {
                let z = (cz + a * phi.cos() + b * phi.sin()).clamp(-1.0, 1.0);
                z.acos().min(PI - z.acos())
            })
            .fold(f64::INFINITY, f64::min)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Segment {
    /// Constant `α`, `β` linear in time. The equator is `α = π/2`.
    Latitude { alpha: f64, beta_start: f64, beta_end: f64, duration: f64 },
    /// Constant `β`, `α` linear in time; crosses the north pole when `α`
    /// changes sign.
    Meridian { beta: f64, alpha_start: f64, alpha_end: f64, duration: f64 },
    Arc(RotationArc),
    Sampled(SampledSegment),
}

impl Segment {
    pub fn duration(&self) -> f64 {
        match self {
            Segment::Latitude { duration, .. } | Segment::Meridian { duration, .. } => *duration,
            Segment::Arc(arc) => arc.duration,
            Segment::Sampled(s) => s.duration,
        }
    }

    pub fn start(&self) -> SchmidtCoordinates {
        match self {
            Segment::Latitude { alpha, beta_start, .. } => SchmidtCoordinates::new(*alpha, *beta_start),
            Segment::Meridian { beta, alpha_start, .. } => SchmidtCoordinates::new(*alpha_start, *beta),
            Segment::Arc(arc) => arc.start,
            Segment::Sampled(s) => s.coords(0),
        }
    }

    pub fn end(&self) -> SchmidtCoordinates {
        match self {
            Segment::Latitude { alpha, beta_end, .. } => SchmidtCoordinates::new(*alpha, *beta_end),
            Segment::Meridian { beta, alpha_end, .. } => SchmidtCoordinates::new(*alpha_end, *beta),
            Segment::Arc(arc) => arc.end(),
            Segment::Sampled(s) => s.coords(s.intervals()),
        }
    }

    /// Coordinates at local time `t ∈ [0, duration]`. Sampled segments are
    /// interpolated linearly between samples.
    pub fn coords_at(&self, t: f64) -> SchmidtCoordinates {
        let s = (t / self.duration()).clamp(0.0, 1.0);
        match self {
            Segment::Latitude { alpha, beta_start, beta_end, .. } => {
                SchmidtCoordinates::new(*alpha, beta_start + s * (beta_end - beta_start))
            }
            Segment::Meridian { beta, alpha_start, alpha_end, .. } => {
                SchmidtCoordinates::new(alpha_start + s * (alpha_end - alpha_start), *beta)
            }
            Segment::Arc(arc) => {
                let phi = s * arc.angle;
                arc.coords_from(phi, arc.azimuth_change(0.0, phi))
            }
            Segment::Sampled(seg) => {
                let x = s * seg.intervals() as f64;
                let k = (x.floor() as usize).min(seg.intervals() - 1);
                let w = x - k as f64;
                SchmidtCoordinates::new(
                    (1.0 - w) * seg.alpha[k] + w * seg.alpha[k + 1],
                    (1.0 - w) * seg.beta[k] + w * seg.beta[k + 1],
                )
            }
        }
    }

    /// `∫ (1 - cos α) dβ` along the segment.
    pub fn solid_angle(&self) -> f64 {
        match self {
            Segment::Latitude { alpha, beta_start, beta_end, .. } => (1.0 - alpha.cos()) * (beta_end - beta_start),
            Segment::Meridian { .. } => 0.0,
            Segment::Arc(arc) => integrate(
                |phi| {
                    let (num, _, z) = arc.azimuth_terms(phi);
                    num / (1.0 + z)
                },
                0.0,
                arc.angle,
                QUAD_TOL,
            ),
            Segment::Sampled(s) => s.trapezoid(|a| 1.0 - a.cos()),
        }
    }

    /// `∫ cos α dβ` along the segment.
    pub fn cos_alpha_dbeta(&self) -> f64 {
        match self {
            Segment::Latitude { alpha, beta_start, beta_end, .. } => alpha.cos() * (beta_end - beta_start),
            Segment::Meridian { .. } => 0.0,
            Segment::Arc(arc) => integrate(
                |phi| {
                    let (num, rho2, z) = arc.azimuth_terms(phi);
                    z * num / rho2
                },
                0.0,
                arc.angle,
                QUAD_TOL,
            ),
            Segment::Sampled(s) => s.trapezoid(f64::cos),
        }
    }

    /// The same segment traversed backwards.
    pub fn reversed(&self) -> Segment {
        match self {
            Segment::Latitude { alpha, beta_start, beta_end, duration } => Segment::Latitude {
                alpha: *alpha,
                beta_start: *beta_end,
                beta_end: *beta_start,
                duration: *duration,
            },
            Segment::Meridian { beta, alpha_start, alpha_end, duration } => Segment::Meridian {
                beta: *beta,
                alpha_start: *alpha_end,
                alpha_end: *alpha_start,
                duration: *duration,
            },
            Segment::Arc(arc) => Segment::Arc(RotationArc {
                start: arc.end(),
                axis: -arc.axis,
                angle: arc.angle,
                duration: arc.duration,
            }),
            Segment::Sampled(s) => Segment::Sampled(SampledSegment {
                duration: s.duration,
                alpha: s.alpha.iter().rev().copied().collect(),
                beta: s.beta.iter().rev().copied().collect(),
            }),
        }
    }

    fn validate(&self, index: usize) -> Result<()> {
        let d = self.duration();
        if !(d.is_finite() && d > 0.0) {
            return Err(Error::InvalidParameter(format!("segment {index} has non-positive duration {d}")));
        }
        let finite = |xs: &[f64]| xs.iter().all(|x| x.is_finite());
        let below_pole = |a: f64| a.abs() < PI;
        match self {
            Segment::Latitude { alpha, beta_start, beta_end, .. } => {
                if !finite(&[*alpha, *beta_start, *beta_end]) {
                    return Err(Error::NonFinite("latitude segment"));
                }
                if !below_pole(*alpha) {
                    return Err(Error::SouthPole { segment: index });
                }
            }
            Segment::Meridian { beta, alpha_start, alpha_end, .. } => {
                if !finite(&[*beta, *alpha_start, *alpha_end]) {
                    return Err(Error::NonFinite("meridian segment"));
                }
                if !below_pole(*alpha_start) || !below_pole(*alpha_end) {
                    return Err(Error::SouthPole { segment: index });
                }
            }
            Segment::Arc(arc) => {
                if !finite(&[arc.start.alpha, arc.start.beta, arc.angle]) {
                    return Err(Error::NonFinite("rotation arc"));
                }
                if !below_pole(arc.start.alpha) {
                    return Err(Error::SouthPole { segment: index });
                }
                if arc.min_pole_distance() < ARC_POLE_CLEARANCE {
                    return Err(Error::InvalidParameter(format!(
                        "rotation arc in segment {index} passes within {ARC_POLE_CLEARANCE} rad of a pole; \
                         split it and use a meridian segment through the pole"
                    )));
                }
            }
            Segment::Sampled(s) => {
                if !finite(&s.alpha) || !finite(&s.beta) {
                    return Err(Error::NonFinite("sampled segment"));
                }
                if !s.alpha.iter().all(|&a| below_pole(a)) {
                    return Err(Error::SouthPole { segment: index });
                }
                if let Some(k) = s.find_jump() {
                    return Err(Error::Discontinuous {
                        segment: index,
                        detail: format!("coordinate jump between samples {k} and {}", k + 1),
                    });
                }
            }
        }
        Ok(())
    }
}

/// An ordered, chart-continuous sequence of segments.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtPath {
    segments: Vec<Segment>,
}

impl SchmidtPath {
    pub fn new(segments: Vec<Segment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::InvalidParameter("path has no segments".into()));
        }
        for (k, seg) in segments.iter().enumerate() {
            seg.validate(k)?;
        }
        for (k, pair) in segments.windows(2).enumerate() {
            let (end, start) = (pair[0].end(), pair[1].start());
            let gap = (end.alpha - start.alpha).abs().max((end.beta - start.beta).abs());
            if gap > tolerance::PATH_CLOSURE {
                return Err(Error::Discontinuous {
                    segment: k + 1,
                    detail: format!(
                        "starts at (alpha, beta) = ({}, {}) but the previous segment ends at ({}, {})",
                        start.alpha, start.beta, end.alpha, end.beta
                    ),
                });
            }
        }
        Ok(Self { segments })
    }

    /// A zero-length loop sitting at `point` for `duration`.
    pub fn stationary(point: SchmidtCoordinates, duration: f64) -> Result<Self> {
        Self::new(vec![Segment::Meridian {
            beta: point.beta,
            alpha_start: point.alpha,
            alpha_end: point.alpha,
            duration,
        }])
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn duration(&self) -> f64 {
        self.segments.iter().map(Segment::duration).sum()
    }

    pub fn start(&self) -> SchmidtCoordinates {
        self.segments[0].start()
    }

    pub fn end(&self) -> SchmidtCoordinates {
        self.segments[self.segments.len() - 1].end()
    }

    /// Sphere distance between the end point and the start point.
    pub fn closure_gap(&self) -> f64 {
        self.start().distance(&self.end())
    }

    pub fn is_closed(&self) -> bool {
        self.closure_gap() <= tolerance::PATH_CLOSURE
    }

    /// Coordinates at global time `t`.
    pub fn coords_at(&self, t: f64) -> SchmidtCoordinates {
        let mut t0 = 0.0;
        for seg in &self.segments {
            let d = seg.duration();
            if t <= t0 + d {
                return seg.coords_at(t - t0);
            }
            t0 += d;
        }
        self.end()
    }

    pub fn reversed(&self) -> SchmidtPath {
        SchmidtPath { segments: self.segments.iter().rev().map(Segment::reversed).collect() }
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn concat(&self, other: &SchmidtPath) -> Result<SchmidtPath> {
        let mut segments = self.segments.clone();
        segments.extend(other.segments.iter().cloned());
        SchmidtPath::new(segments)
    }
}

/// Signed solid angle `Ω = ∮ (1 - cos α) dβ` of a closed path.
///
/// The orientation follows the traversal: a loop with `β` decreasing along
/// the equator gives a negative solid angle.
pub fn solid_angle(path: &SchmidtPath) -> Result<f64> {
    if !path.is_closed() {
        return Err(Error::OpenPath { distance: path.closure_gap() });
    }
    Ok(path.segments.iter().map(Segment::solid_angle).sum())
}
