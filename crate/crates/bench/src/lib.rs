//! Fixtures shared by the criterion benches.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use schmidt_gates::{
    schmidt_gate, Coefficients, GeometricGateSpec, Matrix4c, SampledSegment, SchmidtCoordinates, SchmidtPath,
    Segment, SpinOperators,
};

/// A generic Γ-sector Hamiltonian.
pub fn sample_hamiltonian() -> Matrix4c {
    SpinOperators::gamma().hamiltonian(&Coefficients::new(0.7, -1.3, 0.4))
}

/// A Schmidt gate away from every special point.
pub fn sample_gate() -> Matrix4c {
    schmidt_gate(&GeometricGateSpec::gamma(1.1, 0.3, 2.3))
}

/// Latitude loop at `α = π/3` sampled on `intervals + 1` points.
pub fn sampled_loop(intervals: usize) -> SchmidtPath {
    let seg = SampledSegment::from_fn(1.0, intervals, |t| SchmidtCoordinates::new(PI / 3.0, TAU * t));
    SchmidtPath::new(vec![Segment::Sampled(seg)]).expect("closed sampled loop")
}

/// Equator half turn followed by a meridian back through the pole.
pub fn piecewise_loop() -> SchmidtPath {
    SchmidtPath::new(vec![
        Segment::Latitude { alpha: FRAC_PI_2, beta_start: FRAC_PI_2, beta_end: -FRAC_PI_2, duration: 1.0 },
        Segment::Meridian { beta: -FRAC_PI_2, alpha_start: FRAC_PI_2, alpha_end: -FRAC_PI_2, duration: 1.0 },
    ])
    .expect("closed piecewise loop")
}
