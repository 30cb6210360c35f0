//! Geometric two-qubit "Schmidt gates".
//!
//! A two-qubit pure state in Schmidt form is located by a point on the
//! Schmidt sphere. Loops on that sphere, traversed while the local Schmidt
//! frames stay fixed, produce gates whose action depends only on the enclosed
//! solid angle. This crate builds those gates, reverse engineers the
//! spin-exchange Hamiltonians that trace a given loop, propagates pulse
//! schedules exactly, and classifies entangling power through Makhlin's local
//! invariants.
//!
//! All two-qubit objects use the computational basis order
//! `|00⟩, |01⟩, |10⟩, |11⟩`, with the first (a) qubit as the major index.

pub mod dynamics;
pub mod error;
pub mod gates;
pub mod geometry;
pub mod invariants;
pub mod linalg;
pub mod path;
pub mod quadrature;
pub mod tolerance;

pub use dynamics::{
    composed_trotter_gate, dynamical_phase, extract_rotation_angle, orange_slice_path, propagate,
    reverse_engineer, reverse_engineer_in, tilted_schedule, trotter_propagate, trotter_target,
    two_pulse_schedule, Coefficients, HamiltonianSchedule, Pulse, SpinOperators, TrotterPlan,
};
pub use error::{Error, Result};
pub use gates::{lambda_gate, schmidt_gate, u_general, GeometricGateSpec, Sector};
pub use geometry::{
    assemble_state, concurrence, schmidt_decompose, sphere_point, Branch, Frame,
    SchmidtCoordinates, SchmidtDecomposition,
};
pub use invariants::{
    bell_transform, classify, closed_form_invariants, makhlin_invariants, EntanglerClass,
    LocalInvariants,
};
pub use linalg::{
    gate_distance, gate_fidelity, herm_exp, tensor_product, Matrix2c, Matrix4c, Qubit, StateVector4,
};
pub use path::{solid_angle, RotationArc, SampledSegment, SchmidtPath, Segment};
