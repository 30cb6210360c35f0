//! Hamiltonian schedules that trace paths on the Schmidt sphere.
//!
//! Inside one 2-level sector the Hamiltonian is
//! `H = c_XY h_XY + c_DM h_DM + c_Z h_Z`, an effective spin in the field
//! `B = 2(c_XY, c_DM, c_Z)`. Time ordering puts later pulses on the left.

mod pulses;
mod reverse;
mod schedule;
mod spin;

pub use pulses::{
    composed_trotter_gate, extract_rotation_angle, rotation_form_deviation, tilted_schedule,
    trotter_propagate, trotter_step, trotter_target, two_pulse_schedule, TrotterPlan,
};
pub use reverse::{
    coefficients_from_rates, dynamical_phase, finite_difference, orange_slice_path, reverse_engineer,
    reverse_engineer_in,
};
pub use schedule::{propagate, trajectory, HamiltonianSchedule, Pulse};
pub use spin::{Coefficients, SpinOperators};
