//! Named tolerances shared by the library and its tests.

/// Algebraic identities evaluated in a handful of flops.
pub const ALGEBRAIC: f64 = 1e-12;

/// Results of composed pipelines (several products and exponentials).
pub const PIPELINE: f64 = 1e-10;

/// Hermiticity check on Hamiltonian inputs.
pub const HERMITIAN: f64 = 1e-12;

/// Unitarity precondition on gate inputs.
pub const UNITARY: f64 = 1e-10;

/// Normalization precondition on state inputs.
pub const NORMALIZED: f64 = 1e-12;

/// Path continuity and closure, in radians on the sphere.
pub const PATH_CLOSURE: f64 = 1e-9;

/// Two singular values closer than this are reported as degenerate.
pub const DEGENERATE_SCHMIDT: f64 = 1e-9;

/// Default classification tolerance for the perfect-entangler predicates.
pub const CLASSIFY: f64 = 1e-9;

/// Largest allowed imaginary residue of G2 before it is discarded.
pub const G2_IMAGINARY: f64 = 1e-10;
