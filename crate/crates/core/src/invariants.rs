//! Makhlin local invariants and perfect-entangler classification.
//!
//! Two gates have equal `(G₁, G₂)` exactly when they differ by single-qubit
//! operations before and after. The invariants are read off in the Bell basis
//! produced by [`bell_transform`].

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{c, ensure_unitary, Matrix4c, ONE, ZERO};
use crate::tolerance;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalInvariants {
    pub g1: Complex64,
    pub g2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EntanglerClass {
    NotPe,
    Pe,
    Spe,
}

impl EntanglerClass {
    pub fn as_str(self) -> &'static str {
        match self {
            EntanglerClass::NotPe => "NOT_PE",
            EntanglerClass::Pe => "PE",
            EntanglerClass::Spe => "SPE",
        }
    }

    /// True for both `PE` and `SPE`.
    pub fn is_perfect_entangler(self) -> bool {
        !matches!(self, EntanglerClass::NotPe)
    }
}

impl fmt::Display for EntanglerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `Q = Σ_k |B_k⟩⟨k|` with
/// `B₁ = (|00⟩+|11⟩)/√2`, `B₂ = i(|01⟩+|10⟩)/√2`,
/// `B₃ = (|01⟩-|10⟩)/√2`, `B₄ = i(|00⟩-|11⟩)/√2`.
pub fn bell_transform() -> Matrix4c {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let (p, n, ip, in_) = (c(h, 0.0), c(-h, 0.0), c(0.0, h), c(0.0, -h));
    // columns are B₁..B₄
    Matrix4c::new(
        p, ZERO, ZERO, ip, //
        ZERO, ip, p, ZERO, //
        ZERO, ip, n, ZERO, //
        p, ZERO, ZERO, in_,
    )
}

/// `G₁ = tr²m / (16 det U)`, `G₂ = (tr²m - tr m²) / (4 det U)` with
/// `m = (Q†UQ)ᵀ(Q†UQ)`.
///
/// `det U` is rescaled to unit modulus so small departures from unitarity are
/// not amplified. The imaginary part of `G₂` must be below
/// [`tolerance::G2_IMAGINARY`] and is then dropped.
pub fn makhlin_invariants(u: &Matrix4c) -> Result<LocalInvariants> {
    ensure_unitary(u, tolerance::UNITARY)?;
    let q = bell_transform();
    let ub = q.adjoint() * u * q;
    let m = ub.transpose() * ub;
    let tr = m.trace();
    let tr2 = (m * m).trace();
    let det = u.determinant();
    let det = det / det.norm();
    let g1 = tr * tr / (det * 16.0);
    let g2 = (tr * tr - tr2) / (det * 4.0);
    if g2.im.abs() > tolerance::G2_IMAGINARY {
        return Err(Error::ComplexG2(g2.im));
    }
    Ok(LocalInvariants { g1, g2: g2.re })
}

/// `G₁ = [4 - 2 sin²α₀ (1 - cos Ω)]² / 16`, `G₂ = 3 - 2 sin²α₀ (1 - cos Ω)`
/// for the Schmidt gate with base polar angle `α₀` (any `β₀`).
pub fn closed_form_invariants(alpha0: f64, omega: f64) -> LocalInvariants {
    let k = 2.0 * alpha0.sin().powi(2) * (1.0 - omega.cos());
    LocalInvariants { g1: c((4.0 - k).powi(2) / 16.0, 0.0), g2: 3.0 - k }
}

/// PE iff `|G₁| ≤ 1/4` and `-1 ≤ G₂ ≤ 1`; SPE iff additionally `G₁ = 0`.
/// Every comparison is widened by `tol`.
pub fn classify(inv: &LocalInvariants, tol: f64) -> EntanglerClass {
    let g1 = inv.g1.norm();
    let pe = g1 <= 0.25 + tol && inv.g2 >= -1.0 - tol && inv.g2 <= 1.0 + tol;
    if !pe {
        EntanglerClass::NotPe
    } else if g1 <= tol {
        EntanglerClass::Spe
    } else {
        EntanglerClass::Pe
    }
}

/// Invariants of the identity gate.
pub fn identity_invariants() -> LocalInvariants {
    LocalInvariants { g1: ONE, g2: 3.0 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{basis_state, unitary_deviation};
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};

    fn cnot() -> Matrix4c {
        let mut u = Matrix4c::zeros();
        u[(0, 0)] = ONE;
        u[(1, 1)] = ONE;
        u[(2, 3)] = ONE;
        u[(3, 2)] = ONE;
        u
    }

    #[test]
    fn bell_columns() {
        let q = bell_transform();
        let b1 = (basis_state(0) + basis_state(3)) * c(FRAC_1_SQRT_2, 0.0);
        let b2 = (basis_state(1) + basis_state(2)) * c(0.0, FRAC_1_SQRT_2);
        assert!((q * basis_state(0) - b1).norm() < 1e-16);
        assert!((q * basis_state(1) - b2).norm() < 1e-16);
        assert!(unitary_deviation(&q) < 1e-15);
    }

    #[test]
    fn identity_and_cnot() {
        let id = makhlin_invariants(&Matrix4c::identity()).unwrap();
        assert!((id.g1 - ONE).norm() < 1e-14);
        assert!((id.g2 - 3.0).abs() < 1e-14);
        let cn = makhlin_invariants(&cnot()).unwrap();
        assert!(cn.g1.norm() < 1e-14);
        assert!((cn.g2 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_unitary() {
        let mut u = Matrix4c::identity();
        u[(0, 0)] = c(1.01, 0.0);
        assert!(matches!(makhlin_invariants(&u), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn closed_form_examples() {
        let triv = closed_form_invariants(0.77, 0.0);
        assert_eq!((triv.g1.re, triv.g2), (1.0, 3.0));
        let omega = 1.9_f64;
        let eq = closed_form_invariants(std::f64::consts::FRAC_PI_2, omega);
        assert!((eq.g1.re - (omega / 2.0).cos().powi(4)).abs() < 1e-15);
        assert!((eq.g2 - (1.0 + 2.0 * omega.cos())).abs() < 1e-14);
        let mid = closed_form_invariants(FRAC_PI_4, PI);
        assert!((mid.g1.re - 0.25).abs() < 1e-15);
        assert!((mid.g2 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn classification_examples() {
        let tol = tolerance::CLASSIFY;
        assert_eq!(classify(&LocalInvariants { g1: ZERO, g2: -1.0 }, tol), EntanglerClass::Spe);
        assert_eq!(classify(&identity_invariants(), tol), EntanglerClass::NotPe);
        assert_eq!(classify(&LocalInvariants { g1: c(0.25, 0.0), g2: 1.0 }, tol), EntanglerClass::Pe);
        assert_eq!(classify(&LocalInvariants { g1: c(0.25 + 1e-6, 0.0), g2: 1.0 }, tol), EntanglerClass::NotPe);
        assert_eq!(classify(&LocalInvariants { g1: ZERO, g2: 1.5 }, tol), EntanglerClass::NotPe);
    }

    #[test]
    fn determinant_phase_is_removed() {
        let u = cnot() * Complex64::cis(0.37);
        let a = makhlin_invariants(&u).unwrap();
        let b = makhlin_invariants(&cnot()).unwrap();
        assert!((a.g1 - b.g1).norm() < 1e-14);
        assert!((a.g2 - b.g2).abs() < 1e-14);
    }
}
