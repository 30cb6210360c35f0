//! Schmidt decomposition of two-qubit pure states and the Schmidt sphere.
//!
//! A state `f|n⟩|m⟩ + g|-n⟩|-m⟩` with `f = e^{-iβ/2} cos(α/2)` and
//! `g = e^{iβ/2} sin(α/2)` sits at `r = (sin α cos β, sin α sin β, cos α)`.
//!
//! Coordinates use an extended chart: `α` may be negative, with
//! `(α, β)` and `(-α, β + π)` naming the same point. Paths through the north
//! pole keep `β` fixed and let `α` change sign instead of jumping `β` by `π`.

use nalgebra::{Matrix2, Vector2, Vector3};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{c, ket0, ket1, kron_state, Matrix2c, Qubit, StateVector4};
use crate::tolerance;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchmidtCoordinates {
    pub alpha: f64,
    pub beta: f64,
}

impl SchmidtCoordinates {
    pub const fn new(alpha: f64, beta: f64) -> Self {
        Self { alpha, beta }
    }

    /// Amplitude of `|n⟩|m⟩`.
    pub fn f(&self) -> Complex64 {
        Complex64::from_polar((0.5 * self.alpha).cos(), -0.5 * self.beta)
    }

    /// Amplitude of `|-n⟩|-m⟩`.
    pub fn g(&self) -> Complex64 {
        Complex64::from_polar((0.5 * self.alpha).sin(), 0.5 * self.beta)
    }

    pub fn point(&self) -> Vector3<f64> {
        sphere_point(*self)
    }

    /// The same point with `α` folded into `[0, π]`.
    pub fn folded(&self) -> Self {
        if self.alpha < 0.0 {
            Self::new(-self.alpha, self.beta + std::f64::consts::PI)
        } else {
            *self
        }
    }

    /// Great-circle distance between the two sphere points.
    pub fn distance(&self, other: &Self) -> f64 {
        let (a, b) = (self.point(), other.point());
        a.cross(&b).norm().atan2(a.dot(&b))
    }
}

pub fn sphere_point(coords: SchmidtCoordinates) -> Vector3<f64> {
    let (sa, ca) = coords.alpha.sin_cos();
    let (sb, cb) = coords.beta.sin_cos();
    Vector3::new(sa * cb, sa * sb, ca)
}

/// Local Schmidt frame `(|n⟩, |m⟩)`.
///
/// The partner states are fixed by requiring `A = [|n⟩, |-n⟩]` and
/// `B = [|-m⟩, |m⟩]` (as columns) to lie in SU(2). The standard frame
/// `(|0⟩, |1⟩)` then gives `A = B = 1`, `|-n⟩ = |1⟩` and `|-m⟩ = |0⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub n: Qubit,
    pub m: Qubit,
}

impl Default for Frame {
    fn default() -> Self {
        Self::standard()
    }
}

impl Frame {
    pub fn standard() -> Self {
        Self { n: ket0(), m: ket1() }
    }

    pub fn new(n: Qubit, m: Qubit) -> Result<Self> {
        for (v, name) in [(&n, "frame n"), (&m, "frame m")] {
            if !v.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::NonFinite(name));
            }
            let norm = v.norm();
            if (norm - 1.0).abs() > tolerance::ALGEBRAIC {
                return Err(Error::NotNormalized { norm });
            }
        }
        Ok(Self { n, m })
    }

    pub fn neg_n(&self) -> Qubit {
        Vector2::new(-self.n[1].conj(), self.n[0].conj())
    }

    pub fn neg_m(&self) -> Qubit {
        Vector2::new(self.m[1].conj(), -self.m[0].conj())
    }

    /// Local unitaries `(A, B)` taking the standard frame to this one.
    pub fn local_unitaries(&self) -> (Matrix2c, Matrix2c) {
        let neg_n = self.neg_n();
        let neg_m = self.neg_m();
        let a = Matrix2::new(self.n[0], neg_n[0], self.n[1], neg_n[1]);
        let b = Matrix2::new(neg_m[0], self.m[0], neg_m[1], self.m[1]);
        (a, b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    GammaPlus,
    GammaMinus,
    LambdaPlus,
    LambdaMinus,
}

/// One member of the orthonormal quadruple `Γ₊(r), Γ₋(r), Λ₊, Λ₋`.
pub fn assemble_state(coords: SchmidtCoordinates, frame: &Frame, branch: Branch) -> StateVector4 {
    let (n, m, neg_n, neg_m) = (frame.n, frame.m, frame.neg_n(), frame.neg_m());
    let (f, g) = (coords.f(), coords.g());
    match branch {
        Branch::GammaPlus => kron_state(&n, &m) * f + kron_state(&neg_n, &neg_m) * g,
        Branch::GammaMinus => kron_state(&n, &m) * (-g.conj()) + kron_state(&neg_n, &neg_m) * f.conj(),
        Branch::LambdaPlus => kron_state(&n, &neg_m),
        Branch::LambdaMinus => kron_state(&neg_n, &m),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchmidtDecomposition {
    pub coords: SchmidtCoordinates,
    pub f: Complex64,
    pub g: Complex64,
    pub n_state: Qubit,
    pub m_state: Qubit,
    /// Set when the two Schmidt coefficients coincide and the local frame
    /// is not unique.
    pub degenerate: bool,
}

impl SchmidtDecomposition {
    pub fn frame(&self) -> Frame {
        Frame { n: self.n_state, m: self.m_state }
    }

    /// `f|n⟩|m⟩ + g|-n⟩|-m⟩`.
    pub fn assemble(&self) -> StateVector4 {
        assemble_state(self.coords, &self.frame(), Branch::GammaPlus)
    }
}

pub fn ensure_normalized(state: &StateVector4) -> Result<()> {
    if !state.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite("state"));
    }
    let norm = state.norm();
    if (norm - 1.0).abs() > tolerance::NORMALIZED {
        return Err(Error::NotNormalized { norm });
    }
    Ok(())
}

/// Rotates the phase of a single-qubit state so its first non-negligible
/// component is real and positive.
fn fix_gauge(v: Qubit) -> Qubit {
    let pivot = if v[0].norm() > 1e-14 { v[0] } else { v[1] };
    v * Complex64::from_polar(1.0, -pivot.arg())
}

/// Dominant eigenvector of the 2×2 Hermitian matrix `[[p, q], [q*, r]]`.
fn top_eigenvector(p: f64, q: Complex64, r: f64) -> Qubit {
    let d = 0.5 * (p - r);
    let w = d.hypot(q.norm());
    if q.norm() == 0.0 || w == 0.0 {
        return if p >= r { ket0() } else { ket1() };
    }
    let v = if d >= 0.0 {
        Vector2::new(c(d + w, 0.0), q.conj())
    } else {
        Vector2::new(q, c(w - d, 0.0))
    };
    v / c(v.norm(), 0.0)
}

/// Writes a normalized two-qubit state as `f|n⟩|m⟩ + g|-n⟩|-m⟩` with
/// `|f| ≥ |g|`, so `α ∈ [0, π/2]`.
///
/// Gauge: `|n⟩` and `|m⟩` have their first non-negligible component real and
/// positive, the remaining phase is split symmetrically into `f` and `g`, and
/// the global phase is dropped. For product states `β` is set to 0.
pub fn schmidt_decompose(state: &StateVector4) -> Result<SchmidtDecomposition> {
    ensure_normalized(state)?;
    // coefficient matrix C[x][y] = ⟨xy|ψ⟩
    let cm = Matrix2::new(state[0], state[1], state[2], state[3]);
    let cc = cm * cm.adjoint();
    let u0 = top_eigenvector(cc[(0, 0)].re, cc[(0, 1)], cc[(1, 1)].re);
    let n_state = fix_gauge(u0);
    // ⟨n|_a ψ, the b-qubit partner of |n⟩
    let partner = Vector2::new(
        n_state[0].conj() * cm[(0, 0)] + n_state[1].conj() * cm[(1, 0)],
        n_state[0].conj() * cm[(0, 1)] + n_state[1].conj() * cm[(1, 1)],
    );
    let m_state = fix_gauge(partner / c(partner.norm(), 0.0));
    let frame = Frame { n: n_state, m: m_state };

    let f_raw = kron_state(&frame.n, &frame.m).dotc(state);
    let g_raw = kron_state(&frame.neg_n(), &frame.neg_m()).dotc(state);
    let (fa, ga) = (f_raw.norm(), g_raw.norm());
    let alpha = 2.0 * ga.atan2(fa);
    let beta = if ga <= 1e-14 * fa {
        0.0
    } else {
        wrap_angle(g_raw.arg() - f_raw.arg())
    };
    let coords = SchmidtCoordinates::new(alpha, beta);
    let degenerate = (fa - ga).abs() < tolerance::DEGENERATE_SCHMIDT;
    Ok(SchmidtDecomposition {
        coords,
        f: coords.f(),
        g: coords.g(),
        n_state,
        m_state,
        degenerate,
    })
}

/// Maps an angle into `(-π, π]`.
pub fn wrap_angle(x: f64) -> f64 {
    use std::f64::consts::{PI, TAU};
    let y = x.rem_euclid(TAU);
    if y > PI {
        y - TAU
    } else {
        y
    }
}

/// Pure-state concurrence `2|c₀₀c₁₁ - c₀₁c₁₀|`.
pub fn concurrence(state: &StateVector4) -> f64 {
    (2.0 * (state[0] * state[3] - state[1] * state[2]).norm()).min(1.0)
}

/// The single-qubit state with Bloch vector `(sin θ cos φ, sin θ sin φ, cos θ)`.
pub fn bloch_state(theta: f64, phi: f64) -> Qubit {
    Vector2::new(
        c((0.5 * theta).cos(), 0.0),
        Complex64::from_polar((0.5 * theta).sin(), phi),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{basis_state, state_fidelity, I, ONE};
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

    #[test]
    fn sphere_point_cases() {
        assert!((sphere_point(SchmidtCoordinates::new(0.0, 1.234)) - Vector3::z()).norm() < 1e-15);
        let p = sphere_point(SchmidtCoordinates::new(FRAC_PI_2, FRAC_PI_2));
        assert!((p - Vector3::y()).norm() < 1e-15);
        let q = sphere_point(SchmidtCoordinates::new(-FRAC_PI_2, -FRAC_PI_2));
        assert!((q - Vector3::y()).norm() < 1e-15);
    }

    #[test]
    fn product_state_decomposition() {
        let d = schmidt_decompose(&basis_state(1)).unwrap();
        assert_eq!(d.coords.alpha, 0.0);
        assert_eq!(d.coords.beta, 0.0);
        assert!((d.f - ONE).norm() < 1e-15);
        assert!(d.g.norm() < 1e-15);
        assert_eq!(d.n_state, ket0());
        assert_eq!(d.m_state, ket1());
        assert!(!d.degenerate);
    }

    #[test]
    fn maximally_entangled_decomposition() {
        let psi = (basis_state(1) + basis_state(2) * I) * c(FRAC_1_SQRT_2, 0.0);
        let d = schmidt_decompose(&psi).unwrap();
        assert!((d.coords.alpha - FRAC_PI_2).abs() < 1e-12);
        assert!((d.coords.beta - FRAC_PI_2).abs() < 1e-12);
        assert!(d.degenerate);
        assert!(state_fidelity(&d.assemble(), &psi) > 1.0 - 1e-12);
    }

    #[test]
    fn rejects_unnormalized() {
        let psi = basis_state(0) * c(1.1, 0.0);
        assert!(matches!(schmidt_decompose(&psi), Err(Error::NotNormalized { .. })));
    }

    #[test]
    fn assemble_examples() {
        let frame = Frame::standard();
        let gp = assemble_state(SchmidtCoordinates::new(0.0, 0.3), &frame, Branch::GammaPlus);
        assert!(state_fidelity(&gp, &basis_state(1)) > 1.0 - 1e-15);
        let lp = assemble_state(SchmidtCoordinates::new(0.4, 0.3), &frame, Branch::LambdaPlus);
        assert_eq!(lp, basis_state(0));
        // Γ₋ at (π/2, π/2) is |Ψ₋⟩ = (|01⟩ - i|10⟩)/√2 up to phase
        let gm = assemble_state(SchmidtCoordinates::new(FRAC_PI_2, FRAC_PI_2), &frame, Branch::GammaMinus);
        let psi_minus = (basis_state(1) - basis_state(2) * I) * c(FRAC_1_SQRT_2, 0.0);
        assert!(state_fidelity(&gm, &psi_minus) > 1.0 - 1e-15);
    }

    #[test]
    fn quadruple_is_orthonormal_in_any_frame() {
        let frame = Frame::new(bloch_state(0.7, 1.9), bloch_state(2.1, -0.4)).unwrap();
        let coords = SchmidtCoordinates::new(1.1, -2.3);
        let states: Vec<_> = [Branch::GammaPlus, Branch::GammaMinus, Branch::LambdaPlus, Branch::LambdaMinus]
            .iter()
            .map(|&b| assemble_state(coords, &frame, b))
            .collect();
        for (i, a) in states.iter().enumerate() {
            for (j, b) in states.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((a.dotc(b).norm() - expected).abs() < 1e-13, "{i} {j}");
            }
        }
    }

    #[test]
    fn concurrence_examples() {
        assert_eq!(concurrence(&basis_state(0)), 0.0);
        let psi_plus = (basis_state(1) + basis_state(2) * I) * c(FRAC_1_SQRT_2, 0.0);
        assert!((concurrence(&psi_plus) - 1.0).abs() < 1e-15);
        let gp = assemble_state(SchmidtCoordinates::new(FRAC_PI_3, 0.2), &Frame::standard(), Branch::GammaPlus);
        assert!((concurrence(&gp) - 3f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn concurrence_tracks_alpha_on_grid() {
        for k in 0..100 {
            let alpha = -PI + 2.0 * PI * k as f64 / 99.0;
            let gp = assemble_state(SchmidtCoordinates::new(alpha, 0.7), &Frame::standard(), Branch::GammaPlus);
            assert!((concurrence(&gp) - alpha.sin().abs()).abs() < 1e-12);
        }
    }

    #[test]
    fn frame_unitaries_are_special_unitary() {
        let frame = Frame::new(bloch_state(0.3, 0.5), bloch_state(1.3, 2.5)).unwrap();
        let (a, b) = frame.local_unitaries();
        for u in [a, b] {
            assert!((u.adjoint() * u - Matrix2c::identity()).norm() < 1e-15);
            assert!((u.determinant() - ONE).norm() < 1e-15);
        }
        let (a, b) = Frame::standard().local_unitaries();
        assert_eq!(a, Matrix2c::identity());
        assert_eq!(b, Matrix2c::identity());
    }

    #[test]
    fn identification_of_extended_coordinates() {
        let a = SchmidtCoordinates::new(-0.8, FRAC_PI_4);
        let b = a.folded();
        assert!((a.point() - b.point()).norm() < 1e-15);
        assert!(b.alpha > 0.0);
    }

    #[test]
    fn wrap_angle_range() {
        assert!((wrap_angle(3.0 * PI) - PI).abs() < 1e-15);
        assert!((wrap_angle(-PI) - PI).abs() < 1e-15);
        assert!((wrap_angle(0.5) - 0.5).abs() < 1e-15);
    }
}
