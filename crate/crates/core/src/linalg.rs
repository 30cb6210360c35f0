//! Fixed-size complex linear algebra for one and two qubits.
//!
//! Two-qubit operators act on the basis `|00⟩, |01⟩, |10⟩, |11⟩`; index
//! `2a + b` holds `|a⟩ ⊗ |b⟩`.

use nalgebra::{Matrix2, Matrix4, SymmetricEigen, Vector2, Vector4};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tolerance;

pub type Matrix2c = Matrix2<Complex64>;
pub type Matrix4c = Matrix4<Complex64>;
pub type StateVector4 = Vector4<Complex64>;
pub type Qubit = Vector2<Complex64>;

/// Index pairs of the two invariant 2-level blocks: `{|01⟩,|10⟩}` and `{|00⟩,|11⟩}`.
pub const GAMMA_PAIR: (usize, usize) = (1, 2);
pub const LAMBDA_PAIR: (usize, usize) = (0, 3);

#[inline]
pub const fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub const ZERO: Complex64 = c(0.0, 0.0);
pub const ONE: Complex64 = c(1.0, 0.0);
pub const I: Complex64 = c(0.0, 1.0);

pub fn pauli_x() -> Matrix2c {
    Matrix2::new(ZERO, ONE, ONE, ZERO)
}

pub fn pauli_y() -> Matrix2c {
    Matrix2::new(ZERO, -I, I, ZERO)
}

pub fn pauli_z() -> Matrix2c {
    Matrix2::new(ONE, ZERO, ZERO, -ONE)
}

pub fn ket0() -> Qubit {
    Vector2::new(ONE, ZERO)
}

pub fn ket1() -> Qubit {
    Vector2::new(ZERO, ONE)
}

/// Computational basis state `|k⟩`, `k` in `0..4`.
pub fn basis_state(k: usize) -> StateVector4 {
    let mut v = StateVector4::zeros();
    v[k] = ONE;
    v
}

/// Kronecker product `A ⊗ B` with the a-qubit as the major index.
pub fn tensor_product(a: &Matrix2c, b: &Matrix2c) -> Matrix4c {
    Matrix4c::from_fn(|r, col| a[(r / 2, col / 2)] * b[(r % 2, col % 2)])
}

pub fn kron_state(a: &Qubit, b: &Qubit) -> StateVector4 {
    StateVector4::from_fn(|r, _| a[r / 2] * b[r % 2])
}

pub fn is_finite4(m: &Matrix4c) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

pub fn max_abs(m: &Matrix4c) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_diff(a: &Matrix4c, b: &Matrix4c) -> f64 {
    max_abs(&(a - b))
}

pub fn commutator(a: &Matrix4c, b: &Matrix4c) -> Matrix4c {
    a * b - b * a
}

/// Largest entry of `|H - H†|`.
pub fn hermitian_deviation(h: &Matrix4c) -> f64 {
    max_abs(&(h - h.adjoint()))
}

/// Largest entry of `|U†U - I|`.
pub fn unitary_deviation(u: &Matrix4c) -> f64 {
    max_abs(&(u.adjoint() * u - Matrix4c::identity()))
}

pub fn ensure_unitary(u: &Matrix4c, tol: f64) -> Result<()> {
    if !is_finite4(u) {
        return Err(Error::NonFinite("unitary"));
    }
    let deviation = unitary_deviation(u);
    if deviation > tol {
        return Err(Error::NotUnitary { deviation });
    }
    Ok(())
}

/// Returns `exp(-i H t)` for Hermitian `H`.
///
/// Hamiltonians that only couple inside `{|01⟩,|10⟩}` and `{|00⟩,|11⟩}` are
/// exponentiated block by block with the closed-form 2-level rotation, which
/// is exact to rounding. Anything else goes through a Hermitian
/// eigendecomposition.
pub fn herm_exp(h: &Matrix4c, t: f64) -> Result<Matrix4c> {
    if !is_finite4(h) || !t.is_finite() {
        return Err(Error::NonFinite("Hamiltonian"));
    }
    let deviation = hermitian_deviation(h);
    if deviation > tolerance::HERMITIAN * max_abs(h).max(1.0) {
        return Err(Error::NotHermitian { deviation });
    }
    if t == 0.0 {
        return Ok(Matrix4c::identity());
    }
    if is_two_block(h) {
        let mut u = Matrix4c::zeros();
        for (p, q) in [GAMMA_PAIR, LAMBDA_PAIR] {
            let block = Matrix2::new(h[(p, p)], h[(p, q)], h[(q, p)], h[(q, q)]);
            let e = exp_2level(&block, t);
            u[(p, p)] = e[(0, 0)];
            u[(p, q)] = e[(0, 1)];
            u[(q, p)] = e[(1, 0)];
            u[(q, q)] = e[(1, 1)];
        }
        return Ok(u);
    }
    let eig = SymmetricEigen::new(*h);
    let phases = Matrix4c::from_diagonal(&eig.eigenvalues.map(|lambda| Complex64::cis(-lambda * t)));
    Ok(eig.eigenvectors * phases * eig.eigenvectors.adjoint())
}

fn is_two_block(h: &Matrix4c) -> bool {
    const CROSS: [(usize, usize); 8] =
        [(0, 1), (0, 2), (3, 1), (3, 2), (1, 0), (2, 0), (1, 3), (2, 3)];
    CROSS.iter().all(|&ij| h[ij] == ZERO)
}

/// `exp(-i B t)` for a Hermitian 2×2 block `B = b0·1 + b·σ`.
pub fn exp_2level(block: &Matrix2c, t: f64) -> Matrix2c {
    let b0 = 0.5 * (block[(0, 0)].re + block[(1, 1)].re);
    let bz = 0.5 * (block[(0, 0)].re - block[(1, 1)].re);
    // off-diagonal (0,1) entry is bx - i·by
    let off = 0.5 * (block[(0, 1)] + block[(1, 0)].conj());
    let (bx, by) = (off.re, -off.im);
    let w = (bx * bx + by * by + bz * bz).sqrt();
    let (cos, sin_over_w) = if w * t.abs() < 1e-300 {
        (1.0, t)
    } else {
        ((w * t).cos(), (w * t).sin() / w)
    };
    let global = Complex64::cis(-b0 * t);
    let a00 = c(cos, -sin_over_w * bz);
    let a11 = c(cos, sin_over_w * bz);
    // -i·(sin/w)·(bx σx + by σy)
    let a01 = c(-sin_over_w * by, -sin_over_w * bx);
    let a10 = c(sin_over_w * by, -sin_over_w * bx);
    Matrix2::new(a00, a01, a10, a11) * global
}

/// Phase-insensitive gate overlap `|Tr(U†V)| / 4`.
///
/// Both arguments are expected to be unitary; the result is 1 exactly when
/// they agree up to a global phase.
pub fn gate_fidelity(u: &Matrix4c, v: &Matrix4c) -> f64 {
    ((u.adjoint() * v).trace().norm() / 4.0).min(1.0)
}

/// Phase-aligned distance `‖e^{-iφ}V†U - 1‖_F / √8` with `φ = arg Tr(V†U)`.
///
/// Equals `√(1 - gate_fidelity(U, V))` for unitaries but keeps full relative
/// precision near zero, and is first order in a small generator error.
pub fn gate_distance(u: &Matrix4c, v: &Matrix4c) -> f64 {
    let w = v.adjoint() * u;
    let tr = w.trace();
    let phase = if tr.norm() > 0.0 { tr.conj() / tr.norm() } else { ONE };
    (w * phase - Matrix4c::identity()).norm() / 8f64.sqrt()
}

/// `|⟨a|b⟩|²`.
pub fn state_fidelity(a: &StateVector4, b: &StateVector4) -> f64 {
    a.dotc(b).norm_sqr()
}

/// `Σ_k |ψ_k⟩⟨ψ_k| λ_k` for an orthonormal set of states.
pub fn spectral_sum(terms: &[(Complex64, StateVector4)]) -> Matrix4c {
    terms
        .iter()
        .fold(Matrix4c::zeros(), |acc, (lambda, psi)| acc + psi * psi.adjoint() * *lambda)
}
