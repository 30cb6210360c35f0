//! The geometric Schmidt gate family as explicit 4×4 unitaries.
//!
//! A loop with base point `r₀` and solid angle `Ω` acts as `e^{∓iΩ/2}` on the
//! pair it moves and as the identity on the complementary pair. The Γ sector
//! moves `Γ±(r₀)` inside `span{|n,m⟩, |-n,-m⟩}`; the Λ sector moves the
//! analogous pair inside `span{|n,-m⟩, |-n,m⟩}`.
//!
//! Gates depend on `Ω` modulo 4π; no reduction is applied.

use num_complex::Complex64;

use crate::geometry::{assemble_state, Branch, Frame, SchmidtCoordinates};
use crate::linalg::{c, kron_state, spectral_sum, tensor_product, Matrix4c, StateVector4, ONE, ZERO};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Sector {
    /// Couples `|01⟩` and `|10⟩` in the standard frame.
    #[default]
    Gamma,
    /// Couples `|00⟩` and `|11⟩` in the standard frame.
    Lambda,
}

impl Sector {
    /// Basis indices of the coupled pair in the standard frame.
    pub fn pair(self) -> (usize, usize) {
        match self {
            Sector::Gamma => crate::linalg::GAMMA_PAIR,
            Sector::Lambda => crate::linalg::LAMBDA_PAIR,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricGateSpec {
    pub alpha0: f64,
    pub beta0: f64,
    pub omega: f64,
    pub sector: Sector,
    pub frame: Frame,
}

impl GeometricGateSpec {
    pub fn gamma(alpha0: f64, beta0: f64, omega: f64) -> Self {
        Self { alpha0, beta0, omega, sector: Sector::Gamma, frame: Frame::standard() }
    }

    pub fn lambda(alpha0: f64, beta0: f64, omega: f64) -> Self {
        Self { alpha0, beta0, omega, sector: Sector::Lambda, frame: Frame::standard() }
    }

    pub fn with_frame(mut self, frame: Frame) -> Self {
        self.frame = frame;
        self
    }

    pub fn base_point(&self) -> SchmidtCoordinates {
        SchmidtCoordinates::new(self.alpha0, self.beta0)
    }

    /// Dispatches on the sector.
    pub fn unitary(&self) -> Matrix4c {
        match self.sector {
            Sector::Gamma => schmidt_gate(self),
            Sector::Lambda => lambda_gate(self),
        }
    }
}

/// The two moving states `(+, -)` of a sector at base point `r₀`, and the two
/// fixed states, all in the standard frame.
pub fn sector_states(sector: Sector, r0: SchmidtCoordinates) -> ([StateVector4; 2], [StateVector4; 2]) {
    let std = Frame::standard();
    match sector {
        Sector::Gamma => (
            [
                assemble_state(r0, &std, Branch::GammaPlus),
                assemble_state(r0, &std, Branch::GammaMinus),
            ],
            [
                assemble_state(r0, &std, Branch::LambdaPlus),
                assemble_state(r0, &std, Branch::LambdaMinus),
            ],
        ),
        Sector::Lambda => {
            // Λ±(r₀): the Γ± amplitudes placed on |00⟩ and |11⟩
            let (f, g) = (r0.f(), r0.g());
            (
                [
                    StateVector4::new(f, ZERO, ZERO, g),
                    StateVector4::new(-g.conj(), ZERO, ZERO, f.conj()),
                ],
                [
                    StateVector4::new(ZERO, ONE, ZERO, ZERO),
                    StateVector4::new(ZERO, ZERO, ONE, ZERO),
                ],
            )
        }
    }
}

fn sector_gate(sector: Sector, r0: SchmidtCoordinates, omega: f64, frame: &Frame) -> Matrix4c {
    let ([plus, minus], [fix_a, fix_b]) = sector_states(sector, r0);
    let standard = spectral_sum(&[
        (ONE, fix_a),
        (ONE, fix_b),
        (Complex64::cis(-0.5 * omega), plus),
        (Complex64::cis(0.5 * omega), minus),
    ]);
    conjugate_by_frame(&standard, frame)
}

/// `(A⊗B) U (A⊗B)†` with `(A, B)` taking the standard frame to `frame`.
pub fn conjugate_by_frame(u: &Matrix4c, frame: &Frame) -> Matrix4c {
    if *frame == Frame::standard() {
        return *u;
    }
    let (a, b) = frame.local_unitaries();
    let local = tensor_product(&a, &b);
    local * u * local.adjoint()
}

/// Γ-sector gate: identity on `|n₀,-m₀⟩` and `|-n₀,m₀⟩`, phases `e^{∓iΩ/2}`
/// on `Γ±(r₀)`. The `sector` field of `spec` is ignored.
pub fn schmidt_gate(spec: &GeometricGateSpec) -> Matrix4c {
    sector_gate(Sector::Gamma, spec.base_point(), spec.omega, &spec.frame)
}

/// Λ-sector gate: identity on `|n₀,m₀⟩` and `|-n₀,-m₀⟩`, phases `e^{∓iΩ/2}`
/// on `Λ±(r₀)`. The `sector` field of `spec` is ignored.
pub fn lambda_gate(spec: &GeometricGateSpec) -> Matrix4c {
    sector_gate(Sector::Lambda, spec.base_point(), spec.omega, &spec.frame)
}

/// The equatorial gate at `r₀ = (0, 1, 0)` written directly as a real rotation
/// by `Ω/2` in the `{|01⟩, |10⟩}` block.
pub fn u_general(omega: f64) -> Matrix4c {
    let (s, co) = (0.5 * omega).sin_cos();
    let mut u = Matrix4c::identity();
    u[(1, 1)] = c(co, 0.0);
    u[(1, 2)] = c(-s, 0.0);
    u[(2, 1)] = c(s, 0.0);
    u[(2, 2)] = c(co, 0.0);
    u
}

/// Product states `½(|0⟩ ± |1⟩) ⊗ (|0⟩ ± |1⟩)`.
pub fn hadamard_product_basis() -> [StateVector4; 4] {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let plus = nalgebra::Vector2::new(c(h, 0.0), c(h, 0.0));
    let minus = nalgebra::Vector2::new(c(h, 0.0), c(-h, 0.0));
    [
        kron_state(&plus, &plus),
        kron_state(&plus, &minus),
        kron_state(&minus, &plus),
        kron_state(&minus, &minus),
    ]
}
