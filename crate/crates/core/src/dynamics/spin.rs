use std::ops::{Add, Mul, Sub};

use crate::gates::Sector;
use crate::linalg::{c, pauli_x, pauli_y, pauli_z, tensor_product, Matrix2c, Matrix4c};

/// Coefficients `(c_XY, c_DM, c_Z)` of the three spin-exchange terms, in
/// angular-frequency units.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Coefficients {
    pub xy: f64,
    pub dm: f64,
    pub z: f64,
}

impl Coefficients {
    pub const fn new(xy: f64, dm: f64, z: f64) -> Self {
        Self { xy, dm, z }
    }

    pub fn is_finite(&self) -> bool {
        self.xy.is_finite() && self.dm.is_finite() && self.z.is_finite()
    }

    pub fn cross(&self, o: &Self) -> Self {
        Self::new(
            self.dm * o.z - self.z * o.dm,
            self.z * o.xy - self.xy * o.z,
            self.xy * o.dm - self.dm * o.xy,
        )
    }

    pub fn norm(&self) -> f64 {
        (self.xy * self.xy + self.dm * self.dm + self.z * self.z).sqrt()
    }

    /// `⟨01|H|10⟩`-type coupling `ω₂₃ = c_XY - i c_DM` and the diagonal
    /// `ω₂₂ = -ω₃₃ = c_Z` of the 2-level block.
    pub fn omega_elements(&self) -> (f64, num_complex::Complex64) {
        (self.z, c(self.xy, -self.dm))
    }
}

impl Add for Coefficients {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.xy + o.xy, self.dm + o.dm, self.z + o.z)
    }
}

impl Sub for Coefficients {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.xy - o.xy, self.dm - o.dm, self.z - o.z)
    }
}

impl Mul<f64> for Coefficients {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Self::new(self.xy * k, self.dm * k, self.z * k)
    }
}

/// XY, Dzyaloshinskii–Moriya and Zeeman operators of one sector. Each acts as
/// `σx, σy, σz` on its coupled basis pair and vanishes on the other pair.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinOperators {
    pub h_xy: Matrix4c,
    pub h_dm: Matrix4c,
    pub h_z: Matrix4c,
}

impl SpinOperators {
    /// `h_XY = (XX + YY)/2`, `h_DM = (YX - XY)/2`, `h_Z = (Z1 - 1Z)/2`.
    pub fn gamma() -> Self {
        let (x, y, z, one) = (pauli_x(), pauli_y(), pauli_z(), Matrix2c::identity());
        let half = c(0.5, 0.0);
        Self {
            h_xy: (tensor_product(&x, &x) + tensor_product(&y, &y)) * half,
            h_dm: (tensor_product(&y, &x) - tensor_product(&x, &y)) * half,
            h_z: (tensor_product(&z, &one) - tensor_product(&one, &z)) * half,
        }
    }

    /// The same algebra on `{|00⟩, |11⟩}`:
    /// `(XX - YY)/2`, `(XY + YX)/2`, `(Z1 + 1Z)/2`.
    pub fn lambda() -> Self {
        let (x, y, z, one) = (pauli_x(), pauli_y(), pauli_z(), Matrix2c::identity());
        let half = c(0.5, 0.0);
        Self {
            h_xy: (tensor_product(&x, &x) - tensor_product(&y, &y)) * half,
            h_dm: (tensor_product(&x, &y) + tensor_product(&y, &x)) * half,
            h_z: (tensor_product(&z, &one) + tensor_product(&one, &z)) * half,
        }
    }

    pub fn for_sector(sector: Sector) -> Self {
        match sector {
            Sector::Gamma => Self::gamma(),
            Sector::Lambda => Self::lambda(),
        }
    }

    pub fn hamiltonian(&self, k: &Coefficients) -> Matrix4c {
        self.h_xy * c(k.xy, 0.0) + self.h_dm * c(k.dm, 0.0) + self.h_z * c(k.z, 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{commutator, hermitian_deviation, max_abs, I};

    fn check_algebra(ops: &SpinOperators) {
        let two_i = I * 2.0;
        let cases = [
            (&ops.h_xy, &ops.h_dm, &ops.h_z),
            (&ops.h_dm, &ops.h_z, &ops.h_xy),
            (&ops.h_z, &ops.h_xy, &ops.h_dm),
        ];
        for (a, b, r) in cases {
            assert!(max_abs(&(commutator(a, b) - r * two_i)) <= 1e-15);
        }
        for h in [&ops.h_xy, &ops.h_dm, &ops.h_z] {
            assert_eq!(hermitian_deviation(h), 0.0);
        }
    }

    #[test]
    fn su2_relations() {
        check_algebra(&SpinOperators::gamma());
        check_algebra(&SpinOperators::lambda());
    }

    #[test]
    fn gamma_block_entries() {
        let ops = SpinOperators::gamma();
        assert_eq!(ops.h_xy[(1, 2)], c(1.0, 0.0));
        assert_eq!(ops.h_dm[(1, 2)], c(0.0, -1.0));
        assert_eq!(ops.h_dm[(2, 1)], c(0.0, 1.0));
        assert_eq!(ops.h_z[(1, 1)], c(1.0, 0.0));
        assert_eq!(ops.h_z[(2, 2)], c(-1.0, 0.0));
        for h in [&ops.h_xy, &ops.h_dm, &ops.h_z] {
            for k in [0, 3] {
                for j in 0..4 {
                    assert_eq!(h[(k, j)], c(0.0, 0.0));
                    assert_eq!(h[(j, k)], c(0.0, 0.0));
                }
            }
        }
    }

    #[test]
    fn omega_view_matches_matrix() {
        let k = Coefficients::new(0.3, -1.2, 0.7);
        let h = SpinOperators::gamma().hamiltonian(&k);
        let (w22, w23) = k.omega_elements();
        assert_eq!(h[(1, 1)].re, w22);
        assert_eq!(h[(2, 2)].re, -w22);
        assert_eq!(h[(1, 2)], w23);
    }
}
