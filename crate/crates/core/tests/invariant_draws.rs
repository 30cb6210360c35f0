use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schmidt_gates::invariants::closed_form_invariants;
use schmidt_gates::linalg::max_abs;
use schmidt_gates::{lambda_gate, makhlin_invariants, schmidt_gate, GeometricGateSpec};

#[test]
fn thousand_draws_match_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let alpha = rng.random_range(0.0..PI);
        let beta = rng.random_range(0.0..TAU);
        let omega = rng.random_range(-TAU..TAU);
        let got = makhlin_invariants(&schmidt_gate(&GeometricGateSpec::gamma(alpha, beta, omega))).unwrap();
        let want = closed_form_invariants(alpha, omega);
        assert!((got.g1 - want.g1).norm() < 1e-10, "{alpha} {beta} {omega}");
        assert!((got.g2 - want.g2).abs() < 1e-10);
        let other = makhlin_invariants(&schmidt_gate(&GeometricGateSpec::gamma(alpha, beta + 1.3, omega))).unwrap();
        assert!((got.g1 - other.g1).norm() < 1e-12);
        assert!((got.g2 - other.g2).abs() < 1e-12);
    }
}

#[test]
fn lambda_sector_has_same_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let (alpha, beta, omega) = (rng.random_range(0.0..PI), rng.random_range(0.0..TAU), rng.random_range(-TAU..TAU));
        let l = makhlin_invariants(&lambda_gate(&GeometricGateSpec::lambda(alpha, beta, omega))).unwrap();
        let want = closed_form_invariants(alpha, omega);
        assert!((l.g1 - want.g1).norm() < 1e-10);
        assert!((l.g2 - want.g2).abs() < 1e-10);
    }
}

#[test]
fn sectors_commute_on_random_draws() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let mut draw = || (rng.random_range(0.0..PI), rng.random_range(0.0..TAU), rng.random_range(-TAU..TAU));
        let (a, b, o) = draw();
        let g = schmidt_gate(&GeometricGateSpec::gamma(a, b, o));
        let (a, b, o) = draw();
        let l = lambda_gate(&GeometricGateSpec::lambda(a, b, o));
        assert!(max_abs(&(g * l - l * g)) < 1e-12);
    }
}
