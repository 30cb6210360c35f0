use proptest::prelude::*;

use schmidt_gates::geometry::{assemble_state, Branch, Frame};
use schmidt_gates::invariants::closed_form_invariants;
use schmidt_gates::linalg::{
    c, exp_2level, max_abs_diff, state_fidelity, unitary_deviation, Matrix2c, Matrix4c, StateVector4,
};
use schmidt_gates::{
    herm_exp, makhlin_invariants, schmidt_decompose, schmidt_gate, tensor_product, GeometricGateSpec,
};

fn hermitian(v: &[f64]) -> Matrix4c {
    let mut h = Matrix4c::zeros();
    let mut it = v.iter().copied();
    for r in 0..4 {
        h[(r, r)] = c(it.next().unwrap(), 0.0);
        for k in r + 1..4 {
            let z = c(it.next().unwrap(), it.next().unwrap());
            h[(r, k)] = z;
            h[(k, r)] = z.conj();
        }
    }
    h
}

fn local_unitary(v: &[f64]) -> Matrix2c {
    let h = Matrix2c::new(c(v[0], 0.0), c(v[1], v[2]), c(v[1], -v[2]), c(v[3], 0.0));
    exp_2level(&h, 1.0)
}

fn state(v: &[f64]) -> StateVector4 {
    let s = StateVector4::new(c(v[0], v[1]), c(v[2], v[3]), c(v[4], v[5]), c(v[6], v[7]));
    s / c(s.norm(), 0.0)
}

fn vec_of(n: usize, r: f64) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-r..r, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exp_group_property(v in vec_of(16, 2.0), s in -1.5..1.5f64, t in -1.5..1.5f64) {
        let h = hermitian(&v);
        let lhs = herm_exp(&h, s).unwrap() * herm_exp(&h, t).unwrap();
        prop_assert!(max_abs_diff(&lhs, &herm_exp(&h, s + t).unwrap()) < 1e-12);
    }

    #[test]
    fn exp_is_unitary(v in vec_of(16, 3.0), t in -3.0..3.0f64) {
        prop_assert!(unitary_deviation(&herm_exp(&hermitian(&v), t).unwrap()) < 1e-12);
    }

    #[test]
    fn kronecker_mixed_product(a in vec_of(4, 1.0), b in vec_of(4, 1.0), x in vec_of(4, 1.0), y in vec_of(4, 1.0)) {
        let (a, b, x, y) = (local_unitary(&a), local_unitary(&b), local_unitary(&x), local_unitary(&y));
        let lhs = tensor_product(&a, &b) * tensor_product(&x, &y);
        prop_assert!(max_abs_diff(&lhs, &tensor_product(&(a * x), &(b * y))) < 1e-14);
    }

    #[test]
    fn decompose_round_trip(v in vec_of(8, 1.0)) {
        prop_assume!(v.iter().map(|x| x * x).sum::<f64>() > 1e-3);
        let psi = state(&v);
        let d = schmidt_decompose(&psi).unwrap();
        prop_assert!(state_fidelity(&d.assemble(), &psi) >= 1.0 - 1e-12);
        let re = assemble_state(d.coords, &d.frame(), Branch::GammaPlus);
        prop_assert!(state_fidelity(&re, &psi) >= 1.0 - 1e-12);
    }

    #[test]
    fn invariants_are_local(a in vec_of(4, 2.0), b in vec_of(4, 2.0), x in vec_of(4, 2.0), y in vec_of(4, 2.0),
                            alpha in 0.0..3.1f64, beta in -3.1..3.1f64, omega in -6.0..6.0f64) {
        let u = schmidt_gate(&GeometricGateSpec::gamma(alpha, beta, omega));
        let k1 = tensor_product(&local_unitary(&a), &local_unitary(&b));
        let k2 = tensor_product(&local_unitary(&x), &local_unitary(&y));
        let i0 = makhlin_invariants(&u).unwrap();
        let i1 = makhlin_invariants(&(k1 * u * k2)).unwrap();
        prop_assert!((i0.g1 - i1.g1).norm() < 1e-10);
        prop_assert!((i0.g2 - i1.g2).abs() < 1e-10);
    }

    #[test]
    fn invariants_in_any_frame(n in vec_of(4, 1.0), m in vec_of(4, 1.0), alpha in 0.0..3.1f64, omega in -6.0..6.0f64) {
        let q = |v: &[f64]| {
            let s = schmidt_gates::Qubit::new(c(v[0], v[1]), c(v[2], v[3]));
            s / c(s.norm(), 0.0)
        };
        prop_assume!(n.iter().chain(&m).all(|x| x.abs() > 1e-3));
        let frame = Frame::new(q(&n), q(&m)).unwrap();
        let u = schmidt_gate(&GeometricGateSpec::gamma(alpha, 0.4, omega).with_frame(frame));
        let got = makhlin_invariants(&u).unwrap();
        let want = closed_form_invariants(alpha, omega);
        prop_assert!((got.g1 - want.g1).norm() < 1e-10);
        prop_assert!((got.g2 - want.g2).abs() < 1e-10);
    }
}
