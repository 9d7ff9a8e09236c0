use cliffq::clifford::{Blade, Multivector, Signature};
use cliffq::matrix::rep_cl30;
use cliffq::octonion::Octonion;
use cliffq::spinor::{decode, encode, encode_in, QubitState};
use num_complex::Complex64;
use proptest::prelude::*;

fn mv(sig: Signature, coeffs: Vec<i8>) -> Multivector {
    Multivector::from_terms(sig, coeffs.into_iter().enumerate().map(|(k, c)| (Blade(k as u32), f64::from(c) / 4.0)))
}

fn cl30() -> impl Strategy<Value = Multivector> {
    prop::collection::vec(-8i8..=8, 8).prop_map(|c| mv(Signature::cl30(), c))
}

fn cl13() -> impl Strategy<Value = Multivector> {
    prop::collection::vec(-8i8..=8, 16).prop_map(|c| mv(Signature::cl13(), c))
}

fn amplitudes(n: usize) -> impl Strategy<Value = QubitState> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1 << n)
        .prop_filter("nonzero", |v| v.iter().any(|(a, b)| a.abs() + b.abs() > 1e-3))
        .prop_map(|v| QubitState::new(v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()).unwrap())
}

fn octonion() -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(-2.0f64..2.0).prop_map(Octonion)
}

proptest! {
    #[test]
    fn geometric_product_is_associative(a in cl13(), b in cl13(), c in cl13()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn reversion_reverses_products(a in cl30(), b in cl30()) {
        prop_assert_eq!((&a * &b).reverse(), &b.reverse() * &a.reverse());
        prop_assert_eq!(a.reverse().reverse(), a);
    }

    #[test]
    fn distributive(a in cl13(), b in cl13(), c in cl13()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn text_round_trip(a in cl13()) {
        prop_assert_eq!(Multivector::parse(Signature::cl13(), &a.to_string()).unwrap(), a);
    }

    #[test]
    fn rep_is_multiplicative(a in cl30(), b in cl30()) {
        let lhs = rep_cl30(&(&a * &b)).unwrap();
        let rhs = rep_cl30(&a).unwrap().try_mul(&rep_cl30(&b).unwrap()).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn encode_decode_round_trip(psi in (1usize..=3).prop_flat_map(amplitudes)) {
        prop_assert!(decode(&encode(&psi)).unwrap().max_abs_diff(&psi) < 1e-12);
        let rel = encode_in(Signature::cl13(), &psi).unwrap();
        prop_assert!(decode(&rel).unwrap().max_abs_diff(&psi) < 1e-12);
    }

    #[test]
    fn octonion_norm_is_multiplicative(a in octonion(), b in octonion()) {
        prop_assert!(((a * b).norm() - a.norm() * b.norm()).abs() <= 1e-12 * (1.0 + a.norm() * b.norm()));
    }

    #[test]
    fn octonions_are_alternative(a in octonion(), b in octonion()) {
        prop_assert!(((a * a) * b - a * (a * b)).norm() < 1e-10);
        prop_assert!(((a * b) * a - a * (b * a)).norm() < 1e-10);
    }
}
