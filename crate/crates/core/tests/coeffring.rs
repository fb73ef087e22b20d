//! Algebraic invariants of the coefficient rings: `q ↦ exp(h/2)` and
//! evaluation at `q = 1` are ring maps, `(q - 1)`-adic divisibility matches
//! the valuation, and series inversion is exact.

use cqg_core::coeffring::{divides_qm1, eval_q1, expand_laurent, LaurentQ, LocalLaurent, Rat, SeriesH};
use proptest::prelude::*;

/// Laurent polynomials with small coefficients and exponents in `[-3, 5]`.
fn laurent() -> impl Strategy<Value = LaurentQ> {
    (-3i64..=2, prop::collection::vec(-4i128..=4, 0..4)).prop_map(|(low, coeffs)| LaurentQ::new(low, coeffs))
}

fn series(n: usize) -> impl Strategy<Value = SeriesH> {
    prop::collection::vec((-5i128..=5, 1i128..=4), n).prop_map(move |cs| SeriesH::from_coeffs(n, cs.into_iter().map(|(a, b)| Rat::new(a, b)).collect()))
}

const ORDER: usize = 6;

proptest! {
    #[test]
    fn expansion_is_a_ring_map(a in laurent(), b in laurent()) {
        let e = |x: &LaurentQ| expand_laurent(x, ORDER);
        prop_assert_eq!(e(&(&a + &b)), e(&a).add(&e(&b)));
        prop_assert_eq!(e(&(&a * &b)), e(&a).mul(&e(&b)));
        prop_assert_eq!(e(&LaurentQ::constant(1)), SeriesH::constant(ORDER, Rat::from_integer(1)));
    }

    #[test]
    fn evaluation_at_one_is_a_ring_map(a in laurent(), b in laurent()) {
        prop_assert_eq!(eval_q1(&(&a + &b)), eval_q1(&a) + eval_q1(&b));
        prop_assert_eq!(eval_q1(&(&a * &b)), eval_q1(&a) * eval_q1(&b));
        // The constant term of the h-expansion is the value at q = 1.
        prop_assert_eq!(expand_laurent(&a, ORDER).coeff(0), eval_q1(&a));
    }

    #[test]
    fn divisibility_matches_valuation(a in laurent(), k in 0u32..4, n in 0u32..6) {
        prop_assume!(a.qm1_valuation().is_some());
        let x = &a * &LaurentQ::qm1().pow(k);
        let v = x.qm1_valuation().unwrap();
        prop_assert_eq!(v, a.qm1_valuation().unwrap() + k);
        prop_assert_eq!(divides_qm1(&x, n).is_some(), n <= v);
        if let Some(quot) = divides_qm1(&x, n) {
            prop_assert_eq!(&quot * &LaurentQ::qm1().pow(n), x);
        }
    }

    #[test]
    fn valuation_is_additive(a in laurent(), b in laurent()) {
        prop_assume!(a.qm1_valuation().is_some() && b.qm1_valuation().is_some());
        let v = |x: &LaurentQ| x.qm1_valuation().unwrap();
        prop_assert_eq!(v(&(&a * &b)), v(&a) + v(&b));
        // The h-adic valuation of the expansion agrees with the (q - 1)-adic one.
        let ex = expand_laurent(&(&a * &b), 12);
        if let Some(vh) = ex.valuation() {
            prop_assert_eq!(vh as u32, v(&a) + v(&b));
        }
    }

    #[test]
    fn localized_arithmetic_is_consistent(a in laurent(), b in laurent(), k in 0u32..3) {
        let x = LocalLaurent::new(a.clone(), k);
        let y = LocalLaurent::from_laurent(b.clone());
        let back = x.mul(&y).mul_qm1_pow(k as i64);
        prop_assert_eq!(back.as_laurent(), Some(&(&a * &b)));
        prop_assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn series_inverse_is_exact(s in series(ORDER)) {
        prop_assume!(s.coeff(0) != Rat::from_integer(0));
        let inv = s.inv().unwrap();
        prop_assert_eq!(s.mul(&inv), SeriesH::constant(ORDER, Rat::from_integer(1)));
    }

    #[test]
    fn series_multiplication_is_commutative_and_associative(a in series(ORDER), b in series(ORDER), c in series(ORDER)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        let mut acc = a.clone();
        acc.add_assign(&b);
        prop_assert_eq!(acc, a.add(&b));
    }
}
