//! Property tests for the torus arithmetic invariants.

use num_bigint::BigInt;
use proptest::prelude::*;
use torus_core::approx::{approx_error_table, half};
use torus_core::poly::multilinear::multilinearize;
use torus_core::poly::symmetric::symmetric_to_multilinear;
use torus_core::rational::parse_rational;
use torus_core::{
    BooleanFunction, MultilinearTorusPolynomial, Rational, SymmetricTorusPolynomial, TorusValue,
};

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (any::<i64>(), 1u64..10_000).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn norm_is_symmetric(r in rational_strategy()) {
        let z = TorusValue::reduce(&r);
        prop_assert_eq!(z.norm(), (-&z).norm());
    }

    #[test]
    fn norm_triangle_inequality(a in rational_strategy(), b in rational_strategy()) {
        let za = TorusValue::reduce(&a);
        let zb = TorusValue::reduce(&b);
        prop_assert!((&za + &zb).norm() <= za.norm() + zb.norm());
    }

    #[test]
    fn norm_range(r in rational_strategy()) {
        let z = TorusValue::reduce(&r);
        prop_assert!(z.norm() >= Rational::from_integer(0.into()));
        prop_assert!(z.norm() <= parse_rational("1/2").unwrap());
    }

    /// Adding any integer to a coefficient never changes evaluation mod 1.
    #[test]
    fn integer_coefficient_shifts_are_invisible(
        coeffs in proptest::collection::vec((0u64..64, rational_strategy()), 1..6),
        shift in -5i64..5,
        which in 0usize..6,
    ) {
        let n = 6;
        let terms: Vec<(u64, Rational)> = coeffs
            .iter()
            .map(|(m, c)| (m % (1 << n), c.clone()))
            .collect();
        let p = MultilinearTorusPolynomial::from_terms(n, terms.clone()).unwrap();
        let mut shifted = terms;
        let i = which % shifted.len();
        shifted[i].1 += Rational::from_integer(BigInt::from(shift));
        let q = MultilinearTorusPolynomial::from_terms(n, shifted).unwrap();
        for x in 0..(1u64 << n) {
            prop_assert_eq!(p.evaluate_mask(x), q.evaluate_mask(x));
        }
    }

    /// Symmetric evaluation depends only on the Hamming weight.
    #[test]
    fn symmetric_eval_depends_on_weight_only(
        coeffs in proptest::collection::vec(rational_strategy(), 0..5),
    ) {
        let n = 8;
        let q = SymmetricTorusPolynomial::from_coeffs(n, coeffs);
        let p = symmetric_to_multilinear(&q).unwrap();
        for x in 0..(1u64 << n) {
            let w = x.count_ones() as u64;
            prop_assert_eq!(q.evaluate_mask(x), q.evaluate_weight(w));
            prop_assert_eq!(p.evaluate_mask(x), q.evaluate_weight(w));
        }
    }

    /// Multilinearization agrees with the exponent form on all of {0,1}^n.
    #[test]
    fn multilinearize_preserves_evaluation(
        terms in proptest::collection::vec(
            (proptest::collection::vec(0u32..4, 4), rational_strategy()),
            1..5,
        ),
    ) {
        let n = 4;
        let p = multilinearize(n, &terms).unwrap();
        for x in 0..(1u64 << n) {
            let mut direct = Rational::from_integer(0.into());
            for (exps, c) in &terms {
                let vanishes = exps
                    .iter()
                    .enumerate()
                    .any(|(i, e)| *e > 0 && x >> i & 1 == 0);
                if !vanishes {
                    direct += c;
                }
            }
            prop_assert_eq!(p.evaluate_mask(x), TorusValue::reduce(&direct));
        }
    }
}

#[test]
fn approx_error_is_at_most_half_with_equality() {
    // P = 0 vs Delta_0 on n = 0-like smallest table (n = 1, f(0) = 1)
    let p = MultilinearTorusPolynomial::zero(1);
    let f = BooleanFunction::from_fn(1, |x| x == 0).unwrap();
    let err = approx_error_table(&p, &f, &half()).unwrap();
    assert_eq!(err, parse_rational("1/2").unwrap());
}
