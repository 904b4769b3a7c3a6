//! Modulus-amplifying polynomials.
//!
//! `A_k` is a univariate integer polynomial of degree `2k - 1` such that for
//! every modulus `m >= 2`: `x ≡ 0 (mod m)` implies `A_k(x) ≡ 0 (mod m^k)`
//! and `x ≡ 1 (mod m)` implies `A_k(x) ≡ 1 (mod m^k)`.
//!
//! We use `A_k(x) = x^k * sum_{j<k} C(k-1+j, j) (1-x)^j`: the `x^k` factor
//! forces the first congruence, and `1 - A_k(x)` is divisible by `(1-x)^k`,
//! forcing the second. Both congruences are re-checked by property tests;
//! the tests, not the formula, are the ground truth.

use crate::error::{ConstructionError, Result};
use torus_core::poly::integer::{binomial, UnivariateIntPolynomial};

pub fn modulus_amplifier(k: u32) -> Result<UnivariateIntPolynomial> {
    if k < 1 {
        return Err(ConstructionError::InvalidAmplifierOrder);
    }
    let one_minus_x = UnivariateIntPolynomial::new(vec![1.into(), (-1).into()]);
    let mut sum = UnivariateIntPolynomial::zero();
    let mut pow = UnivariateIntPolynomial::constant(1.into());
    for j in 0..k {
        let c = binomial((k - 1 + j) as u64, j as u64);
        sum = sum.add(&pow.scale(&c));
        pow = pow.multiply(&one_minus_x);
    }
    let mut xk = UnivariateIntPolynomial::constant(1.into());
    let x = UnivariateIntPolynomial::x();
    for _ in 0..k {
        xk = xk.multiply(&x);
    }
    Ok(xk.multiply(&sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::{One, Zero};

    #[test]
    fn k1_is_identity() {
        let a = modulus_amplifier(1).unwrap();
        assert_eq!(a.coeffs(), &[BigInt::zero(), BigInt::one()]);
    }

    #[test]
    fn k2_matches_closed_form() {
        // 3x^2 - 2x^3
        let a = modulus_amplifier(2).unwrap();
        assert_eq!(a.coeffs(), &[0.into(), 0.into(), 3.into(), BigInt::from(-2)]);
    }

    #[test]
    fn degree_is_2k_minus_1() {
        for k in 1..=6 {
            let a = modulus_amplifier(k).unwrap();
            assert_eq!(a.degree(), (2 * k - 1) as usize, "k = {k}");
        }
    }

    #[test]
    fn congruences_hold() {
        for k in 1..=6u32 {
            let a = modulus_amplifier(k).unwrap();
            for m in 2i64..=10 {
                let mk = BigInt::from(m).pow(k);
                for x in (-100i64..=100).filter(|x| x.rem_euclid(m) <= 1) {
                    let want = BigInt::from(x.rem_euclid(m));
                    let got = a.evaluate(&BigInt::from(x));
                    let rem = ((got % &mk) + &mk) % &mk;
                    assert_eq!(rem, want, "k = {k}, m = {m}, x = {x}");
                }
            }
        }
    }

    #[test]
    fn invalid_order_rejected() {
        assert!(modulus_amplifier(0).is_err());
    }

    #[test]
    fn a_k_of_one_is_one() {
        for k in 1..=6 {
            let a = modulus_amplifier(k).unwrap();
            assert_eq!(a.evaluate(&BigInt::one()), BigInt::one());
            assert_eq!(a.evaluate(&BigInt::zero()), BigInt::zero());
        }
    }
}
