//! Approximation error: `max over the domain of |P(x) - alpha*f(x) (mod 1)|`.
//!
//! Boolean outputs are embedded into the torus as `{0, alpha}`; the default
//! embedding (`alpha = 1/2`) maps them to `{0, 1/2}`.

use crate::boolean::{BooleanFunction, SymmetricProfile};
use crate::error::{CoreError, Result};
use crate::poly::multilinear::MultilinearTorusPolynomial;
use crate::poly::nonclassical::NonclassicalPolynomial;
use crate::poly::symmetric::SymmetricTorusPolynomial;
use crate::rational::Rational;
use crate::torus::TorusValue;
use num_bigint::BigInt;
use num_traits::Zero;

pub fn half() -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(2))
}

fn point_error(value: &TorusValue, f_bit: bool, alpha: &Rational) -> Rational {
    let target = if f_bit { alpha.clone() } else { Rational::zero() };
    TorusValue::reduce(&(value.value() - target)).norm()
}

/// Exhaustive error of a multilinear polynomial against a dense truth table.
pub fn approx_error_table(
    p: &MultilinearTorusPolynomial,
    f: &BooleanFunction,
    alpha: &Rational,
) -> Result<Rational> {
    if p.n() != f.n() {
        return Err(CoreError::DimensionMismatch {
            expected: f.n(),
            got: p.n(),
        });
    }
    let mut worst = Rational::zero();
    for x in 0..(1u64 << f.n()) {
        let e = point_error(&p.evaluate_mask(x), f.get(x), alpha);
        if e > worst {
            worst = e;
        }
    }
    Ok(worst)
}

/// Error of a symmetric polynomial against a weight profile; iterates over
/// the `n + 1` weights only, so it scales far beyond dense-table sizes.
pub fn approx_error_profile(
    q: &SymmetricTorusPolynomial,
    f: &SymmetricProfile,
    alpha: &Rational,
) -> Result<Rational> {
    if q.n() != f.n() {
        return Err(CoreError::DimensionMismatch {
            expected: f.n(),
            got: q.n(),
        });
    }
    let eval = q.weight_evaluator();
    let mut worst = Rational::zero();
    for w in 0..=f.n() {
        let e = point_error(&eval.evaluate(w as u64), f.get(w), alpha);
        if e > worst {
            worst = e;
        }
    }
    Ok(worst)
}

/// Exhaustive error of a nonclassical polynomial against a truth table.
pub fn approx_error_nonclassical(
    q: &NonclassicalPolynomial,
    f: &BooleanFunction,
    alpha: &Rational,
) -> Result<Rational> {
    if q.n() != f.n() {
        return Err(CoreError::DimensionMismatch {
            expected: f.n(),
            got: q.n(),
        });
    }
    let mut worst = Rational::zero();
    for x in 0..(1u64 << f.n()) {
        let e = point_error(&q.evaluate_mask(x), f.get(x), alpha);
        if e > worst {
            worst = e;
        }
    }
    Ok(worst)
}

/// Exhaustive sup-distance between two multilinear polynomials.
pub fn sup_distance_multilinear(
    a: &MultilinearTorusPolynomial,
    b: &MultilinearTorusPolynomial,
) -> Result<Rational> {
    if a.n() != b.n() {
        return Err(CoreError::DimensionMismatch {
            expected: a.n(),
            got: b.n(),
        });
    }
    let mut worst = Rational::zero();
    for x in 0..(1u64 << a.n()) {
        let e = (&a.evaluate_mask(x) - &b.evaluate_mask(x)).norm();
        if e > worst {
            worst = e;
        }
    }
    Ok(worst)
}

/// Sup-distance between two symmetric polynomials over weights `0..=n`.
pub fn sup_distance_symmetric(
    a: &SymmetricTorusPolynomial,
    b: &SymmetricTorusPolynomial,
) -> Result<Rational> {
    if a.n() != b.n() {
        return Err(CoreError::DimensionMismatch {
            expected: a.n(),
            got: b.n(),
        });
    }
    let (ea, eb) = (a.weight_evaluator(), b.weight_evaluator());
    let mut worst = Rational::zero();
    for w in 0..=a.n() as u64 {
        let e = (&ea.evaluate(w) - &eb.evaluate(w)).norm();
        if e > worst {
            worst = e;
        }
    }
    Ok(worst)
}

/// Sup-distance between a multilinear polynomial and a nonclassical one.
pub fn sup_distance_nonclassical(
    p: &MultilinearTorusPolynomial,
    q: &NonclassicalPolynomial,
) -> Result<Rational> {
    if p.n() != q.n() {
        return Err(CoreError::DimensionMismatch {
            expected: p.n(),
            got: q.n(),
        });
    }
    let mut worst = Rational::zero();
    for x in 0..(1u64 << p.n()) {
        let e = (&p.evaluate_mask(x) - &q.evaluate_mask(x)).norm();
        if e > worst {
            worst = e;
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn exact_delta_representation() {
        // P = x1...xn/2 represents Delta_n exactly
        let n = 3;
        let p = MultilinearTorusPolynomial::from_terms(n, [(0b111, r("1/2"))]).unwrap();
        let f = BooleanFunction::from_fn(n, |x| x == 0b111).unwrap();
        assert_eq!(approx_error_table(&p, &f, &half()).unwrap(), r("0"));
    }

    #[test]
    fn zero_polynomial_error() {
        let p = MultilinearTorusPolynomial::zero(2);
        let f = BooleanFunction::from_fn(2, |x| x == 0b01).unwrap();
        assert_eq!(approx_error_table(&p, &f, &half()).unwrap(), r("1/2"));
        let z = BooleanFunction::zeros(2).unwrap();
        assert_eq!(approx_error_table(&p, &z, &half()).unwrap(), r("0"));
    }

    #[test]
    fn parity_profile_exact() {
        // Q = |x|/2 vs the parity profile on n = 4
        let q = SymmetricTorusPolynomial::from_coeffs(4, [r("0"), r("1/2")]);
        let parity = SymmetricProfile::parity(4);
        assert_eq!(approx_error_profile(&q, &parity, &half()).unwrap(), r("0"));
    }

    #[test]
    fn dimension_mismatch() {
        let p = MultilinearTorusPolynomial::zero(2);
        let f = BooleanFunction::zeros(3).unwrap();
        assert!(approx_error_table(&p, &f, &half()).is_err());
    }
}
