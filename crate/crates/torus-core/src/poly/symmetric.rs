//! Symmetric torus polynomials in the Hamming-weight power basis:
//! `Q(x) = sum_j c_j |x|^j (mod 1)`.
//!
//! Powers of the weight are integers on `{0,1}^n`, so coefficients are again
//! stored reduced mod 1. The stored degree may exceed `n`; multilinearization
//! caps it at `n`.

use crate::error::{CoreError, Result};
use crate::poly::multilinear::MultilinearTorusPolynomial;
use crate::rational::Rational;
use crate::torus::TorusValue;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Cap for expanding a symmetric polynomial into the subset basis
/// (the expansion has up to 2^n terms).
pub const MAX_EXPAND_VARS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricTorusPolynomial {
    n: usize,
    coeffs: Vec<TorusValue>, // c_0 .. c_d, last entry nonzero (or empty)
}

impl SymmetricTorusPolynomial {
    pub fn zero(n: usize) -> Self {
        SymmetricTorusPolynomial { n, coeffs: vec![] }
    }

    pub fn from_coeffs(n: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut c: Vec<TorusValue> = coeffs.into_iter().map(|r| TorusValue::reduce(&r)).collect();
        while c.last().is_some_and(|t| t.is_zero()) {
            c.pop();
        }
        SymmetricTorusPolynomial { n, coeffs: c }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Max power with nonzero coefficient; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coefficient(&self, power: usize) -> TorusValue {
        self.coeffs.get(power).cloned().unwrap_or_else(TorusValue::zero)
    }

    pub fn coeffs(&self) -> &[TorusValue] {
        &self.coeffs
    }

    /// Evaluate at Hamming weight `w`. Exact: denominators are cleared to
    /// their lcm `L` up front and Horner runs over integers mod `L`, so
    /// intermediates never exceed `L * w` regardless of the degree.
    pub fn evaluate_weight(&self, w: u64) -> TorusValue {
        self.weight_evaluator().evaluate(w)
    }

    /// Precompute the cleared-denominator form once; evaluating many weights
    /// through the returned evaluator skips the per-call lcm and rescaling
    /// work, which dominates for high-degree coefficients over a wide
    /// common denominator.
    pub fn weight_evaluator(&self) -> WeightEvaluator {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.value().denom()));
        let scaled = self
            .coeffs
            .iter()
            .map(|c| c.value().numer() * (&lcm / c.value().denom()))
            .collect();
        WeightEvaluator { lcm, scaled }
    }

    pub fn evaluate_mask(&self, x: u64) -> TorusValue {
        self.evaluate_weight(x.count_ones() as u64)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(CoreError::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let len = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::from_coeffs(
            self.n,
            (0..len).map(|j| self.coefficient(j).into_value() + other.coefficient(j).into_value()),
        ))
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.n, self.coeffs.iter().map(|c| -c.value()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, by: &Rational) -> Self {
        Self::from_coeffs(self.n, self.coeffs.iter().map(|c| c.value() * by))
    }

    /// Substitute `|x| -> |x| + shift`, renaming to `m` variables. Used by the
    /// majority-to-delta reduction, where a constant block of ones is glued
    /// onto the input.
    pub fn shift_weight(&self, m: usize, shift: u64) -> SymmetricTorusPolynomial {
        let d = self.coeffs.len();
        if d == 0 {
            return SymmetricTorusPolynomial::zero(m);
        }
        let s = BigInt::from(shift);
        // out_i = sum_{j >= i} c_j * C(j, i) * shift^(j - i)
        let mut out = vec![Rational::zero(); d];
        for (j, c) in self.coeffs.iter().enumerate() {
            // binom = C(j, i), pow = shift^(j - i), walking i = j down to 0
            let mut binom = BigInt::from(1);
            let mut pow = BigInt::from(1);
            for i in (0..=j).rev() {
                out[i] += c.value() * Rational::from_integer(&binom * &pow);
                if i > 0 {
                    binom = binom * BigInt::from(i as u64) / BigInt::from((j - i + 1) as u64);
                    pow *= &s;
                }
            }
        }
        SymmetricTorusPolynomial::from_coeffs(m, out)
    }
}

/// Integer-Horner evaluator with denominators cleared to their common lcm.
/// Built once per polynomial by [`SymmetricTorusPolynomial::weight_evaluator`].
pub struct WeightEvaluator {
    lcm: BigInt,
    scaled: Vec<BigInt>, // numerators over the lcm, ascending powers
}

impl WeightEvaluator {
    pub fn evaluate(&self, w: u64) -> TorusValue {
        let wb = BigInt::from(w);
        let mut acc = BigInt::zero();
        for s in self.scaled.iter().rev() {
            acc = (acc * &wb + s) % &self.lcm;
        }
        TorusValue::reduce(&Rational::new(acc, self.lcm.clone()))
    }
}

/// Expand a symmetric polynomial into the multilinear subset basis.
///
/// The coefficient of every monomial with `|S| = r` is the r-th forward
/// difference of the weight function `g(w) = sum_j c_j w^j` at 0; this is the
/// unique multilinear polynomial agreeing with `Q` on `{0,1}^n`.
pub fn symmetric_to_multilinear(
    q: &SymmetricTorusPolynomial,
) -> Result<MultilinearTorusPolynomial> {
    let n = q.n();
    if n > MAX_EXPAND_VARS {
        return Err(CoreError::SizeLimit(format!(
            "symmetric-to-multilinear expansion with n = {n} exceeds the n <= {MAX_EXPAND_VARS} cap"
        )));
    }
    // forward differences of g at 0: diffs[r] after r rounds
    let mut values: Vec<Rational> = (0..=n as u64)
        .map(|w| {
            let wr = Rational::from_integer(BigInt::from(w));
            let mut acc = Rational::zero();
            for c in q.coeffs().iter().rev() {
                acc = acc * &wr + c.value();
            }
            acc
        })
        .collect();
    let mut p = MultilinearTorusPolynomial::zero(n);
    for r in 0..=n {
        if r > 0 {
            for i in 0..(values.len() - 1) {
                values[i] = &values[i + 1] - &values[i];
            }
            values.pop();
        }
        let diff = values[0].clone();
        if diff.is_integer() {
            continue; // coefficient reduces to zero mod 1
        }
        // all subsets of size r share this coefficient
        let mut mask = (1u64 << r) - 1;
        let top = 1u64 << n;
        while r > 0 && mask < top {
            p.add_term(mask, &diff);
            // next subset of the same popcount (Gosper's hack)
            let c = mask & mask.wrapping_neg();
            let rr = mask + c;
            mask = (((rr ^ mask) >> 2) / c) | rr;
        }
        if r == 0 {
            p.add_term(0, &diff);
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn parity_polynomial() {
        // Q = |x|/2 on n = 3; at weight 2 the value is 1 == 0 mod 1
        let q = SymmetricTorusPolynomial::from_coeffs(3, [r("0"), r("1/2")]);
        assert_eq!(q.evaluate_mask(0b110).value(), &r("0"));
        assert_eq!(q.evaluate_mask(0b100).value(), &r("1/2"));
        assert_eq!(q.degree(), 1);
    }

    #[test]
    fn expansion_matches_on_cube() {
        let q = SymmetricTorusPolynomial::from_coeffs(4, [r("1/3"), r("1/5"), r("3/7")]);
        let p = symmetric_to_multilinear(&q).unwrap();
        for x in 0..16u64 {
            assert_eq!(p.evaluate_mask(x), q.evaluate_mask(x), "x = {x:#b}");
        }
    }

    #[test]
    fn expansion_of_weight_squared() {
        // coeffs (0, 0, 1): (x1 + x2)^2 = x1 + x2 + 2 x1 x2, all integer
        // coefficients, hence the zero torus polynomial
        let q = SymmetricTorusPolynomial::from_coeffs(2, [r("0"), r("0"), r("1")]);
        assert_eq!(q.coeffs().len(), 0); // 1 mod 1 == 0 already at construction
        let q = SymmetricTorusPolynomial::from_coeffs(2, [r("0"), r("1/2")]);
        let p = symmetric_to_multilinear(&q).unwrap();
        assert_eq!(p.coefficient(0b01).value(), &r("1/2"));
        assert_eq!(p.coefficient(0b10).value(), &r("1/2"));
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn constant_expansion() {
        let q = SymmetricTorusPolynomial::from_coeffs(3, [r("2/7")]);
        let p = symmetric_to_multilinear(&q).unwrap();
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.coefficient(0).value(), &r("2/7"));
    }

    #[test]
    fn weight_shift() {
        let q = SymmetricTorusPolynomial::from_coeffs(5, [r("1/7"), r("1/3"), r("2/5")]);
        let shifted = q.shift_weight(3, 2);
        assert_eq!(shifted.n(), 3);
        for w in 0..=3u64 {
            assert_eq!(shifted.evaluate_weight(w), q.evaluate_weight(w + 2));
        }
    }

    #[test]
    fn degree_beyond_n_is_allowed_in_power_basis() {
        let q = SymmetricTorusPolynomial::from_coeffs(2, [r("0"), r("0"), r("0"), r("1/4")]);
        assert_eq!(q.degree(), 3);
        let p = symmetric_to_multilinear(&q).unwrap();
        assert!(p.degree() <= 2);
        for x in 0..4u64 {
            assert_eq!(p.evaluate_mask(x), q.evaluate_mask(x));
        }
    }
}
