//! Integer polynomials: multilinear multivariate (subset basis) and dense
//! univariate (for the modulus amplifiers, which are genuinely non-linear in
//! their single variable).

use crate::error::{CoreError, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerPolynomial {
    n: usize,
    terms: BTreeMap<u64, BigInt>,
}

impl IntegerPolynomial {
    pub fn zero(n: usize) -> Self {
        IntegerPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (u64, BigInt)>) -> Result<Self> {
        let mut f = Self::zero(n);
        for (mask, c) in terms {
            if n < 64 && mask >= (1u64 << n) {
                return Err(CoreError::DimensionMismatch {
                    expected: n,
                    got: 64 - mask.leading_zeros() as usize,
                });
            }
            f.add_term(mask, &c);
        }
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn add_term(&mut self, mask: u64, c: &BigInt) {
        let cur = self.terms.remove(&mask).unwrap_or_else(BigInt::zero);
        let next = cur + c;
        if !next.is_zero() {
            self.terms.insert(mask, next);
        }
    }

    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn evaluate_mask(&self, x: u64) -> BigInt {
        let mut acc = BigInt::zero();
        for (mask, c) in &self.terms {
            if mask & !x == 0 {
                acc += c;
            }
        }
        acc
    }

    pub fn scale(&self, by: &BigInt) -> Self {
        let mut out = Self::zero(self.n);
        if !by.is_zero() {
            for (mask, c) in &self.terms {
                out.terms.insert(*mask, c * by);
            }
        }
        out
    }
}

/// Dense univariate integer polynomial, coefficients by ascending power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariateIntPolynomial {
    coeffs: Vec<BigInt>,
}

impl UnivariateIntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut c = coeffs;
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UnivariateIntPolynomial { coeffs: c }
    }

    pub fn zero() -> Self {
        UnivariateIntPolynomial { coeffs: vec![] }
    }

    pub fn x() -> Self {
        Self::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coefficient(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..len)
                .map(|i| self.coefficient(i) + other.coefficient(i))
                .collect(),
        )
    }

    pub fn multiply(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, by: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * by).collect())
    }

    /// `self(g(x))` by Horner over polynomials.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.multiply(g).add(&Self::constant(c.clone()));
        }
        acc
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Sum of binomials `C(n, 0) + ... + C(n, d)`.
pub fn binomial_sum(n: u64, d: u64) -> BigInt {
    (0..=d.min(n)).map(|j| binomial(n, j)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn univariate_compose() {
        // f(x) = x^2 + 1, g(x) = 2x - 3, f(g(x)) = 4x^2 - 12x + 10
        let f = UnivariateIntPolynomial::new(vec![1.into(), 0.into(), 1.into()]);
        let g = UnivariateIntPolynomial::new(vec![(-3).into(), 2.into()]);
        let fg = f.compose(&g);
        assert_eq!(fg.coeffs(), &[BigInt::from(10), (-12).into(), 4.into()]);
        for x in -5i64..5 {
            let x = BigInt::from(x);
            assert_eq!(fg.evaluate(&x), f.evaluate(&g.evaluate(&x)));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial_sum(4, 2), BigInt::from(11));
    }

    #[test]
    fn multilinear_integer_eval() {
        let f = IntegerPolynomial::from_terms(
            2,
            [(0b00, BigInt::from(1)), (0b11, BigInt::from(8))],
        )
        .unwrap();
        assert_eq!(f.evaluate_mask(0b11), BigInt::from(9));
        assert_eq!(f.evaluate_mask(0b01), BigInt::from(1));
        assert_eq!(f.degree(), 2);
    }
}
