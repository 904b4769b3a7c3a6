//! Multilinear torus polynomials in the subset basis.
//!
//! A polynomial is a finite map from subsets `S ⊆ [n]` (stored as bitmasks,
//! variable `i` at bit `i-1`) to torus coefficients. Coefficients are reduced
//! modulo one on construction: every monomial is integer-valued on `{0,1}^n`,
//! so only the fractional part of a coefficient affects evaluation mod 1.

use crate::error::{CoreError, Result};
use crate::rational::Rational;
use crate::torus::TorusValue;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearTorusPolynomial {
    n: usize,
    terms: BTreeMap<u64, TorusValue>,
}

impl MultilinearTorusPolynomial {
    pub fn zero(n: usize) -> Self {
        MultilinearTorusPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: &Rational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(0, c);
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (u64, Rational)>) -> Result<Self> {
        let mut p = Self::zero(n);
        for (mask, c) in terms {
            if n < 64 && mask >= (1u64 << n) {
                return Err(CoreError::DimensionMismatch {
                    expected: n,
                    got: 64 - mask.leading_zeros() as usize,
                });
            }
            p.add_term(mask, &c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &TorusValue)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, mask: u64) -> TorusValue {
        self.terms.get(&mask).cloned().unwrap_or_else(TorusValue::zero)
    }

    /// Add `c` to the coefficient of the monomial with variable set `mask`,
    /// reducing mod 1 and dropping the term if it becomes zero.
    pub fn add_term(&mut self, mask: u64, c: &Rational) {
        let cur = self.terms.remove(&mask).unwrap_or_else(TorusValue::zero);
        let next = TorusValue::reduce(&(cur.value() + c));
        if !next.is_zero() {
            self.terms.insert(mask, next);
        }
    }

    /// Max `|S|` over stored (nonzero) coefficients; 0 for constants.
    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Evaluate at the point whose support is `x` (bit `i-1` carries `x_i`).
    pub fn evaluate_mask(&self, x: u64) -> TorusValue {
        let mut acc = Rational::from_integer(0.into());
        for (mask, c) in &self.terms {
            if mask & !x == 0 {
                acc += c.value();
            }
        }
        TorusValue::reduce(&acc)
    }

    pub fn evaluate(&self, x: &[bool]) -> Result<TorusValue> {
        if x.len() != self.n {
            return Err(CoreError::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        let mask = x
            .iter()
            .enumerate()
            .fold(0u64, |m, (i, b)| if *b { m | (1 << i) } else { m });
        Ok(self.evaluate_mask(mask))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(CoreError::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut out = self.clone();
        for (mask, c) in &other.terms {
            out.add_term(*mask, c.value());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (mask, c) in &self.terms {
            out.add_term(*mask, &-c.value());
        }
        out
    }

    pub fn scale(&self, by: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        for (mask, c) in &self.terms {
            out.add_term(*mask, &(c.value() * by));
        }
        out
    }

    /// Split off the constant term, returning (shift, rest).
    pub fn split_constant(&self) -> (TorusValue, Self) {
        let shift = self.coefficient(0);
        let mut rest = self.clone();
        rest.terms.remove(&0);
        (shift, rest)
    }
}

/// Multilinearize a polynomial given with integer exponents: `x_i^a -> x_i`
/// for `a >= 1`. Agrees with the input on all of `{0,1}^n`. Each term is a
/// per-variable exponent vector of length `n`.
pub fn multilinearize(
    n: usize,
    terms: &[(Vec<u32>, Rational)],
) -> Result<MultilinearTorusPolynomial> {
    let mut p = MultilinearTorusPolynomial::zero(n);
    for (exps, c) in terms {
        if exps.len() != n {
            return Err(CoreError::DimensionMismatch {
                expected: n,
                got: exps.len(),
            });
        }
        let mask = exps
            .iter()
            .enumerate()
            .fold(0u64, |m, (i, e)| if *e > 0 { m | (1 << i) } else { m });
        p.add_term(mask, c);
    }
    Ok(p)
}
