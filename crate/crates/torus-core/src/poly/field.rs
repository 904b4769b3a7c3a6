//! Multilinear polynomials over a prime field F_p, subset basis.

use crate::boolean::BooleanFunction;
use crate::error::{CoreError, Result};
use std::collections::BTreeMap;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldPolynomial {
    p: u64,
    n: usize,
    terms: BTreeMap<u64, u64>, // subset mask -> residue in 1..p-1 (zeros dropped)
}

impl FieldPolynomial {
    pub fn zero(p: u64, n: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(CoreError::Malformed(format!("modulus {p} is not prime")));
        }
        Ok(FieldPolynomial {
            p,
            n,
            terms: BTreeMap::new(),
        })
    }

    pub fn from_terms(p: u64, n: usize, terms: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        let mut f = Self::zero(p, n)?;
        for (mask, c) in terms {
            if n < 64 && mask >= (1u64 << n) {
                return Err(CoreError::DimensionMismatch {
                    expected: n,
                    got: 64 - mask.leading_zeros() as usize,
                });
            }
            f.add_term(mask, c);
        }
        Ok(f)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, *c))
    }

    pub fn add_term(&mut self, mask: u64, c: u64) {
        let cur = self.terms.remove(&mask).unwrap_or(0);
        let next = (cur + c % self.p) % self.p;
        if next != 0 {
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

    pub fn evaluate_mask(&self, x: u64) -> u64 {
        let mut acc: u64 = 0;
        for (mask, c) in &self.terms {
            if mask & !x == 0 {
                acc = (acc + c) % self.p;
            }
        }
        acc
    }

    /// Multilinear product: `x_S * x_T = x_{S ∪ T}` on `{0,1}^n`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.p != other.p || self.n != other.n {
            return Err(CoreError::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut out = Self::zero(self.p, self.n)?;
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma | mb, (ca * cb) % self.p);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut out = Self::from_terms(self.p, self.n, [(0, 1)])?;
        for _ in 0..e {
            out = out.multiply(self)?;
        }
        Ok(out)
    }

    /// True iff the polynomial only takes values 0 and 1 on `{0,1}^n`.
    pub fn range_is_boolean(&self) -> bool {
        (0..(1u64 << self.n)).all(|x| self.evaluate_mask(x) <= 1)
    }

    /// The Boolean function computed by a {0,1}-valued polynomial.
    pub fn truth_table(&self) -> Result<BooleanFunction> {
        let mut out = BooleanFunction::zeros(self.n)?;
        for x in 0..(1u64 << self.n) {
            match self.evaluate_mask(x) {
                0 => {}
                1 => out.set(x, true),
                v => {
                    return Err(CoreError::Malformed(format!(
                        "polynomial takes value {v} (not 0/1) at x = {x:#b}"
                    )))
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(499));
        assert!(!is_prime(1));
        assert!(!is_prime(6));
        assert!(!is_prime(361));
    }

    #[test]
    fn non_prime_modulus_rejected() {
        assert!(FieldPolynomial::zero(6, 2).is_err());
    }

    #[test]
    fn parity_over_f2() {
        let f = FieldPolynomial::from_terms(2, 3, [(0b001, 1), (0b010, 1), (0b100, 1)]).unwrap();
        for x in 0..8u64 {
            assert_eq!(f.evaluate_mask(x), x.count_ones() as u64 % 2);
        }
        assert!(f.range_is_boolean());
        assert_eq!(f.degree(), 1);
    }

    #[test]
    fn multiply_is_multilinear() {
        let f = FieldPolynomial::from_terms(3, 2, [(0b01, 1), (0b10, 1)]).unwrap();
        let sq = f.multiply(&f).unwrap();
        // (x1 + x2)^2 -> x1 + x2 + 2 x1 x2 over F_3
        assert_eq!(sq.terms().collect::<Vec<_>>(), vec![(0b01, 1), (0b10, 1), (0b11, 2)]);
        assert!(sq.range_is_boolean());
    }
}
