//! Nonclassical polynomials over F_2: a torus shift plus dyadic bit
//! coefficients `c_{S,k} / 2^(k+1)` with `c_{S,k} ∈ {0,1}`, keyed by
//! `(S, k)` with `S ≠ ∅` and `|S| + k <= d`.

use crate::error::{CoreError, Result};
use crate::rational::Rational;
use crate::torus::TorusValue;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonclassicalPolynomial {
    n: usize,
    shift: TorusValue,
    degree_bound: usize,
    /// Keys `(S, k)` whose bit is 1; absent keys are 0.
    bits: BTreeSet<(u64, u32)>,
}

impl NonclassicalPolynomial {
    pub fn new(
        n: usize,
        shift: TorusValue,
        degree_bound: usize,
        bits: impl IntoIterator<Item = (u64, u32)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (mask, k) in bits {
            if mask == 0 {
                return Err(CoreError::Malformed(
                    "nonclassical bit keys must have S != empty".into(),
                ));
            }
            if n < 64 && mask >= (1u64 << n) {
                return Err(CoreError::DimensionMismatch {
                    expected: n,
                    got: 64 - mask.leading_zeros() as usize,
                });
            }
            if mask.count_ones() as usize + k as usize > degree_bound {
                return Err(CoreError::Malformed(format!(
                    "bit key (|S| = {}, k = {k}) violates |S| + k <= {degree_bound}",
                    mask.count_ones()
                )));
            }
            set.insert((mask, k));
        }
        Ok(NonclassicalPolynomial {
            n,
            shift,
            degree_bound,
            bits: set,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shift(&self) -> &TorusValue {
        &self.shift
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn bits(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.bits.iter().copied()
    }

    pub fn num_bits(&self) -> usize {
        self.bits.len()
    }

    pub fn evaluate_mask(&self, x: u64) -> TorusValue {
        let mut acc = self.shift.value().clone();
        for (mask, k) in &self.bits {
            if mask & !x == 0 {
                acc += Rational::new(BigInt::one(), BigInt::from(2u64) << *k);
            }
        }
        TorusValue::reduce(&acc)
    }
}

impl NonclassicalPolynomial {
    /// Max `|S| + k` over stored 1-bits (the attained degree; `degree_bound`
    /// is the declared cap).
    pub fn attained_degree(&self) -> usize {
        self.bits
            .iter()
            .map(|(m, k)| m.count_ones() as usize + *k as usize)
            .max()
            .unwrap_or(0)
    }
}

impl NonclassicalPolynomial {
    pub fn zero(n: usize) -> Self {
        NonclassicalPolynomial {
            n,
            shift: TorusValue::reduce(&Rational::zero()),
            degree_bound: 0,
            bits: BTreeSet::new(),
        }
    }
}
