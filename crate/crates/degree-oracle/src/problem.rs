//! Problem statements for the exact degree oracle.

use crate::error::{OracleError, Result};
use num_traits::{One, Signed};
use torus_core::boolean::{BooleanFunction, SymmetricProfile};
use torus_core::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// powers of the Hamming weight; constraint points are the weights
    SymmetricPower,
    /// subset monomials; constraint points are all of `{0,1}^n`
    MultilinearSubset,
}

#[derive(Debug, Clone)]
pub enum Target {
    Table(BooleanFunction),
    Profile(SymmetricProfile),
}

impl Target {
    pub fn n(&self) -> usize {
        match self {
            Target::Table(f) => f.n(),
            Target::Profile(p) => p.n(),
        }
    }
}

/// Search caps; the oracle is exponential by design and refuses larger
/// instances instead of silently approximating.
#[derive(Debug, Clone, Copy)]
pub struct OracleCaps {
    pub max_symmetric_n: usize,
    pub max_symmetric_d: usize,
    pub max_multilinear_n: usize,
    pub max_multilinear_d: usize,
    /// branch-node budget; exceeding it aborts with SizeLimitExceeded
    /// rather than guessing
    pub max_branch_nodes: u64,
    /// cap on admissible offsets for a single branching point
    pub max_offsets_per_point: u64,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            max_symmetric_n: 16,
            max_symmetric_d: 4,
            max_multilinear_n: 4,
            max_multilinear_d: 3,
            max_branch_nodes: 5_000_000,
            max_offsets_per_point: 100_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ApproximationProblem {
    pub target: Target,
    pub alpha: Rational,
    pub eps: Rational,
    pub degree: usize,
    pub basis: Basis,
}

impl ApproximationProblem {
    pub fn new(
        target: Target,
        alpha: Rational,
        eps: Rational,
        degree: usize,
        basis: Basis,
    ) -> Result<Self> {
        if eps.is_negative() {
            return Err(OracleError::InvalidProblem(format!(
                "eps must be >= 0, got {eps}"
            )));
        }
        if alpha.is_negative() || alpha > Rational::one() {
            return Err(OracleError::InvalidProblem(format!(
                "alpha must lie in [0, 1], got {alpha}"
            )));
        }
        if basis == Basis::SymmetricPower && matches!(target, Target::Table(_)) {
            return Err(OracleError::InvalidProblem(
                "the symmetric-power basis requires a symmetric profile target".into(),
            ));
        }
        Ok(ApproximationProblem {
            target,
            alpha,
            eps,
            degree,
            basis,
        })
    }

    pub fn n(&self) -> usize {
        self.target.n()
    }

    pub fn check_caps(&self, caps: &OracleCaps) -> Result<()> {
        let (n, d) = (self.n(), self.degree);
        let ok = match self.basis {
            Basis::SymmetricPower => n <= caps.max_symmetric_n && d <= caps.max_symmetric_d,
            Basis::MultilinearSubset => n <= caps.max_multilinear_n && d <= caps.max_multilinear_d,
        };
        if ok {
            Ok(())
        } else {
            Err(OracleError::SizeLimitExceeded(format!(
                "n = {n}, degree = {d} with basis {:?}",
                self.basis
            )))
        }
    }

    /// Torus target `alpha * f` at a constraint point (a weight for the
    /// symmetric basis, a mask for the multilinear one).
    pub fn target_at(&self, point: u64) -> Rational {
        let bit = match (&self.target, self.basis) {
            (Target::Profile(p), Basis::SymmetricPower) => p.get(point as usize),
            (Target::Profile(p), Basis::MultilinearSubset) => {
                p.get(point.count_ones() as usize)
            }
            (Target::Table(f), Basis::MultilinearSubset) => f.get(point),
            (Target::Table(_), Basis::SymmetricPower) => unreachable!("rejected at construction"),
        };
        if bit {
            self.alpha.clone()
        } else {
            Rational::from_integer(0.into())
        }
    }

    /// All constraint points for this basis.
    pub fn points(&self) -> Vec<u64> {
        match self.basis {
            Basis::SymmetricPower => (0..=self.n() as u64).collect(),
            Basis::MultilinearSubset => (0..(1u64 << self.n())).collect(),
        }
    }
}
