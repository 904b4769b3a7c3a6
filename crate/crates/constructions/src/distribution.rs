//! Composing a distribution over exact mod-p polynomials into a single torus
//! approximator.
//!
//! Given a distribution `nu` over {0,1}-valued polynomials such that a random
//! draw agrees with `f` at every fixed point with probability at least
//! `1 - eps`, drawing `m` samples and summing their lifts (each at weight
//! `1/(2m)`) concentrates: the empirical disagreement is checked
//! deterministically rather than trusted, so a returned polynomial always
//! carries a verified `3 * eps` error bound.

use crate::error::{ConstructionError, Result};
use crate::lift::lift_field_polynomial;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use torus_core::approx::{approx_error_table, half};
use torus_core::poly::field::FieldPolynomial;
use torus_core::rational::Rational;
use torus_core::{BooleanFunction, CoreError, MultilinearTorusPolynomial};

#[derive(Debug, Clone)]
pub struct PolynomialDistribution {
    entries: Vec<(FieldPolynomial, Rational)>,
}

impl PolynomialDistribution {
    /// Entries must share `p` and `n`, be {0,1}-valued, and carry positive
    /// probabilities summing to exactly 1.
    pub fn new(entries: Vec<(FieldPolynomial, Rational)>) -> Result<Self> {
        let Some((first, _)) = entries.first() else {
            return Err(ConstructionError::InvalidDistribution("no entries".into()));
        };
        let (p, n) = (first.p(), first.n());
        let mut total = Rational::zero();
        for (f, w) in &entries {
            if f.p() != p || f.n() != n {
                return Err(ConstructionError::InvalidDistribution(
                    "entries disagree on p or n".into(),
                ));
            }
            if w <= &Rational::zero() {
                return Err(ConstructionError::InvalidDistribution(
                    "probabilities must be positive".into(),
                ));
            }
            if !f.range_is_boolean() {
                return Err(ConstructionError::InvalidDistribution(
                    "entry is not {0,1}-valued".into(),
                ));
            }
            total += w;
        }
        if total != Rational::one() {
            return Err(ConstructionError::InvalidDistribution(format!(
                "probabilities sum to {total}, not 1"
            )));
        }
        Ok(PolynomialDistribution { entries })
    }

    pub fn n(&self) -> usize {
        self.entries[0].0.n()
    }

    pub fn p(&self) -> u64 {
        self.entries[0].0.p()
    }

    pub fn entries(&self) -> &[(FieldPolynomial, Rational)] {
        &self.entries
    }

    /// Index of the entry selected by the uniform draw `u / 2^64`.
    fn select(&self, u: u64) -> usize {
        let point = Rational::new(BigInt::from(u), BigInt::one() << 64);
        let mut cum = Rational::zero();
        for (i, (_, w)) in self.entries.iter().enumerate() {
            cum += w;
            if point < cum {
                return i;
            }
        }
        self.entries.len() - 1
    }
}

#[derive(Debug, Clone)]
pub struct ComposeOptions {
    /// number of samples; `None` uses `ceil(4n / eps^2)`
    pub m: Option<usize>,
    pub seed: u64,
    /// resampling budget for the disagreement check
    pub max_attempts: u32,
}

impl Default for ComposeOptions {
    fn default() -> Self {
        ComposeOptions {
            m: None,
            seed: 0,
            max_attempts: 16,
        }
    }
}

fn default_m(n: usize, eps: &Rational) -> usize {
    // ceil(4n / eps^2)
    let v = Rational::from_integer(BigInt::from(4 * n as u64)) / (eps * eps);
    usize::try_from(&v.ceil().to_integer()).unwrap_or(usize::MAX).max(1)
}

/// Draw entry indices for one attempt; stream-keyed so draws are independent
/// of each other and of other attempts.
fn sample_indices(nu: &PolynomialDistribution, seed: u64, attempt: u32, m: usize) -> Vec<usize> {
    (0..m)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(((attempt as u64) << 32) | i as u64);
            nu.select(rng.next_u64())
        })
        .collect()
}

pub fn compose_distribution(
    nu: &PolynomialDistribution,
    f: &BooleanFunction,
    eps: &Rational,
    opts: &ComposeOptions,
) -> Result<MultilinearTorusPolynomial> {
    if eps <= &Rational::zero() {
        return Err(ConstructionError::InvalidEpsilon(eps.to_string()));
    }
    if nu.n() != f.n() {
        return Err(CoreError::DimensionMismatch {
            expected: f.n(),
            got: nu.n(),
        }
        .into());
    }
    if opts.m == Some(0) || opts.max_attempts == 0 {
        return Err(ConstructionError::InvalidDistribution(
            "m and max_attempts must be positive".into(),
        ));
    }
    let n = f.n();
    let m = opts.m.unwrap_or_else(|| default_m(n, eps));

    let tables: Vec<BooleanFunction> = nu
        .entries()
        .iter()
        .map(|(g, _)| g.truth_table())
        .collect::<std::result::Result<_, _>>()?;

    // empirical disagreement threshold 2 * eps * m, compared exactly
    let threshold = Rational::from_integer(BigInt::from(2 * m as u64)) * eps;
    'attempts: for attempt in 0..opts.max_attempts {
        let picks = sample_indices(nu, opts.seed, attempt, m);
        let mut multiplicity = vec![0u64; nu.entries().len()];
        for idx in &picks {
            multiplicity[*idx] += 1;
        }
        for x in 0..(1u64 << n) {
            let disagree: u64 = multiplicity
                .iter()
                .zip(&tables)
                .filter(|(_, t)| t.get(x) != f.get(x))
                .map(|(c, _)| *c)
                .sum();
            if Rational::from_integer(BigInt::from(disagree)) > threshold {
                continue 'attempts;
            }
        }

        // each sample contributes its lift at weight alpha = 1/(2m)
        let alpha = Rational::new(BigInt::one(), BigInt::from(2 * m as u64));
        let eps_lift = eps / Rational::from_integer(BigInt::from(m as u64));
        let mut sum = MultilinearTorusPolynomial::zero(n);
        for (idx, count) in multiplicity.iter().enumerate() {
            if *count == 0 {
                continue;
            }
            let (lifted, _) = lift_field_polynomial(&nu.entries()[idx].0, &alpha, &eps_lift)?;
            sum = sum.add(&lifted.scale(&Rational::from_integer(BigInt::from(*count))))?;
        }

        let bound = Rational::from_integer(3.into()) * eps;
        let err = approx_error_table(&sum, f, &half())?;
        if err > bound {
            return Err(ConstructionError::GuaranteeFailed(format!(
                "composed error {err} exceeds 3*eps = {bound}"
            )));
        }
        return Ok(sum);
    }
    Err(ConstructionError::SamplingFailed {
        attempts: opts.max_attempts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use torus_core::rational::parse_rational;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn parity(n: usize) -> FieldPolynomial {
        FieldPolynomial::from_terms(2, n, (0..n).map(|i| (1u64 << i, 1))).unwrap()
    }

    #[test]
    fn degenerate_distribution_is_deterministic() {
        // all mass on one exact polynomial: disagreement 0, error <= eps
        let n = 3;
        let nu = PolynomialDistribution::new(vec![(parity(n), r("1"))]).unwrap();
        let f = parity(n).truth_table().unwrap();
        let opts = ComposeOptions {
            m: Some(10),
            ..ComposeOptions::default()
        };
        let p = compose_distribution(&nu, &f, &r("1/8"), &opts).unwrap();
        let err = approx_error_table(&p, &f, &half()).unwrap();
        assert!(err <= r("1/8"), "err = {err}");
        // same seed, same output
        let p2 = compose_distribution(&nu, &f, &r("1/8"), &opts).unwrap();
        assert_eq!(p, p2);
    }

    #[test]
    fn noisy_distribution_meets_three_eps() {
        // correct polynomial w.p. 9/10, complemented w.p. 1/10
        let n = 4;
        let correct = parity(n);
        let mut complement = correct.clone();
        complement.add_term(0, 1);
        let nu = PolynomialDistribution::new(vec![
            (correct.clone(), r("9/10")),
            (complement, r("1/10")),
        ])
        .unwrap();
        let f = correct.truth_table().unwrap();
        let opts = ComposeOptions {
            m: Some(200),
            ..ComposeOptions::default()
        };
        let p = compose_distribution(&nu, &f, &r("1/5"), &opts).unwrap();
        let err = approx_error_table(&p, &f, &half()).unwrap();
        assert!(err <= r("3/5"), "err = {err}");
    }

    #[test]
    fn impossible_distribution_fails_sampling() {
        // all mass on the wrong polynomial, tiny eps: check can never pass
        let n = 2;
        let mut wrong = parity(n);
        wrong.add_term(0, 1);
        let nu = PolynomialDistribution::new(vec![(wrong, r("1"))]).unwrap();
        let f = parity(n).truth_table().unwrap();
        let opts = ComposeOptions {
            m: Some(8),
            max_attempts: 3,
            ..ComposeOptions::default()
        };
        let err = compose_distribution(&nu, &f, &r("1/100"), &opts).unwrap_err();
        assert!(matches!(err, ConstructionError::SamplingFailed { attempts: 3 }));
    }

    #[test]
    fn invalid_distributions_rejected() {
        assert!(PolynomialDistribution::new(vec![]).is_err());
        assert!(
            PolynomialDistribution::new(vec![(parity(2), r("1/2"))]).is_err(),
            "probabilities must sum to 1"
        );
        // non-boolean entry: x1 + x2 over F_3 takes value 2
        let bad = FieldPolynomial::from_terms(3, 2, [(0b01, 1), (0b10, 1)]).unwrap();
        assert!(PolynomialDistribution::new(vec![(bad, r("1"))]).is_err());
    }

    #[test]
    fn default_sample_count() {
        assert_eq!(default_m(4, &r("1/5")), 400);
        assert_eq!(default_m(1, &r("1")), 4);
    }
}
