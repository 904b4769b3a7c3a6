//! Reducing majority approximators to delta approximators.
//!
//! Fixing a constant block of `n - w + 1` ones in a symmetric approximator of
//! `Maj_{2n+1}` leaves a symmetric polynomial on `n` variables approximating
//! the threshold indicator `[|x| >= w]` with the same error; differencing two
//! adjacent thresholds yields the delta indicator `[|x| = w]` at twice the
//! error.

use crate::error::{ConstructionError, Result};
use torus_core::SymmetricTorusPolynomial;

/// Both intermediate threshold approximators and the final delta.
#[derive(Debug, Clone)]
pub struct MajorityReduction {
    /// approximates `[|x| >= w]`; same error as the majority input
    pub at_least: SymmetricTorusPolynomial,
    /// approximates `[|x| >= w + 1]`
    pub at_least_next: SymmetricTorusPolynomial,
    /// `at_least - at_least_next`, approximates `[|x| = w]` at twice the error
    pub delta: SymmetricTorusPolynomial,
}

pub fn majority_to_delta(
    q: &SymmetricTorusPolynomial,
    n: usize,
    w: usize,
) -> Result<MajorityReduction> {
    if q.n() != 2 * n + 1 {
        return Err(torus_core::CoreError::DimensionMismatch {
            expected: 2 * n + 1,
            got: q.n(),
        }
        .into());
    }
    if w > n {
        return Err(ConstructionError::WeightOutOfRange { w, n });
    }
    // |x| + (n - w + 1) ones >= n + 1  <=>  |x| >= w
    let at_least = q.shift_weight(n, (n - w + 1) as u64);
    let at_least_next = q.shift_weight(n, (n - w) as u64);
    let delta = at_least.sub(&at_least_next)?;
    Ok(MajorityReduction {
        at_least,
        at_least_next,
        delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use torus_core::approx::{approx_error_profile, half};
    use torus_core::boolean::SymmetricProfile;
    use torus_core::rational::{parse_rational, Rational};

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    /// Exact symmetric interpolant of `Maj_{2n+1} / 2` over weights 0..=2n+1.
    fn exact_majority_half(n: usize) -> SymmetricTorusPolynomial {
        let m = 2 * n + 1;
        // Lagrange interpolation of g(w) = [w >= n+1] / 2 at w = 0..m
        let points: Vec<(Rational, Rational)> = (0..=m)
            .map(|w| {
                let val = if w >= n + 1 { half() } else { Rational::from_integer(0.into()) };
                (Rational::from_integer((w as i64).into()), val)
            })
            .collect();
        let mut coeffs = vec![Rational::from_integer(0.into()); m + 1];
        for (i, (xi, yi)) in points.iter().enumerate() {
            // basis polynomial for node i, coefficients by ascending power
            let mut basis = vec![Rational::from_integer(1.into())];
            let mut denom = Rational::from_integer(1.into());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                denom *= xi - xj;
                let mut next = vec![Rational::from_integer(0.into()); basis.len() + 1];
                for (k, b) in basis.iter().enumerate() {
                    next[k] -= b * xj;
                    next[k + 1] += b;
                }
                basis = next;
            }
            let scale = yi / denom;
            for (k, b) in basis.iter().enumerate() {
                coeffs[k] += b * &scale;
            }
        }
        SymmetricTorusPolynomial::from_coeffs(m, coeffs)
    }

    #[test]
    fn thresholds_equal_shifted_majority() {
        // Delta_{>=w}(x) = Maj_{2n+1}(x, c) with n - w + 1 ones in c
        for n in 1..=5usize {
            let q = exact_majority_half(n);
            assert_eq!(approx_error_profile(&q, &SymmetricProfile::majority(2 * n + 1), &half()).unwrap(), r("0"));
            for w in 0..=n {
                let red = majority_to_delta(&q, n, w).unwrap();
                let ge = SymmetricProfile::delta_at_least(n, w).unwrap();
                let dw = SymmetricProfile::delta(n, w).unwrap();
                assert_eq!(approx_error_profile(&red.at_least, &ge, &half()).unwrap(), r("0"));
                assert_eq!(approx_error_profile(&red.delta, &dw, &half()).unwrap(), r("0"));
            }
        }
    }

    #[test]
    fn degree_never_grows() {
        let q = exact_majority_half(3);
        for w in 0..=3 {
            let red = majority_to_delta(&q, 3, w).unwrap();
            assert!(red.at_least.degree() <= q.degree());
            assert!(red.delta.degree() <= q.degree());
        }
    }

    #[test]
    fn approximate_input_doubles_error() {
        // perturb the exact majority interpolant by 1/64 on the constant term
        let n = 3;
        let q = exact_majority_half(n)
            .add(&SymmetricTorusPolynomial::from_coeffs(2 * n + 1, [r("1/64")]))
            .unwrap();
        let delta_in = approx_error_profile(&q, &SymmetricProfile::majority(2 * n + 1), &half()).unwrap();
        for w in 0..=n {
            let red = majority_to_delta(&q, n, w).unwrap();
            let ge_err = approx_error_profile(&red.at_least, &SymmetricProfile::delta_at_least(n, w).unwrap(), &half()).unwrap();
            let dw_err = approx_error_profile(&red.delta, &SymmetricProfile::delta(n, w).unwrap(), &half()).unwrap();
            assert!(ge_err <= delta_in);
            assert!(dw_err <= r("2") * &delta_in);
        }
    }

    #[test]
    fn bad_inputs_rejected() {
        let q = SymmetricTorusPolynomial::zero(7);
        assert!(majority_to_delta(&q, 3, 4).is_err()); // w > n
        assert!(majority_to_delta(&q, 2, 1).is_err()); // wrong variable count
    }
}
