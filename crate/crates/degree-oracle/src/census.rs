//! The counting side of the lower-bound argument: which symmetric functions
//! a given polynomial approximates, and the exact-integer replay of the
//! degree bound that counting forces.

use crate::error::{OracleError, Result};
use num_bigint::BigInt;
use num_traits::One;
use torus_core::approx::half;
use torus_core::boolean::SymmetricProfile;
use torus_core::rational::Rational;
use torus_core::torus::TorusValue;
use torus_core::SymmetricTorusPolynomial;

/// All symmetric functions `f` with `‖Q − f/2 (mod 1)‖∞ ≤ eps`. For
/// `eps < 1/4` the result has at most one element: no torus value is within
/// `eps` of both `0` and `1/2`.
pub fn approximated_functions(
    q: &SymmetricTorusPolynomial,
    eps: &Rational,
) -> Result<Vec<SymmetricProfile>> {
    let n = q.n();
    if n > 24 {
        return Err(OracleError::SizeLimitExceeded(format!(
            "profile enumeration capped at n <= 24, got {n}"
        )));
    }
    // per weight: can the bit be 0, can it be 1?
    let mut choices: Vec<Vec<bool>> = Vec::with_capacity(n + 1);
    for w in 0..=n as u64 {
        let v = q.evaluate_weight(w);
        let mut c = vec![];
        if v.norm() <= *eps {
            c.push(false);
        }
        if TorusValue::reduce(&(v.value() - half())).norm() <= *eps {
            c.push(true);
        }
        if c.is_empty() {
            return Ok(vec![]);
        }
        choices.push(c);
    }
    let mut out: Vec<Vec<bool>> = vec![vec![]];
    for c in &choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                c.iter().map(move |b| {
                    let mut p = prefix.clone();
                    p.push(*b);
                    p
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|bits| SymmetricProfile::new(n, bits).map_err(Into::into))
        .collect()
}

/// Smallest `k` with `2^k >= x` (for `x >= 1`).
fn ceil_log2(x: &BigInt) -> u64 {
    (x - BigInt::one()).bits()
}

/// Exact replay of the counting chain: degree-`d` symmetric polynomials
/// snapped to precision `k(d)` (the smallest `k` with
/// `(d+1) n^d * 20 <= 2^k`) number `2^((k+1)(d+1))`; if that count is below
/// the `2^n` symmetric functions, degree `d` cannot `1/(20n)`-approximate
/// every delta. Returns the first non-excluded degree, i.e. `1 + max
/// excluded d` (`0` when nothing is excluded).
pub fn counting_lower_bound(n: u64) -> u64 {
    assert!(n >= 1, "n must be >= 1");
    let mut npow = BigInt::one(); // n^d
    let mut d: u64 = 0;
    loop {
        let x = BigInt::from(20 * (d + 1)) * &npow;
        let k = ceil_log2(&x);
        // (k + 1)(d + 1) is strictly increasing in d, so the excluded
        // degrees form a prefix and the first non-excluded one is the bound
        if (k + 1) * (d + 1) >= n {
            return d;
        }
        d += 1;
        npow *= BigInt::from(n);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use torus_core::rational::parse_rational;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn parity_polynomial_identified() {
        let q = SymmetricTorusPolynomial::from_coeffs(5, [r("0"), r("1/2")]);
        let fs = approximated_functions(&q, &r("1/10")).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0], SymmetricProfile::parity(5));
    }

    #[test]
    fn zero_polynomial() {
        let q = SymmetricTorusPolynomial::zero(3);
        let fs = approximated_functions(&q, &r("1/10")).unwrap();
        assert_eq!(fs.len(), 1);
        assert!(fs[0].bits().iter().all(|b| !b));
        // at eps = 1/2 every profile qualifies
        let all = approximated_functions(&q, &r("1/2")).unwrap();
        assert_eq!(all.len(), 1 << 4);
    }

    #[test]
    fn near_quarter_approximates_nothing() {
        let q = SymmetricTorusPolynomial::from_coeffs(2, [r("1/4")]);
        assert!(approximated_functions(&q, &r("1/10")).unwrap().is_empty());
    }

    #[test]
    fn uniqueness_below_quarter() {
        // random-ish polynomial: at most one profile at eps < 1/4
        let q = SymmetricTorusPolynomial::from_coeffs(6, [r("1/3"), r("3/7"), r("2/5")]);
        assert!(approximated_functions(&q, &r("1/10")).unwrap().len() <= 1);
    }

    #[test]
    fn ceil_log2_values() {
        assert_eq!(ceil_log2(&BigInt::from(1)), 0);
        assert_eq!(ceil_log2(&BigInt::from(2)), 1);
        assert_eq!(ceil_log2(&BigInt::from(3)), 2);
        assert_eq!(ceil_log2(&BigInt::from(1024)), 10);
        assert_eq!(ceil_log2(&BigInt::from(1025)), 11);
    }

    #[test]
    fn counting_bound_small_and_monotone() {
        assert_eq!(counting_lower_bound(1), 0);
        let mut prev = 0;
        for e in 1..=14 {
            let b = counting_lower_bound(1u64 << e);
            assert!(b >= prev, "bound decreased at n = 2^{e}");
            prev = b;
        }
    }
}
