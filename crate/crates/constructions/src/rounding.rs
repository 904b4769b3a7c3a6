//! Dyadic rounding of multilinear torus polynomials into nonclassical form.
//!
//! Every non-constant coefficient is truncated to its first `t + 1` binary
//! digits; the constant term moves into the nonclassical shift unchanged. The
//! stored keys `(S, k)` satisfy `|S| + k <= t + d` where `d = deg(P)`, and
//! the sup-norm error is at most `(number of monomials) * 2^(-t)`, itself
//! bounded by `binomial_sum(n, d) * 2^(-t)`.

use crate::error::{ConstructionError, Result};
use num_integer::Integer;
use torus_core::poly::nonclassical::NonclassicalPolynomial;
use torus_core::MultilinearTorusPolynomial;

pub fn nonclassical_round(
    p: &MultilinearTorusPolynomial,
    t: u32,
) -> Result<NonclassicalPolynomial> {
    if t < 1 {
        return Err(ConstructionError::InvalidDistribution(
            "rounding precision t must be >= 1".into(),
        ));
    }
    let d = p.degree();
    let (shift, rest) = p.split_constant();
    let mut bits = Vec::new();
    for (mask, c) in rest.terms() {
        // digits of c in [0,1): bit k is floor(c * 2^(k+1)) mod 2
        let mut num = c.value().numer().clone();
        let den = c.value().denom();
        for k in 0..=t {
            num <<= 1;
            let (q, r) = num.div_rem(den);
            if q.is_odd() {
                bits.push((mask, k));
            }
            num = r;
        }
    }
    Ok(NonclassicalPolynomial::new(p.n(), shift, t as usize + d, bits)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use torus_core::approx::sup_distance_nonclassical;
    use torus_core::poly::integer::binomial_sum;
    use torus_core::rational::{parse_rational, Rational};

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn one_third_truncates_to_five_sixteenths() {
        // 1/3 = 0.010101...₂; first 5 digits (t = 4) give 0.01010₂ = 5/16
        let p = MultilinearTorusPolynomial::from_terms(1, [(0b1, r("1/3"))]).unwrap();
        let q = nonclassical_round(&p, 4).unwrap();
        assert_eq!(q.bits().collect::<Vec<_>>(), vec![(0b1, 1), (0b1, 3)]);
        assert_eq!(q.evaluate_mask(0b1).value(), &r("5/16"));
    }

    #[test]
    fn dyadic_input_is_exact() {
        let p = MultilinearTorusPolynomial::from_terms(
            3,
            [(0, r("1/3")), (0b001, r("5/8")), (0b111, r("1/2"))],
        )
        .unwrap();
        let q = nonclassical_round(&p, 4).unwrap();
        assert_eq!(sup_distance_nonclassical(&p, &q).unwrap(), r("0"));
        assert_eq!(q.shift().value(), &r("1/3")); // shift is not truncated
    }

    #[test]
    fn error_bound_exhaustive() {
        // awkward thirds and sevenths; bound is binomial_sum(n, d) * 2^(-t)
        let p = MultilinearTorusPolynomial::from_terms(
            4,
            [(0b0001, r("1/3")), (0b0110, r("2/7")), (0b1011, r("6/7")), (0b1111, r("1/5"))],
        )
        .unwrap();
        for t in 1..=8u32 {
            let q = nonclassical_round(&p, t).unwrap();
            let bound = Rational::new(
                binomial_sum(4, p.degree() as u64),
                num_bigint::BigInt::from(1u64) << t,
            );
            let dist = sup_distance_nonclassical(&p, &q).unwrap();
            assert!(dist <= bound, "t = {t}: {dist} > {bound}");
            assert!(q.attained_degree() <= t as usize + p.degree());
        }
    }

    #[test]
    fn zero_precision_rejected() {
        let p = MultilinearTorusPolynomial::zero(2);
        assert!(nonclassical_round(&p, 0).is_err());
    }
}
