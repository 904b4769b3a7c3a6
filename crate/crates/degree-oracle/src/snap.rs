//! Snapping symmetric coefficients onto the dyadic grid `q / 2^k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use torus_core::rational::Rational;
use torus_core::SymmetricTorusPolynomial;

/// A symmetric polynomial with coefficients exactly `q[j] / 2^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnappedPolynomial {
    pub n: usize,
    pub k: u32,
    pub q: Vec<BigInt>,
}

impl SnappedPolynomial {
    pub fn to_polynomial(&self) -> SymmetricTorusPolynomial {
        let den = BigInt::one() << self.k;
        SymmetricTorusPolynomial::from_coeffs(
            self.n,
            self.q.iter().map(|q| Rational::new(q.clone(), den.clone())),
        )
    }
}

/// Round `c * 2^k` to the nearest integer, ties to even.
fn round_half_even(c: &Rational, k: u32) -> BigInt {
    let scaled = c * Rational::from_integer(BigInt::one() << k);
    let floor = scaled.floor().to_integer();
    let frac = scaled - Rational::from_integer(floor.clone());
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    if frac > half || (frac == half && floor.is_odd()) {
        floor + 1
    } else {
        floor
    }
}

/// Nearest dyadic-grid polynomial; the sup-norm error over `{0,1}^n` is at
/// most `(d + 1) * n^d / 2^k` for a degree-`d` input.
pub fn snap_coefficients(q: &SymmetricTorusPolynomial, k: u32) -> SnappedPolynomial {
    SnappedPolynomial {
        n: q.n(),
        k,
        q: q.coeffs().iter().map(|c| round_half_even(c.value(), k)).collect(),
    }
}

/// The counting-argument error budget `(d + 1) * n^d / 2^k`.
pub fn snap_error_bound(n: usize, d: usize, k: u32) -> Rational {
    let mut npow = BigInt::one();
    for _ in 0..d {
        npow *= BigInt::from(n as u64);
    }
    Rational::new(BigInt::from(d as u64 + 1) * npow, BigInt::one() << k)
}
