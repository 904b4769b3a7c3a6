//! Torus values: exact rationals reduced modulo one.
//!
//! `TorusValue` is the quotient ℝ/ℤ restricted to rationals, represented by
//! the unique representative in `[0, 1)`. `iota` maps to the representative
//! in `[-1/2, 1/2)` and the torus norm is its absolute value, so the norm
//! always lies in `[0, 1/2]`.

use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusValue(Rational);

impl TorusValue {
    /// Reduce an arbitrary rational modulo one: `r - floor(r)`, in `[0, 1)`.
    pub fn reduce(r: &Rational) -> Self {
        TorusValue(r - r.floor())
    }

    pub fn zero() -> Self {
        TorusValue(Rational::zero())
    }

    pub fn half() -> Self {
        TorusValue(Rational::new(BigInt::one(), BigInt::from(2)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The representative in `[0, 1)`.
    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_value(self) -> Rational {
        self.0
    }

    /// The unique representative in `[-1/2, 1/2)`.
    pub fn iota(&self) -> Rational {
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        if self.0 < half {
            self.0.clone()
        } else {
            &self.0 - Rational::one()
        }
    }

    /// Distance to zero on the circle: `|iota(z)|`, in `[0, 1/2]`.
    pub fn norm(&self) -> Rational {
        self.iota().abs()
    }
}

/// Free-function spelling of the quotient map, matching the footnote
/// examples: `2.6 mod 1 = 0.6`, `-1.3 mod 1 = 0.7`.
pub fn torus_reduce(r: &Rational) -> TorusValue {
    TorusValue::reduce(r)
}

pub fn iota(z: &TorusValue) -> Rational {
    z.iota()
}

pub fn torus_norm(z: &TorusValue) -> Rational {
    z.norm()
}

impl Add for &TorusValue {
    type Output = TorusValue;
    fn add(self, rhs: &TorusValue) -> TorusValue {
        TorusValue::reduce(&(&self.0 + &rhs.0))
    }
}

impl Sub for &TorusValue {
    type Output = TorusValue;
    fn sub(self, rhs: &TorusValue) -> TorusValue {
        TorusValue::reduce(&(&self.0 - &rhs.0))
    }
}

impl Neg for &TorusValue {
    type Output = TorusValue;
    fn neg(self) -> TorusValue {
        TorusValue::reduce(&(-&self.0))
    }
}

/// Scaling by an integer is well defined on the torus.
impl Mul<&BigInt> for &TorusValue {
    type Output = TorusValue;
    fn mul(self, rhs: &BigInt) -> TorusValue {
        TorusValue::reduce(&(&self.0 * Rational::from_integer(rhs.clone())))
    }
}

impl From<Rational> for TorusValue {
    fn from(r: Rational) -> Self {
        TorusValue::reduce(&r)
    }
}

impl fmt::Display for TorusValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(torus_reduce(&r("13/5")).value(), &r("3/5"));
        assert_eq!(torus_reduce(&r("-13/10")).value(), &r("7/10"));
        assert_eq!(torus_reduce(&r("0")).value(), &r("0"));
    }

    #[test]
    fn iota_examples() {
        assert_eq!(iota(&torus_reduce(&r("2/5"))), r("2/5"));
        assert_eq!(iota(&torus_reduce(&r("7/10"))), r("-3/10"));
        assert_eq!(iota(&torus_reduce(&r("1/2"))), r("-1/2"));
    }

    #[test]
    fn norm_examples() {
        assert_eq!(torus_norm(&torus_reduce(&r("7/10"))), r("3/10"));
        assert_eq!(torus_norm(&torus_reduce(&r("0"))), r("0"));
        assert_eq!(torus_norm(&torus_reduce(&r("1/2"))), r("1/2"));
    }
}
