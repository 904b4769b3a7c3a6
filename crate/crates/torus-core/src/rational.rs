//! Parsing and rendering of exact rationals.
//!
//! Rationals are always serialized as canonical `"num/den"` strings with
//! `den >= 1` and `gcd(|num|, den) = 1`; `num-rational` keeps that invariant
//! for us. Floating-point literals are rejected everywhere.

use crate::error::{CoreError, Result};
use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Parse `"num/den"` or a plain integer string into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || CoreError::ParseRational(s.to_string());
    if s.contains(['.', 'e', 'E']) {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() || den.sign() == Sign::Minus {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(num))
        }
    }
}

/// Canonical `"num/den"` rendering (denominator always present).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal rendering with the given number of significant digits, for human
/// scanning only; the exact form is authoritative.
pub fn decimal_approx(r: &Rational, sig_digits: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.abs();
    let num = a.numer().clone();
    let den = a.denom().clone();
    // exponent e such that 10^(e-1) <= a < 10^e
    let mut e: i64 = (num.to_string().len() as i64) - (den.to_string().len() as i64) + 1;
    let pow10 = |k: i64| -> (BigInt, BigInt) {
        // returns multiplier for (num, den) implementing a * 10^k
        if k >= 0 {
            (BigInt::from(10u32).pow(k as u32), BigInt::from(1u32))
        } else {
            (BigInt::from(1u32), BigInt::from(10u32).pow((-k) as u32))
        }
    };
    let ge_one = |e: i64| {
        let (mn, md) = pow10(1 - e);
        &num * mn >= &den * md
    };
    while !ge_one(e) {
        e -= 1;
    }
    while ge_one(e + 1) {
        e += 1;
    }
    // round(a * 10^(sig - e)) gives sig digits
    let shift = sig_digits as i64 - e;
    let (mn, md) = pow10(shift);
    let scaled_num = &num * mn * 2u32 + &den * &md; // round half away from zero
    let digits = (scaled_num / (&den * md * 2u32)).to_string();
    let digits = if digits.len() > sig_digits {
        // rounding overflowed to an extra digit, e.g. 999.9 -> 1000
        e += 1;
        digits
    } else {
        digits
    };
    let mantissa = format!("{}.{}", &digits[..1], &digits[1..]);
    let sign = if neg { "-" } else { "" };
    if e <= 0 && e > -4 {
        let zeros = "0".repeat((-e) as usize);
        return format!("{sign}0.{zeros}{digits}");
    }
    if (1..=sig_digits as i64).contains(&e) {
        // render without exponent when the decimal point lands inside
        let d = digits.as_bytes();
        let int_part = String::from_utf8_lossy(&d[..e as usize]);
        let frac_part = String::from_utf8_lossy(&d[e as usize..]);
        if frac_part.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    } else {
        format!("{sign}{mantissa}e{}", e - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        let r = parse_rational("-13/10").unwrap();
        assert_eq!(format_rational(&r), "-13/10");
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2/1");
        assert_eq!(format_rational(&parse_rational("7").unwrap()), "7/1");
    }

    #[test]
    fn parse_rejects_floats_and_zero_den() {
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1e-3").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_approx(&parse_rational("1/3").unwrap(), 12), "0.333333333333");
        assert_eq!(decimal_approx(&parse_rational("1/2").unwrap(), 12), "0.500000000000");
        assert_eq!(decimal_approx(&parse_rational("-13/10").unwrap(), 3), "-1.30");
        assert_eq!(decimal_approx(&parse_rational("1000/1").unwrap(), 3), "1.00e3");
        assert_eq!(decimal_approx(&parse_rational("0").unwrap(), 12), "0");
    }
}
