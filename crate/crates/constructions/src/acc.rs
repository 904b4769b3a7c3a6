//! The bit-certificate lift: an integer polynomial whose k-th output bit
//! computes `f`, padded with zeros on both sides, divided by `2^(k+1)` and
//! read mod 1.

use crate::error::{ConstructionError, Result};
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};
use torus_core::approx::{approx_error_table, half};
use torus_core::json::{
    function_from_json, function_to_json, poly_from_json, poly_to_json, FunctionFile, PolyFile,
};
use torus_core::poly::integer::IntegerPolynomial;
use torus_core::rational::Rational;
use torus_core::{BooleanFunction, CoreError, MultilinearTorusPolynomial};

/// A verified witness that the k-th bit of `poly` computes `f` with `e - 1`
/// zero guard bits on each side: for every `x`,
/// `poly(x) mod 2^(k+e) = f(x) * 2^k + err(x)` with `0 <= err(x) <= 2^(k-e)`.
#[derive(Debug, Clone)]
pub struct AccCertificate {
    poly: IntegerPolynomial,
    k: u32,
    e: u32,
    /// circuit depth the certificate came from; metadata only
    depth: u32,
    f: BooleanFunction,
}

impl AccCertificate {
    /// Build a certificate, checking the bit-structure invariant exhaustively.
    pub fn new(
        poly: IntegerPolynomial,
        k: u32,
        e: u32,
        depth: u32,
        f: BooleanFunction,
    ) -> Result<Self> {
        if e < 1 || k < e {
            return Err(ConstructionError::InvalidCertificate(format!(
                "need k >= e >= 1, got k = {k}, e = {e}"
            )));
        }
        if poly.n() != f.n() {
            return Err(CoreError::DimensionMismatch {
                expected: f.n(),
                got: poly.n(),
            }
            .into());
        }
        let modulus = BigInt::one() << (k + e);
        let step = BigInt::one() << k;
        let err_bound = BigInt::one() << (k - e);
        for x in 0..(1u64 << f.n()) {
            let v = poly.evaluate_mask(x);
            let v = ((v % &modulus) + &modulus) % &modulus;
            let err = if f.get(x) { v - &step } else { v };
            if err < BigInt::from(0) || err > err_bound {
                return Err(ConstructionError::CertificateViolation {
                    x,
                    error: err.to_string(),
                    bound: err_bound.to_string(),
                });
            }
        }
        Ok(AccCertificate { poly, k, e, depth, f })
    }

    pub fn poly(&self) -> &IntegerPolynomial {
        &self.poly
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn f(&self) -> &BooleanFunction {
        &self.f
    }

    pub fn to_json(&self) -> Value {
        json!({
            "F": poly_to_json(&PolyFile::Integer(self.poly.clone())),
            "k": self.k,
            "e": self.e,
            "depth": self.depth,
            "f": function_to_json(&FunctionFile::Table(self.f.clone())),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let m = v
            .as_object()
            .ok_or_else(|| CoreError::Malformed("certificate: expected JSON object".into()))?;
        let field = |key: &str| -> Result<&Value> {
            m.get(key)
                .ok_or_else(|| CoreError::Malformed(format!("missing field `{key}`")).into())
        };
        let int = |key: &str| -> Result<u32> {
            field(key)?
                .as_u64()
                .and_then(|v| u32::try_from(v).ok())
                .ok_or_else(|| {
                    CoreError::Malformed(format!("field `{key}` must be a small integer")).into()
                })
        };
        let poly = match poly_from_json(field("F")?)? {
            PolyFile::Integer(p) => p,
            PolyFile::IntegerUnivariate(p) => {
                // n = 1 integer polynomials parse as univariate; re-read as multilinear
                let mut out = IntegerPolynomial::zero(1);
                for (j, c) in p.coeffs().iter().enumerate() {
                    out.add_term(if j == 0 { 0 } else { 1 }, c);
                }
                out
            }
            _ => {
                return Err(ConstructionError::InvalidCertificate(
                    "field `F` must be an integer polynomial".into(),
                ))
            }
        };
        let f = match function_from_json(field("f")?)? {
            FunctionFile::Table(t) => t,
            FunctionFile::Profile(p) => p.to_table()?,
        };
        Self::new(poly, int("k")?, int("e")?, int("depth")?, f)
    }
}

/// `P(x) = F(x) / 2^(k+1) mod 1`; error at most `2^(-e)` against `f/2`.
pub fn acc_lift(cert: &AccCertificate) -> Result<MultilinearTorusPolynomial> {
    let den = BigInt::one() << (cert.k + 1);
    let mut p = MultilinearTorusPolynomial::zero(cert.poly.n());
    for (mask, c) in cert.poly.terms() {
        p.add_term(mask, &Rational::new(c.clone(), den.clone()));
    }
    let bound = Rational::new(BigInt::one(), BigInt::one() << cert.e);
    let err = approx_error_table(&p, &cert.f, &half())?;
    if err > bound {
        return Err(ConstructionError::GuaranteeFailed(format!(
            "lift error {err} exceeds 2^-e = {bound}"
        )));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use torus_core::rational::parse_rational;

    fn and2() -> BooleanFunction {
        BooleanFunction::from_fn(2, |x| x == 0b11).unwrap()
    }

    #[test]
    fn exact_multiple_gives_zero_error() {
        // F = 2^k * f exactly
        let poly = IntegerPolynomial::from_terms(2, [(0b11, BigInt::from(8))]).unwrap();
        let cert = AccCertificate::new(poly, 3, 3, 2, and2()).unwrap();
        let p = acc_lift(&cert).unwrap();
        assert_eq!(
            approx_error_table(&p, &and2(), &half()).unwrap(),
            parse_rational("0").unwrap()
        );
    }

    #[test]
    fn guarded_error_term_bounded_by_two_pow_minus_e() {
        // F = 8 x1 x2 + 1: E = 1 <= 2^(k-e) = 2
        let poly =
            IntegerPolynomial::from_terms(2, [(0b11, BigInt::from(8)), (0, BigInt::one())]).unwrap();
        let cert = AccCertificate::new(poly, 3, 2, 2, and2()).unwrap();
        let p = acc_lift(&cert).unwrap();
        let err = approx_error_table(&p, &and2(), &half()).unwrap();
        assert!(err <= parse_rational("1/4").unwrap(), "err = {err}");
    }

    #[test]
    fn invariant_violation_rejected() {
        // F = 8 x1 x2 + 3: E = 3 > 2^(k-e) = 2 at x = 00
        let poly =
            IntegerPolynomial::from_terms(2, [(0b11, BigInt::from(8)), (0, BigInt::from(3))])
                .unwrap();
        let err = AccCertificate::new(poly, 3, 2, 2, and2()).unwrap_err();
        assert!(matches!(err, ConstructionError::CertificateViolation { x: 0, .. }));
    }

    #[test]
    fn bad_parameters_rejected() {
        let poly = IntegerPolynomial::zero(2);
        let z = BooleanFunction::zeros(2).unwrap();
        assert!(AccCertificate::new(poly.clone(), 1, 2, 0, z.clone()).is_err()); // k < e
        assert!(AccCertificate::new(poly, 2, 0, 0, z).is_err()); // e < 1
    }

    #[test]
    fn json_roundtrip() {
        let poly =
            IntegerPolynomial::from_terms(2, [(0b11, BigInt::from(8)), (0, BigInt::one())]).unwrap();
        let cert = AccCertificate::new(poly, 3, 2, 4, and2()).unwrap();
        let v = cert.to_json();
        let back = AccCertificate::from_json(&v).unwrap();
        assert_eq!(back.k(), 3);
        assert_eq!(back.e(), 2);
        assert_eq!(back.depth(), 4);
        assert_eq!(back.poly(), cert.poly());
        assert_eq!(serde_json::to_string(&back.to_json()).unwrap(),
                   serde_json::to_string(&v).unwrap());
    }
}
