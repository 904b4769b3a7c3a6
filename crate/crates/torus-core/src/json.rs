//! Canonical JSON file formats for polynomials and Boolean functions.
//!
//! Polynomials: `{"kind": "multilinear"|"symmetric"|"field"|"integer"|"nonclassical",
//! "n": int, "p": int (field only), "terms": [...]}` where subset-basis terms
//! are `{"vars": [1-based sorted ints], "coeff": "num/den"}` and power-basis
//! terms (symmetric, univariate integer) are `{"power": int, "coeff": ...}`.
//! Boolean functions: `{"kind": "table", "n": int, "hex": str}` or
//! `{"kind": "profile", "n": int, "bits": "010..."}`.
//!
//! Keys are emitted sorted (serde_json's default map), so writing the same
//! object twice produces byte-identical files.

use crate::boolean::{BooleanFunction, SymmetricProfile};
use crate::error::{CoreError, Result};
use crate::poly::field::FieldPolynomial;
use crate::poly::integer::{IntegerPolynomial, UnivariateIntPolynomial};
use crate::poly::multilinear::MultilinearTorusPolynomial;
use crate::poly::nonclassical::NonclassicalPolynomial;
use crate::poly::symmetric::SymmetricTorusPolynomial;
use crate::rational::{format_rational, parse_rational};
use crate::torus::TorusValue;
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone)]
pub enum PolyFile {
    Multilinear(MultilinearTorusPolynomial),
    Symmetric(SymmetricTorusPolynomial),
    Field(FieldPolynomial),
    Integer(IntegerPolynomial),
    IntegerUnivariate(UnivariateIntPolynomial),
    Nonclassical(NonclassicalPolynomial),
}

#[derive(Debug, Clone)]
pub enum FunctionFile {
    Table(BooleanFunction),
    Profile(SymmetricProfile),
}

pub fn mask_to_vars(mask: u64) -> Vec<u64> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

pub fn vars_to_mask(vars: &[u64], n: usize) -> Result<u64> {
    let mut mask = 0u64;
    for v in vars {
        if *v < 1 || *v as usize > n {
            return Err(CoreError::Malformed(format!(
                "variable index {v} out of range 1..={n}"
            )));
        }
        mask |= 1 << (v - 1);
    }
    Ok(mask)
}

pub fn poly_to_json(p: &PolyFile) -> Value {
    match p {
        PolyFile::Multilinear(p) => {
            let terms: Vec<Value> = p
                .terms()
                .map(|(m, c)| json!({"vars": mask_to_vars(m), "coeff": format_rational(c.value())}))
                .collect();
            json!({"kind": "multilinear", "n": p.n(), "terms": terms})
        }
        PolyFile::Symmetric(q) => {
            let terms: Vec<Value> = q
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| json!({"power": j, "coeff": format_rational(c.value())}))
                .collect();
            json!({"kind": "symmetric", "n": q.n(), "terms": terms})
        }
        PolyFile::Field(f) => {
            let terms: Vec<Value> = f
                .terms()
                .map(|(m, c)| json!({"vars": mask_to_vars(m), "coeff": c.to_string()}))
                .collect();
            json!({"kind": "field", "n": f.n(), "p": f.p(), "terms": terms})
        }
        PolyFile::Integer(f) => {
            let terms: Vec<Value> = f
                .terms()
                .map(|(m, c)| json!({"vars": mask_to_vars(m), "coeff": c.to_string()}))
                .collect();
            json!({"kind": "integer", "n": f.n(), "terms": terms})
        }
        PolyFile::IntegerUnivariate(f) => {
            let terms: Vec<Value> = f
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(j, c)| json!({"power": j, "coeff": c.to_string()}))
                .collect();
            json!({"kind": "integer", "n": 1, "terms": terms})
        }
        PolyFile::Nonclassical(q) => {
            let terms: Vec<Value> = q
                .bits()
                .map(|(m, k)| json!({"vars": mask_to_vars(m), "k": k, "bit": 1}))
                .collect();
            json!({
                "kind": "nonclassical",
                "n": q.n(),
                "degree": q.degree_bound(),
                "shift": format_rational(q.shift().value()),
                "terms": terms
            })
        }
    }
}

fn obj<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| CoreError::Malformed(format!("{what}: expected JSON object")))
}

fn get<'a>(m: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    m.get(key)
        .ok_or_else(|| CoreError::Malformed(format!("missing field `{key}`")))
}

fn get_usize(m: &Map<String, Value>, key: &str) -> Result<usize> {
    get(m, key)?
        .as_u64()
        .map(|v| v as usize)
        .ok_or_else(|| CoreError::Malformed(format!("field `{key}` must be a non-negative integer")))
}

fn get_str<'a>(m: &'a Map<String, Value>, key: &str) -> Result<&'a str> {
    get(m, key)?
        .as_str()
        .ok_or_else(|| CoreError::Malformed(format!("field `{key}` must be a string")))
}

fn term_vars(t: &Map<String, Value>, n: usize) -> Result<u64> {
    let vars = get(t, "vars")?
        .as_array()
        .ok_or_else(|| CoreError::Malformed("`vars` must be an array".into()))?;
    let vars: Vec<u64> = vars
        .iter()
        .map(|v| {
            v.as_u64()
                .ok_or_else(|| CoreError::Malformed("`vars` entries must be integers".into()))
        })
        .collect::<Result<_>>()?;
    vars_to_mask(&vars, n)
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    s.trim()
        .parse()
        .map_err(|_| CoreError::Malformed(format!("bad integer literal `{s}`")))
}

pub fn poly_from_json(v: &Value) -> Result<PolyFile> {
    let m = obj(v, "polynomial")?;
    let kind = get_str(m, "kind")?;
    let n = get_usize(m, "n")?;
    let terms = get(m, "terms")?
        .as_array()
        .ok_or_else(|| CoreError::Malformed("`terms` must be an array".into()))?;
    match kind {
        "multilinear" => {
            let mut parsed = Vec::new();
            for t in terms {
                let t = obj(t, "term")?;
                parsed.push((term_vars(t, n)?, parse_rational(get_str(t, "coeff")?)?));
            }
            Ok(PolyFile::Multilinear(MultilinearTorusPolynomial::from_terms(n, parsed)?))
        }
        "symmetric" => {
            let mut coeffs = vec![];
            for t in terms {
                let t = obj(t, "term")?;
                let j = get_usize(t, "power")?;
                if coeffs.len() <= j {
                    coeffs.resize(j + 1, crate::rational::Rational::from_integer(0.into()));
                }
                coeffs[j] = parse_rational(get_str(t, "coeff")?)?;
            }
            Ok(PolyFile::Symmetric(SymmetricTorusPolynomial::from_coeffs(n, coeffs)))
        }
        "field" => {
            let p = get(m, "p")?
                .as_u64()
                .ok_or_else(|| CoreError::Malformed("field `p` must be an integer".into()))?;
            let mut parsed = Vec::new();
            for t in terms {
                let t = obj(t, "term")?;
                let c: u64 = get_str(t, "coeff")?
                    .trim()
                    .parse()
                    .map_err(|_| CoreError::Malformed("bad residue literal".into()))?;
                parsed.push((term_vars(t, n)?, c));
            }
            Ok(PolyFile::Field(FieldPolynomial::from_terms(p, n, parsed)?))
        }
        "integer" => {
            let univariate = terms
                .iter()
                .all(|t| t.as_object().is_some_and(|t| t.contains_key("power")));
            if n == 1 && univariate {
                let mut coeffs: Vec<BigInt> = vec![];
                for t in terms {
                    let t = obj(t, "term")?;
                    let j = get_usize(t, "power")?;
                    if coeffs.len() <= j {
                        coeffs.resize(j + 1, BigInt::from(0));
                    }
                    coeffs[j] = parse_bigint(get_str(t, "coeff")?)?;
                }
                Ok(PolyFile::IntegerUnivariate(UnivariateIntPolynomial::new(coeffs)))
            } else {
                let mut parsed = Vec::new();
                for t in terms {
                    let t = obj(t, "term")?;
                    parsed.push((term_vars(t, n)?, parse_bigint(get_str(t, "coeff")?)?));
                }
                Ok(PolyFile::Integer(IntegerPolynomial::from_terms(n, parsed)?))
            }
        }
        "nonclassical" => {
            let degree = get_usize(m, "degree")?;
            let shift = TorusValue::reduce(&parse_rational(get_str(m, "shift")?)?);
            let mut bits = Vec::new();
            for t in terms {
                let t = obj(t, "term")?;
                let bit = get_usize(t, "bit")?;
                if bit == 0 {
                    continue;
                }
                if bit != 1 {
                    return Err(CoreError::Malformed("`bit` must be 0 or 1".into()));
                }
                bits.push((term_vars(t, n)?, get_usize(t, "k")? as u32));
            }
            Ok(PolyFile::Nonclassical(NonclassicalPolynomial::new(n, shift, degree, bits)?))
        }
        other => Err(CoreError::Malformed(format!("unknown polynomial kind `{other}`"))),
    }
}

pub fn function_to_json(f: &FunctionFile) -> Value {
    match f {
        FunctionFile::Table(t) => json!({"kind": "table", "n": t.n(), "hex": t.to_hex()}),
        FunctionFile::Profile(p) => {
            let bits: String = p.bits().iter().map(|b| if *b { '1' } else { '0' }).collect();
            json!({"kind": "profile", "n": p.n(), "bits": bits})
        }
    }
}

pub fn function_from_json(v: &Value) -> Result<FunctionFile> {
    let m = obj(v, "function")?;
    let n = get_usize(m, "n")?;
    match get_str(m, "kind")? {
        "table" => Ok(FunctionFile::Table(BooleanFunction::from_hex(n, get_str(m, "hex")?)?)),
        "profile" => {
            let bits = get_str(m, "bits")?;
            let bits: Vec<bool> = bits
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(CoreError::Malformed(format!("bad profile bit `{other}`"))),
                })
                .collect::<Result<_>>()?;
            Ok(FunctionFile::Profile(SymmetricProfile::new(n, bits)?))
        }
        other => Err(CoreError::Malformed(format!("unknown function kind `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;

    #[test]
    fn multilinear_roundtrip_canonical() {
        let p = MultilinearTorusPolynomial::from_terms(
            3,
            [(0b101, parse_rational("1/3").unwrap()), (0, parse_rational("5/7").unwrap())],
        )
        .unwrap();
        let v = poly_to_json(&PolyFile::Multilinear(p.clone()));
        let s1 = serde_json::to_string(&v).unwrap();
        let back = poly_from_json(&v).unwrap();
        let v2 = poly_to_json(&back);
        assert_eq!(s1, serde_json::to_string(&v2).unwrap());
        match back {
            PolyFile::Multilinear(q) => assert_eq!(p, q),
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn symmetric_and_field_roundtrip() {
        let q = SymmetricTorusPolynomial::from_coeffs(
            4,
            [parse_rational("1/2").unwrap(), parse_rational("2/3").unwrap()],
        );
        let v = poly_to_json(&PolyFile::Symmetric(q.clone()));
        match poly_from_json(&v).unwrap() {
            PolyFile::Symmetric(q2) => assert_eq!(q, q2),
            _ => panic!("wrong kind"),
        }

        let f = FieldPolynomial::from_terms(3, 2, [(0b01, 2), (0b11, 1)]).unwrap();
        let v = poly_to_json(&PolyFile::Field(f.clone()));
        match poly_from_json(&v).unwrap() {
            PolyFile::Field(f2) => assert_eq!(f, f2),
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn univariate_integer_roundtrip() {
        let a = UnivariateIntPolynomial::new(vec![0.into(), 0.into(), 3.into(), (-2).into()]);
        let v = poly_to_json(&PolyFile::IntegerUnivariate(a.clone()));
        match poly_from_json(&v).unwrap() {
            PolyFile::IntegerUnivariate(b) => assert_eq!(a, b),
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn function_roundtrip() {
        let t = BooleanFunction::from_fn(3, |x| x % 3 == 0).unwrap();
        match function_from_json(&function_to_json(&FunctionFile::Table(t.clone()))).unwrap() {
            FunctionFile::Table(t2) => assert_eq!(t, t2),
            _ => panic!("wrong kind"),
        }
        let p = SymmetricProfile::majority(5);
        match function_from_json(&function_to_json(&FunctionFile::Profile(p.clone()))).unwrap() {
            FunctionFile::Profile(p2) => assert_eq!(p, p2),
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn malformed_rejected() {
        assert!(poly_from_json(&serde_json::json!({"kind": "mystery", "n": 1, "terms": []})).is_err());
        assert!(function_from_json(&serde_json::json!({"kind": "table", "n": 2})).is_err());
    }
}
