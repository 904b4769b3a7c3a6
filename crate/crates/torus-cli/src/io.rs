//! File plumbing: reading and writing the canonical JSON formats, plus the
//! distribution envelope used by `compose`.

use crate::error::{CliError, Result};
use constructions::PolynomialDistribution;
use serde_json::Value;
use std::path::Path;
use torus_core::json::{
    function_from_json, poly_from_json, poly_to_json, FunctionFile, PolyFile,
};
use torus_core::rational::parse_rational;
use torus_core::FieldPolynomial;

pub fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{} is not valid JSON: {e}", path.display())))
}

pub fn write_json(path: &Path, v: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(v)
        .map_err(|e| CliError::Usage(format!("serialization failed: {e}")))?;
    text.push('\n');
    std::fs::write(path, text)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

pub fn read_poly(path: &Path) -> Result<PolyFile> {
    poly_from_json(&read_json(path)?)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn read_function(path: &Path) -> Result<FunctionFile> {
    function_from_json(&read_json(path)?)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn write_poly(path: &Path, p: &PolyFile) -> Result<()> {
    write_json(path, &poly_to_json(p))
}

/// Distribution file: `{"kind": "distribution", "entries":
/// [{"poly": <field polynomial>, "weight": "num/den"}, ...]}`.
pub fn distribution_from_json(v: &Value) -> Result<PolynomialDistribution> {
    let bad = |msg: &str| CliError::Usage(format!("distribution file: {msg}"));
    let m = v.as_object().ok_or_else(|| bad("expected a JSON object"))?;
    if m.get("kind").and_then(Value::as_str) != Some("distribution") {
        return Err(bad("`kind` must be \"distribution\""));
    }
    let entries = m
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("`entries` must be an array"))?;
    let mut parsed: Vec<(FieldPolynomial, torus_core::Rational)> = Vec::new();
    for e in entries {
        let e = e.as_object().ok_or_else(|| bad("entries must be objects"))?;
        let poly = e.get("poly").ok_or_else(|| bad("entry missing `poly`"))?;
        let poly = match poly_from_json(poly).map_err(|e| CliError::Usage(e.to_string()))? {
            PolyFile::Field(f) => f,
            _ => return Err(bad("entry polynomials must have kind \"field\"")),
        };
        let weight = e
            .get("weight")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("entry missing `weight` string"))?;
        parsed.push((poly, parse_rational(weight).map_err(|e| CliError::Usage(e.to_string()))?));
    }
    Ok(PolynomialDistribution::new(parsed)?)
}

pub fn read_distribution(path: &Path) -> Result<PolynomialDistribution> {
    distribution_from_json(&read_json(path)?)
}
