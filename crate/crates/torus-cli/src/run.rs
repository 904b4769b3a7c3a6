//! One function per subcommand. All output goes to stdout; errors map to
//! exit codes in `error.rs`.

use crate::error::{CliError, Result};
use crate::io;
use constructions::{
    acc_lift, compose_distribution, delta_construction, force_boolean_range,
    lift_field_polynomial, majority_to_delta, modulus_amplifier, nonclassical_round,
    AccCertificate, ComposeOptions,
};
use degree_oracle::{exact_degree, Basis, OracleCaps, Target};
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use torus_core::approx::{
    approx_error_nonclassical, approx_error_profile, approx_error_table, half,
};
use torus_core::json::{mask_to_vars, poly_to_json, FunctionFile, PolyFile};
use torus_core::rational::{decimal_approx, format_rational, parse_rational};
use torus_core::{Rational, SymmetricProfile};

/// Significant digits in the human-readable decimal rendering; the exact
/// rational form is authoritative.
const DECIMAL_DIGITS: usize = 12;

pub fn parse_rat(s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|e| CliError::Usage(e.to_string()))
}

fn show(label: &str, r: &Rational) {
    println!("{label}: {} ({})", format_rational(r), decimal_approx(r, DECIMAL_DIGITS));
}

fn check_bound(what: &str, err: &Rational, bound: &Rational) -> Result<()> {
    if err > bound {
        return Err(CliError::Verification(format!(
            "{what}: error {} exceeds bound {}",
            format_rational(err),
            format_rational(bound)
        )));
    }
    Ok(())
}

fn maybe_write_poly(out: &Option<PathBuf>, p: &PolyFile) -> Result<()> {
    if let Some(path) = out {
        io::write_poly(path, p)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

pub fn construct_delta(n: usize, w: usize, eps: &str, out: &Option<PathBuf>) -> Result<()> {
    let eps = parse_rat(eps)?;
    let q = delta_construction(n, w, &eps)?;
    let target = SymmetricProfile::delta(n, w)?;
    let err = approx_error_profile(&q, &target, &half())?;
    println!("n: {n}");
    println!("w: {w}");
    println!("degree: {}", q.degree());
    show("verified error", &err);
    check_bound("delta construction", &err, &eps)?;
    maybe_write_poly(out, &PolyFile::Symmetric(q))
}

pub fn amplify(k: u32, out: &Option<PathBuf>) -> Result<()> {
    let a = modulus_amplifier(k)?;
    println!("k: {k}");
    println!("degree: {}", a.degree());
    maybe_write_poly(out, &PolyFile::IntegerUnivariate(a))
}

pub fn lift(
    input: &Path,
    alpha: &str,
    eps: &str,
    force_range: bool,
    out: &Option<PathBuf>,
) -> Result<()> {
    let alpha = parse_rat(alpha)?;
    let eps = parse_rat(eps)?;
    let f = match io::read_poly(input)? {
        PolyFile::Field(f) => f,
        other => {
            return Err(CliError::Usage(format!(
                "lift expects a field polynomial, got {}",
                kind_name(&other)
            )))
        }
    };
    let f = if force_range { force_boolean_range(&f)? } else { f };
    let (p, plan) = lift_field_polynomial(&f, &alpha, &eps)?;
    println!("p: {}", plan.p);
    println!("k: {}", plan.k);
    println!("modulus: {}", plan.modulus);
    println!("q: {}", plan.q);
    println!("composition degree: {}", plan.composition_degree);
    println!("multilinear degree: {}", p.degree());
    maybe_write_poly(out, &PolyFile::Multilinear(p))
}

pub fn compose(
    input: &Path,
    function: &Path,
    eps: &str,
    m: Option<usize>,
    seed: u64,
    attempts: u32,
    out: &Option<PathBuf>,
) -> Result<()> {
    let eps = parse_rat(eps)?;
    let nu = io::read_distribution(input)?;
    let f = match io::read_function(function)? {
        FunctionFile::Table(f) => f,
        FunctionFile::Profile(p) => p.to_table()?,
    };
    let opts = ComposeOptions { m, seed, max_attempts: attempts };
    let p = compose_distribution(&nu, &f, &eps, &opts)?;
    let err = approx_error_table(&p, &f, &half())?;
    let bound = Rational::from_integer(3.into()) * &eps;
    println!("degree: {}", p.degree());
    show("verified error", &err);
    show("bound (3 eps)", &bound);
    check_bound("composition", &err, &bound)?;
    maybe_write_poly(out, &PolyFile::Multilinear(p))
}

pub fn round_nonclassical(input: &Path, t: u32, out: &Option<PathBuf>) -> Result<()> {
    let p = match io::read_poly(input)? {
        PolyFile::Multilinear(p) => p,
        other => {
            return Err(CliError::Usage(format!(
                "round-nonclassical expects a multilinear polynomial, got {}",
                kind_name(&other)
            )))
        }
    };
    let q = nonclassical_round(&p, t)?;
    let dist = torus_core::approx::sup_distance_nonclassical(&p, &q)?;
    println!("t: {t}");
    println!("degree bound: {}", q.degree_bound());
    println!("stored bits: {}", q.num_bits());
    show("sup distance to input", &dist);
    maybe_write_poly(out, &PolyFile::Nonclassical(q))
}

pub fn acc_lift_cmd(input: &Path, out: &Option<PathBuf>) -> Result<()> {
    let cert = AccCertificate::from_json(&io::read_json(input)?)?;
    let p = acc_lift(&cert)?;
    let err = approx_error_table(&p, cert.f(), &half())?;
    let bound = Rational::new(BigInt::one(), BigInt::one() << cert.e());
    println!("k: {}", cert.k());
    println!("e: {}", cert.e());
    println!("degree: {}", p.degree());
    show("verified error", &err);
    show("bound (2^-e)", &bound);
    check_bound("acc lift", &err, &bound)?;
    maybe_write_poly(out, &PolyFile::Multilinear(p))
}

pub fn reduce_majority(input: &Path, w: usize, out: &Option<PathBuf>) -> Result<()> {
    let q = match io::read_poly(input)? {
        PolyFile::Symmetric(q) => q,
        other => {
            return Err(CliError::Usage(format!(
                "reduce-majority expects a symmetric polynomial, got {}",
                kind_name(&other)
            )))
        }
    };
    if q.n() % 2 == 0 || q.n() < 3 {
        return Err(CliError::Usage(format!(
            "majority input must be over an odd number of variables >= 3, got {}",
            q.n()
        )));
    }
    let n = (q.n() - 1) / 2;
    let red = majority_to_delta(&q, n, w)?;
    let maj_err = approx_error_profile(&q, &SymmetricProfile::majority(q.n()), &half())?;
    let delta_err =
        approx_error_profile(&red.delta, &SymmetricProfile::delta(n, w)?, &half())?;
    println!("n: {n}");
    println!("w: {w}");
    println!("delta degree: {}", red.delta.degree());
    show("input error vs majority", &maj_err);
    show("delta error", &delta_err);
    let bound = Rational::from_integer(2.into()) * &maj_err;
    check_bound("majority reduction", &delta_err, &bound)?;
    maybe_write_poly(out, &PolyFile::Symmetric(red.delta))
}

fn kind_name(p: &PolyFile) -> &'static str {
    match p {
        PolyFile::Multilinear(_) => "multilinear",
        PolyFile::Symmetric(_) => "symmetric",
        PolyFile::Field(_) => "field",
        PolyFile::Integer(_) | PolyFile::IntegerUnivariate(_) => "integer",
        PolyFile::Nonclassical(_) => "nonclassical",
    }
}

/// Error of a polynomial file against a function file, dispatching on the
/// stored kinds. Dense-table paths are capped at 24 variables.
pub fn error_of(poly: &PolyFile, func: &FunctionFile, alpha: &Rational) -> Result<Rational> {
    let table = |f: &FunctionFile| -> Result<torus_core::BooleanFunction> {
        let t = match f {
            FunctionFile::Table(t) => t.clone(),
            FunctionFile::Profile(p) => {
                if p.n() > 24 {
                    return Err(CliError::SizeLimit(format!(
                        "dense verification over {} variables",
                        p.n()
                    )));
                }
                p.to_table()?
            }
        };
        if t.n() > 24 {
            return Err(CliError::SizeLimit(format!(
                "dense verification over {} variables",
                t.n()
            )));
        }
        Ok(t)
    };
    match (poly, func) {
        (PolyFile::Symmetric(q), FunctionFile::Profile(p)) => {
            Ok(approx_error_profile(q, p, alpha)?)
        }
        (PolyFile::Symmetric(q), FunctionFile::Table(t)) => {
            Ok(approx_error_profile(q, &t.to_profile()?, alpha)?)
        }
        (PolyFile::Multilinear(p), f) => Ok(approx_error_table(p, &table(f)?, alpha)?),
        (PolyFile::Nonclassical(q), f) => Ok(approx_error_nonclassical(q, &table(f)?, alpha)?),
        (other, _) => Err(CliError::Usage(format!(
            "cannot verify a {} polynomial against a Boolean function",
            kind_name(other)
        ))),
    }
}

pub fn verify(poly: &Path, function: &Path, alpha: &str, eps: &Option<String>) -> Result<()> {
    let alpha = parse_rat(alpha)?;
    let p = io::read_poly(poly)?;
    let f = io::read_function(function)?;
    let err = error_of(&p, &f, &alpha)?;
    show("error", &err);
    if let Some(eps) = eps {
        let eps = parse_rat(eps)?;
        check_bound("verify", &err, &eps)?;
        println!("within eps: yes");
    }
    Ok(())
}

fn parse_basis(s: &str) -> Result<Basis> {
    match s {
        "symmetric" => Ok(Basis::SymmetricPower),
        "multilinear" => Ok(Basis::MultilinearSubset),
        other => Err(CliError::Usage(format!(
            "unknown basis `{other}` (expected `symmetric` or `multilinear`)"
        ))),
    }
}

#[allow(clippy::too_many_arguments)]
pub fn degree(
    function: &Path,
    basis: &str,
    alpha: &str,
    eps: &str,
    d_max: Option<usize>,
    max_n: Option<usize>,
    max_d: Option<usize>,
    out: &Option<PathBuf>,
) -> Result<()> {
    let basis = parse_basis(basis)?;
    let alpha = parse_rat(alpha)?;
    let eps = parse_rat(eps)?;
    let target = match io::read_function(function)? {
        FunctionFile::Table(t) => Target::Table(t),
        FunctionFile::Profile(p) => Target::Profile(p),
    };
    let mut caps = OracleCaps::default();
    if let Some(n) = max_n {
        caps.max_symmetric_n = n;
        caps.max_multilinear_n = n;
    }
    if let Some(d) = max_d {
        caps.max_symmetric_d = d;
        caps.max_multilinear_d = d;
    }
    let n = target.n();
    let default_d_max = match basis {
        Basis::SymmetricPower => n.min(caps.max_symmetric_d),
        Basis::MultilinearSubset => n.min(caps.max_multilinear_d),
    };
    let d_max = d_max.unwrap_or(default_d_max);
    let cert = exact_degree(target, alpha, eps, basis, d_max, &caps)?;
    println!("d_min: {}", cert.d_min);
    if let Some(rec) = &cert.infeasibility {
        println!("branches exhausted at degree {}: {}", rec.degree, rec.branches);
    }
    if let Some(path) = out {
        io::write_json(path, &certificate_json(&cert))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn certificate_json(cert: &degree_oracle::DegreeCertificate) -> Value {
    let w = &cert.witness;
    let poly = w
        .to_symmetric()
        .map(|q| poly_to_json(&PolyFile::Symmetric(q)))
        .or_else(|| w.to_multilinear().map(|p| poly_to_json(&PolyFile::Multilinear(p))))
        .unwrap_or(Value::Null);
    let offsets: Vec<Value> = w
        .offsets
        .iter()
        .map(|(x, m)| json!({"point": x, "offset": m.to_string()}))
        .collect();
    let symmetric = w.to_symmetric().is_some();
    let coefficients: Vec<Value> = w
        .coefficients
        .iter()
        .map(|(key, c)| {
            if symmetric {
                json!({"power": key, "coeff": format_rational(c)})
            } else {
                json!({"vars": mask_to_vars(*key), "coeff": format_rational(c)})
            }
        })
        .collect();
    json!({
        "d_min": cert.d_min,
        "witness": poly,
        "coefficients": coefficients,
        "offsets": offsets,
        "infeasible_below": cert.infeasibility.as_ref().map(|rec| json!({
            "degree": rec.degree,
            "eps": format_rational(&rec.eps),
            "branches": rec.branches,
        })),
    })
}

pub fn counting_bound(n: u64) -> Result<()> {
    if n < 1 {
        return Err(CliError::Usage("n must be >= 1".into()));
    }
    println!("{}", degree_oracle::counting_lower_bound(n));
    Ok(())
}
