//! Parameter sweeps over the delta construction, with per-row verification
//! recomputed from the serialized artifact and optional oracle degrees.
//!
//! CSV schema (frozen): `construction,n,w,eps,degree,verified_error,
//! verified_error_decimal,oracle_degree,wall_ms`. The JSON report mirrors
//! the same fields row for row. `oracle_degree` is empty when not computed.

use crate::error::{CliError, Result};
use crate::io;
use constructions::delta_construction;
use degree_oracle::{exact_degree, Basis, OracleCaps, Target};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use torus_core::approx::{approx_error_profile, half};
use torus_core::json::{poly_from_json, poly_to_json, PolyFile};
use torus_core::rational::{decimal_approx, format_rational};
use torus_core::{Rational, SymmetricProfile};

const DECIMAL_DIGITS: usize = 12;

pub struct SweepRow {
    pub n: usize,
    pub w: usize,
    pub eps: Rational,
    pub degree: usize,
    pub verified_error: Rational,
    pub oracle_degree: Option<usize>,
    pub wall_ms: u128,
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad {what} entry `{part}`")))
        })
        .collect()
}

fn parse_eps_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(|part| crate::run::parse_rat(part.trim())).collect()
}

/// Build one row: construct, serialize, re-parse, verify from the re-parsed
/// artifact, and optionally ask the oracle for the exact degree.
fn run_row(n: usize, w: usize, eps: &Rational, oracle: bool) -> Result<SweepRow> {
    let start = std::time::Instant::now();
    let q = delta_construction(n, w, eps)?;
    // round-trip through the file format so the verified number describes
    // the artifact, not the in-memory object
    let artifact = poly_to_json(&PolyFile::Symmetric(q));
    let q = match poly_from_json(&artifact).map_err(|e| CliError::Usage(e.to_string()))? {
        PolyFile::Symmetric(q) => q,
        _ => unreachable!("symmetric serialization is kind-stable"),
    };
    let target = SymmetricProfile::delta(n, w)?;
    let verified_error = approx_error_profile(&q, &target, &half())?;
    if &verified_error > eps {
        return Err(CliError::Verification(format!(
            "delta n={n} w={w} eps={}: recomputed error {} exceeds eps",
            format_rational(eps),
            format_rational(&verified_error)
        )));
    }
    let oracle_degree = if oracle {
        let caps = OracleCaps::default();
        let cert = exact_degree(
            Target::Profile(target),
            half(),
            eps.clone(),
            Basis::SymmetricPower,
            q.degree().min(caps.max_symmetric_d),
            &caps,
        )?;
        Some(cert.d_min)
    } else {
        None
    };
    Ok(SweepRow {
        n,
        w,
        eps: eps.clone(),
        degree: q.degree(),
        verified_error,
        oracle_degree,
        wall_ms: start.elapsed().as_millis(),
    })
}

fn csv_line(row: &SweepRow) -> String {
    format!(
        "delta,{},{},{},{},{},{},{},{}",
        row.n,
        row.w,
        format_rational(&row.eps),
        row.degree,
        format_rational(&row.verified_error),
        decimal_approx(&row.verified_error, DECIMAL_DIGITS),
        row.oracle_degree.map(|d| d.to_string()).unwrap_or_default(),
        row.wall_ms
    )
}

fn json_row(row: &SweepRow) -> Value {
    json!({
        "construction": "delta",
        "n": row.n,
        "w": row.w,
        "eps": format_rational(&row.eps),
        "degree": row.degree,
        "verified_error": format_rational(&row.verified_error),
        "verified_error_decimal": decimal_approx(&row.verified_error, DECIMAL_DIGITS),
        "oracle_degree": row.oracle_degree,
        "wall_ms": row.wall_ms,
    })
}

fn thread_pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("TORUSDEG_MAX_THREADS") {
        let threads: usize = v
            .parse()
            .map_err(|_| CliError::Usage(format!("bad TORUSDEG_MAX_THREADS value `{v}`")))?;
        builder = builder.num_threads(threads.max(1));
    }
    builder
        .build()
        .map_err(|e| CliError::Usage(format!("cannot build thread pool: {e}")))
}

#[allow(clippy::too_many_arguments)]
pub fn sweep(
    n_list: &str,
    w_list: &Option<String>,
    eps_list: &str,
    oracle: bool,
    _seed: u64,
    out_csv: &Option<PathBuf>,
    out_json: &Option<PathBuf>,
) -> Result<()> {
    let ns: Vec<usize> = parse_list(n_list, "n")?;
    let epss = parse_eps_list(eps_list)?;
    let explicit_ws: Option<Vec<usize>> = match w_list {
        Some(s) => Some(parse_list(s, "w")?),
        None => None,
    };
    // grid sorted by parameters up front; row order never depends on timing
    let mut grid: Vec<(usize, usize, Rational)> = Vec::new();
    for &n in &ns {
        let ws: Vec<usize> = match &explicit_ws {
            Some(ws) => ws.iter().copied().filter(|w| *w <= n).collect(),
            None => (0..=n).collect(),
        };
        for w in ws {
            for eps in &epss {
                grid.push((n, w, eps.clone()));
            }
        }
    }
    grid.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
    grid.dedup();

    let rows: Vec<Result<SweepRow>> = thread_pool()?.install(|| {
        grid.par_iter()
            .map(|(n, w, eps)| run_row(*n, *w, eps, oracle))
            .collect()
    });
    let rows: Vec<SweepRow> = rows.into_iter().collect::<Result<_>>()?;

    let header = "construction,n,w,eps,degree,verified_error,verified_error_decimal,\
                  oracle_degree,wall_ms"
        .replace(' ', "");
    let csv: String = std::iter::once(header)
        .chain(rows.iter().map(csv_line))
        .map(|l| l + "\n")
        .collect();
    if let Some(path) = out_csv {
        write_text(path, &csv)?;
        println!("wrote {}", path.display());
    }
    if let Some(path) = out_json {
        let report = json!({"rows": rows.iter().map(json_row).collect::<Vec<_>>()});
        io::write_json(path, &report)?;
        println!("wrote {}", path.display());
    }
    if out_csv.is_none() && out_json.is_none() {
        print!("{csv}");
    }
    println!("rows: {}", rows.len());
    Ok(())
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}
