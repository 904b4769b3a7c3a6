//! Symmetric torus approximators for the weight-delta functions
//! `[|x| = w]`, built by summing mod-p lifts over many primes.
//!
//! For each of the first `t` primes, `f_p(s) = 1 - (s - w)^(p-1)` computes
//! the delta mod `p`; its lift at weight `1/(2t)` contributes `1/(2t)` near
//! weight `w` and a rational with denominator `p^k` elsewhere. Summed over
//! `t` primes the on-weight contributions add to `1/2` while the off-weight
//! values stay within `eps/2 + log2(n)/t` of zero, which the prime count
//! makes at most `eps`.
//!
//! All per-prime arithmetic happens mod `p^k` in machine words; the final
//! coefficients are assembled exactly over the common denominator
//! `D = prod p^k`.

use crate::amplifier::modulus_amplifier;
use crate::error::{ConstructionError, Result};
use crate::lift::lift_plan;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use torus_core::approx::half;
use torus_core::primes::first_primes;
use torus_core::rational::Rational;
use torus_core::torus::TorusValue;
use torus_core::SymmetricTorusPolynomial;

/// Number of primes: 1 for `n <= 1`, else the smallest `t` with
/// `ceil(log2 n) / t <= eps / 2`.
pub fn delta_prime_count(n: usize, eps: &Rational) -> Result<usize> {
    if eps <= &Rational::zero() {
        return Err(ConstructionError::InvalidEpsilon(eps.to_string()));
    }
    if n <= 1 {
        return Ok(1);
    }
    let log = 64 - (n as u64 - 1).leading_zeros() as u64; // ceil(log2 n)
    // t = ceil(2 * log / eps)
    let t = (BigInt::from(2 * log) * eps.denom()).div_ceil(eps.numer());
    Ok(usize::try_from(&t).map_err(|_| {
        ConstructionError::InvalidEpsilon(format!("eps = {eps} requires {t} primes"))
    })?)
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Dense univariate product mod `m`, ascending powers.
fn mul_dense(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let cell = &mut out[i + j];
            *cell = (*cell + mulmod(*x, *y, m)) % m;
        }
    }
    out
}

fn pow_dense(base: &[u64], mut e: u64, m: u64) -> Vec<u64> {
    let mut acc = vec![1 % m];
    let mut sq = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_dense(&acc, &sq, m);
        }
        e >>= 1;
        if e > 0 {
            sq = mul_dense(&sq, &sq, m);
        }
    }
    acc
}

/// Per-prime lifted polynomial: coefficients `num[j] / modulus` in weight
/// power basis.
struct PrimeLift {
    modulus: u64,
    nums: Vec<u64>,
}

fn prime_lift(p: u64, w: usize, alpha: &Rational, eps: &Rational) -> Result<PrimeLift> {
    let plan = lift_plan(p, (p - 1) as usize, alpha, eps)?;
    let m = plan.modulus;
    // f_p(s) = 1 - (s - w)^(p-1); any residues mod p^k represent it
    let shifted = vec![(m - (w as u64) % m) % m, 1 % m];
    let powed = pow_dense(&shifted, p - 1, m);
    let mut f = vec![0u64; powed.len().max(1)];
    f[0] = 1 % m;
    for (j, c) in powed.iter().enumerate() {
        f[j] = (f[j] + m - *c % m) % m;
    }
    // Horner: A_k(f) mod p^k, then scale by q
    let amp = modulus_amplifier(plan.k)?;
    let mut acc: Vec<u64> = vec![];
    for c in amp.coeffs().iter().rev() {
        let big_m = BigInt::from(m);
        let cm = ((c % &big_m) + &big_m) % &big_m;
        acc = mul_dense(&acc, &f, m);
        if acc.is_empty() {
            acc = vec![0];
        }
        acc[0] = (acc[0] + u64::try_from(&cm).expect("reduced")) % m;
    }
    for a in &mut acc {
        *a = mulmod(*a, plan.q, m);
    }
    Ok(PrimeLift {
        modulus: m,
        nums: acc,
    })
}

/// Build and verify a symmetric `eps`-approximator of `[|x| = w]` on `n`
/// variables (against the target `1/2` on weight `w`, `0` elsewhere).
pub fn delta_construction(n: usize, w: usize, eps: &Rational) -> Result<SymmetricTorusPolynomial> {
    if w > n {
        return Err(ConstructionError::WeightOutOfRange { w, n });
    }
    let t = delta_prime_count(n, eps)?;
    let alpha = Rational::new(BigInt::from(1), BigInt::from(2 * t as u64));
    let eps_p = eps / Rational::from_integer(BigInt::from(2 * t as u64));

    let lifts = first_primes(t)
        .into_iter()
        .map(|p| prime_lift(p, w, &alpha, &eps_p))
        .collect::<Result<Vec<_>>>()?;

    // assemble over the common denominator D = prod p^k
    let d: BigInt = lifts.iter().map(|l| BigInt::from(l.modulus)).product();
    let deg = lifts.iter().map(|l| l.nums.len()).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); deg];
    for l in &lifts {
        let scale = &d / BigInt::from(l.modulus);
        for (j, a) in l.nums.iter().enumerate() {
            if *a != 0 {
                coeffs[j] += BigInt::from(*a) * &scale;
            }
        }
    }
    let result = SymmetricTorusPolynomial::from_coeffs(
        n,
        coeffs.into_iter().map(|c| Rational::new(c, d.clone())),
    );

    // verify the guarantee weight-by-weight with per-prime word arithmetic
    // (exactly the value of `result` mod 1, assembled without big Horner)
    for s in 0..=n as u64 {
        let mut value = Rational::zero();
        for l in &lifts {
            let mut acc: u64 = 0;
            for c in l.nums.iter().rev() {
                acc = (mulmod(acc, s % l.modulus, l.modulus) + c) % l.modulus;
            }
            value += Rational::new(BigInt::from(acc), BigInt::from(l.modulus));
        }
        let target = if s == w as u64 { half() } else { Rational::zero() };
        let err = TorusValue::reduce(&(value - target)).norm();
        if &err > eps {
            return Err(ConstructionError::GuaranteeFailed(format!(
                "delta error {err} at weight {s} exceeds eps = {eps}"
            )));
        }
    }
    Ok(result)
}
