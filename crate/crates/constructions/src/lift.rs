//! Lifting finite-field polynomials to torus polynomials.
//!
//! If an integer polynomial `F` computes `f` mod `p`, then
//! `q * A_k(F(x)) / p^k (mod 1)` tracks `alpha * f(x)` within `eps`, where
//! `k` is minimal with `1/p^k <= eps` and `q/p^k` is the closest grid point
//! to `alpha`. Only the coefficients mod `p^k` matter on the torus, so the
//! whole composition is carried out in `Z/p^k` with machine words.

use crate::amplifier::modulus_amplifier;
use crate::error::{ConstructionError, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::collections::BTreeMap;
use torus_core::poly::field::FieldPolynomial;
use torus_core::rational::Rational;
use torus_core::torus::TorusValue;
use torus_core::MultilinearTorusPolynomial;

/// Everything the lift decided before touching coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftPlan {
    pub p: u64,
    pub k: u32,
    /// `p^k`
    pub modulus: u64,
    /// numerator of the grid point approximating alpha
    pub q: u64,
    /// degree of `A_k(F(x))` over Z before multilinear collapse:
    /// `(2k - 1) * deg(F)` (0 for constant F)
    pub composition_degree: usize,
}

/// Cap keeping `q * a` products inside u128.
const MAX_MODULUS: u64 = 1 << 62;

fn check_alpha_eps(alpha: &Rational, eps: &Rational) -> Result<()> {
    if !eps.is_positive() {
        return Err(ConstructionError::InvalidEpsilon(eps.to_string()));
    }
    if alpha.is_negative() || alpha > &Rational::one() {
        return Err(ConstructionError::InvalidAlpha(alpha.to_string()));
    }
    Ok(())
}

/// Choose `k` (minimal with `1/p^k <= eps`) and `q` (smallest minimizer of
/// `|q/p^k - alpha (mod 1)|`, guaranteed within `eps`).
pub fn lift_plan(p: u64, deg_f: usize, alpha: &Rational, eps: &Rational) -> Result<LiftPlan> {
    check_alpha_eps(alpha, eps)?;
    if !torus_core::poly::field::is_prime(p) {
        return Err(torus_core::CoreError::Malformed(format!("modulus {p} is not prime")).into());
    }
    let mut k: u32 = 1;
    let mut modulus_big = BigInt::from(p);
    // 1/p^k <= eps  <=>  eps_den <= eps_num * p^k
    while eps.denom() > &(eps.numer() * &modulus_big) {
        k += 1;
        modulus_big *= p;
        if modulus_big > BigInt::from(MAX_MODULUS) {
            return Err(ConstructionError::ModulusTooLarge {
                modulus: modulus_big.to_string(),
            });
        }
    }
    if modulus_big > BigInt::from(MAX_MODULUS) {
        return Err(ConstructionError::ModulusTooLarge {
            modulus: modulus_big.to_string(),
        });
    }
    let modulus: u64 = u64::try_from(&modulus_big).expect("bounded above");

    // candidates: floor and ceil of alpha * p^k, taken mod p^k
    let scaled = alpha * Rational::from_integer(modulus_big.clone());
    let floor = scaled.floor().to_integer();
    let norm_of = |q: &BigInt| -> Rational {
        TorusValue::reduce(&(Rational::new(q.clone(), modulus_big.clone()) - alpha)).norm()
    };
    let c0 = ((&floor % &modulus_big) + &modulus_big) % &modulus_big;
    let c1 = (&c0 + 1) % &modulus_big;
    let q_big = if norm_of(&c1) < norm_of(&c0) || (norm_of(&c1) == norm_of(&c0) && c1 < c0) {
        c1
    } else {
        c0
    };
    let q = u64::try_from(&q_big).expect("q < p^k");
    Ok(LiftPlan {
        p,
        k,
        modulus,
        q,
        composition_degree: if deg_f == 0 { 0 } else { (2 * k as usize - 1) * deg_f },
    })
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Multilinear polynomial with coefficients in Z/m, subset-mask keys.
struct ModMultilinear {
    m: u64,
    terms: BTreeMap<u64, u64>,
}

impl ModMultilinear {
    fn constant(m: u64, c: u64) -> Self {
        let mut terms = BTreeMap::new();
        if c % m != 0 {
            terms.insert(0, c % m);
        }
        ModMultilinear { m, terms }
    }

    fn multiply(&self, other: &ModMultilinear) -> ModMultilinear {
        let mut terms: BTreeMap<u64, u64> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = terms.entry(ma | mb).or_insert(0);
                *e = (*e + mulmod(*ca, *cb, self.m)) % self.m;
            }
        }
        terms.retain(|_, c| *c != 0);
        ModMultilinear { m: self.m, terms }
    }

    fn add_const(&mut self, c: u64) {
        let e = self.terms.entry(0).or_insert(0);
        *e = (*e + c % self.m) % self.m;
        if *e == 0 {
            self.terms.remove(&0);
        }
    }
}

/// Lift a {0,1}-valued polynomial over F_p to a multilinear torus polynomial
/// tracking `alpha * f` within `eps` (callers with arbitrary range apply
/// [`force_boolean_range`] first).
pub fn lift_field_polynomial(
    f: &FieldPolynomial,
    alpha: &Rational,
    eps: &Rational,
) -> Result<(MultilinearTorusPolynomial, LiftPlan)> {
    let plan = lift_plan(f.p(), f.degree(), alpha, eps)?;
    let m = plan.modulus;
    let amp = modulus_amplifier(plan.k)?;

    // F with coefficients mod p^k (any representative mod p^k works: the
    // amplifier only cares about the value mod p)
    let f_mod = ModMultilinear {
        m,
        terms: f.terms().map(|(mask, c)| (mask, c % m)).collect(),
    };
    // Horner: acc = A_k(F) mod p^k
    let mut acc = ModMultilinear::constant(m, 0);
    for c in amp.coeffs().iter().rev() {
        let cm = ((c % BigInt::from(m)) + BigInt::from(m)) % BigInt::from(m);
        acc = acc.multiply(&f_mod);
        acc.add_const(u64::try_from(&cm).expect("reduced"));
    }

    let mut out = MultilinearTorusPolynomial::zero(f.n());
    for (mask, a) in &acc.terms {
        let num = mulmod(*a, plan.q, m);
        if num != 0 {
            out.add_term(*mask, &Rational::new(BigInt::from(num), BigInt::from(m)));
        }
    }
    Ok((out, plan))
}

/// Force a polynomial over F_p into {0,1} range via Fermat: `F -> F^(p-1)`,
/// multilinearized. A no-op for p = 2.
pub fn force_boolean_range(f: &FieldPolynomial) -> Result<FieldPolynomial> {
    if f.p() == 2 {
        return Ok(f.clone());
    }
    Ok(f.pow((f.p() - 1) as u32)?)
}
