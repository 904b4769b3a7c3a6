//! Exact linear feasibility over the rationals via Fourier–Motzkin
//! elimination.
//!
//! Systems are conjunctions of `Σ a_j x_j <= b`. Variables are eliminated
//! from the highest index down, keeping each intermediate stage so a
//! satisfying point can be rebuilt by interval back-substitution. Constraint
//! counts are kept in check by normalizing each row and keeping only the
//! tightest bound per normalized direction.

use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use torus_core::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    /// `Σ coeffs[j] * x_j <= bound`
    pub coeffs: Vec<Rational>,
    pub bound: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, bound: Rational) -> Self {
        Constraint { coeffs, bound }
    }
}

#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub nvars: usize,
    pub cons: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(nvars: usize) -> Self {
        LinearSystem {
            nvars,
            cons: vec![],
        }
    }

    pub fn le(&mut self, coeffs: Vec<Rational>, bound: Rational) {
        debug_assert_eq!(coeffs.len(), self.nvars);
        self.cons.push(Constraint::new(coeffs, bound));
    }

    pub fn ge(&mut self, coeffs: Vec<Rational>, bound: Rational) {
        self.le(coeffs.iter().map(|c| -c).collect(), -bound);
    }
}

/// Scale so the first nonzero coefficient is ±1; hash key for dedup.
fn normalize(c: &Constraint) -> Option<(String, Constraint)> {
    let lead = c.coeffs.iter().find(|a| !a.is_zero())?;
    let scale = lead.abs();
    let coeffs: Vec<Rational> = c.coeffs.iter().map(|a| a / &scale).collect();
    let bound = &c.bound / &scale;
    let key = coeffs.iter().map(|a| format!("{a},")).collect::<String>();
    Some((key, Constraint::new(coeffs, bound)))
}

/// Drop duplicate directions (keeping the tighter bound) and detect constant
/// infeasibility. Returns `None` if a constant constraint is violated.
fn reduce(cons: Vec<Constraint>) -> Option<Vec<Constraint>> {
    let mut best: HashMap<String, Constraint> = HashMap::new();
    for c in cons {
        match normalize(&c) {
            None => {
                // all-zero row: 0 <= bound must hold
                if c.bound.is_negative() {
                    return None;
                }
            }
            Some((key, norm)) => {
                best.entry(key)
                    .and_modify(|cur| {
                        if norm.bound < cur.bound {
                            cur.bound = norm.bound.clone();
                        }
                    })
                    .or_insert(norm);
            }
        }
    }
    Some(best.into_values().collect())
}

/// Eliminate variable `v`, producing a system over `x_0..x_(v-1)`.
fn eliminate(cons: &[Constraint], v: usize) -> Option<Vec<Constraint>> {
    let mut upper = vec![]; // coeff > 0: x_v <= ...
    let mut lower = vec![]; // coeff < 0: x_v >= ...
    let mut rest = vec![];
    for c in cons {
        let a = &c.coeffs[v];
        if a.is_zero() {
            rest.push(c.clone());
        } else if a.is_positive() {
            upper.push(c);
        } else {
            lower.push(c);
        }
    }
    for u in &upper {
        let au = &u.coeffs[v];
        for l in &lower {
            let al = l.coeffs[v].abs();
            let coeffs: Vec<Rational> = (0..u.coeffs.len())
                .map(|j| &u.coeffs[j] / au + &l.coeffs[j] / &al)
                .collect();
            debug_assert!(coeffs[v].is_zero());
            let bound = &u.bound / au + &l.bound / &al;
            rest.push(Constraint::new(coeffs, bound));
        }
    }
    reduce(rest)
}

/// Decide feasibility; on success return one exact satisfying point.
pub fn solve(sys: &LinearSystem) -> Option<Vec<Rational>> {
    // stages[m] = constraints over x_0..x_(m-1)
    let mut stages: Vec<Vec<Constraint>> = Vec::with_capacity(sys.nvars + 1);
    stages.push(reduce(sys.cons.clone())?);
    for m in (1..=sys.nvars).rev() {
        let next = eliminate(stages.last().unwrap(), m - 1)?;
        stages.push(next);
    }
    stages.reverse(); // stages[m] now over x_0..x_(m-1); stages[0] constant

    let mut x: Vec<Rational> = Vec::with_capacity(sys.nvars);
    for m in 1..=sys.nvars {
        let v = m - 1;
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for c in &stages[m] {
            let a = &c.coeffs[v];
            if a.is_zero() {
                continue;
            }
            let rest: Rational = (0..v).map(|j| &c.coeffs[j] * &x[j]).sum();
            let limit = (&c.bound - rest) / a;
            if a.is_positive() {
                hi = Some(match hi {
                    Some(h) if h <= limit => h,
                    _ => limit,
                });
            } else {
                lo = Some(match lo {
                    Some(l) if l >= limit => l,
                    _ => limit,
                });
            }
        }
        let value = match (lo, hi) {
            (Some(l), Some(h)) => {
                debug_assert!(l <= h, "FM back-substitution produced empty interval");
                (&l + &h) / Rational::from_integer(2.into())
            }
            (Some(l), None) => l,
            (None, Some(h)) => h,
            (None, None) => Rational::zero(),
        };
        x.push(value);
    }
    Some(x)
}

/// Exact phase-1 simplex with Bland's rule: decides the same systems as
/// `solve` but stays polynomial-ish in practice where elimination blows up
/// (many variables). Free variables are split as `x = u - v` with
/// `u, v >= 0`; feasibility holds iff the artificial objective reaches zero.
pub fn solve_simplex(sys: &LinearSystem) -> Option<Vec<Rational>> {
    let n = sys.nvars;
    let m = sys.cons.len();
    let nneg = sys.cons.iter().filter(|c| c.bound.is_negative()).count();
    if nneg == 0 {
        return Some(vec![Rational::zero(); n]); // slack basis is feasible at 0
    }
    // columns: u_0..u_(n-1), v_0..v_(n-1), slacks, artificials, then rhs
    let ncols = 2 * n + m + nneg;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut next_art = 2 * n + m;
    for (i, c) in sys.cons.iter().enumerate() {
        let neg = c.bound.is_negative();
        let mut row = vec![Rational::zero(); ncols + 1];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = if neg { -a } else { a.clone() };
            row[n + j] = -&row[j];
        }
        row[2 * n + i] = if neg { -Rational::one() } else { Rational::one() };
        row[ncols] = if neg { -&c.bound } else { c.bound.clone() };
        if neg {
            row[next_art] = Rational::one();
            basis.push(next_art);
            next_art += 1;
        } else {
            basis.push(2 * n + i);
        }
        t.push(row);
    }
    // reduced costs for minimizing the sum of artificials: the sum of the
    // artificial rows, with the (basic) artificial columns zeroed
    let mut w = vec![Rational::zero(); ncols + 1];
    for (i, row) in t.iter().enumerate() {
        if basis[i] >= 2 * n + m {
            for (wj, rj) in w.iter_mut().zip(row) {
                *wj += rj;
            }
        }
    }
    for wj in w.iter_mut().take(ncols).skip(2 * n + m) {
        *wj = Rational::zero();
    }
    loop {
        // Bland: smallest non-artificial column with positive reduced cost
        let Some(e) = (0..2 * n + m).find(|j| w[*j].is_positive()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][e].is_positive() {
                continue;
            }
            let better = match leave {
                None => true,
                Some(l) => {
                    let ri = &t[i][ncols] / &t[i][e];
                    let rl = &t[l][ncols] / &t[l][e];
                    ri < rl || (ri == rl && basis[i] < basis[l])
                }
            };
            if better {
                leave = Some(i);
            }
        }
        // phase-1 objective is bounded below by zero, so a pivot row exists
        let l = leave?;
        let pivot = t[l][e].clone();
        for x in t[l].iter_mut() {
            *x = &*x / &pivot;
        }
        for i in 0..m {
            if i != l && !t[i][e].is_zero() {
                let f = t[i][e].clone();
                for j in 0..=ncols {
                    t[i][j] = &t[i][j] - &f * &t[l][j];
                }
            }
        }
        if !w[e].is_zero() {
            let f = w[e].clone();
            for j in 0..=ncols {
                w[j] = &w[j] - &f * &t[l][j];
            }
        }
        basis[l] = e;
    }
    if !w[ncols].is_zero() {
        return None; // artificials cannot all reach zero
    }
    let mut vals = vec![Rational::zero(); ncols];
    for (i, b) in basis.iter().enumerate() {
        vals[*b] = t[i][ncols].clone();
    }
    Some((0..n).map(|j| &vals[j] - &vals[n + j]).collect())
}
