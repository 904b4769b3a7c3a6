//! Exact feasibility of toroidal approximation at a fixed degree, and the
//! minimal-degree search built on it.
//!
//! A degree-`d` polynomial in either basis is pinned down by its values at
//! `d + 1` "anchor" points (weights `0..=d`, or the masks of size `<= d`):
//! the basis-evaluation matrix at the anchors is unitriangular over the
//! integers. Because every basis element is integer-valued on the domain,
//! adding integer multiples of basis elements shifts anchor values by
//! arbitrary integers without changing anything mod 1 — so anchor values may
//! be confined to `target ± eps` with no integer offset, and only the
//! remaining points branch over offsets. Each non-anchor value is an exact
//! integer combination of the anchor values, so a choice of offsets turns
//! the whole problem into a rational linear system: interval propagation
//! prunes the branch-and-bound, and Fourier–Motzkin elimination decides the
//! leaves and produces witnesses, which are independently re-verified.

use crate::error::{OracleError, Result};
use crate::fm::{solve, solve_simplex, LinearSystem};
use crate::problem::{ApproximationProblem, Basis, OracleCaps, Target};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use torus_core::poly::integer::binomial;
use torus_core::rational::Rational;
use torus_core::torus::TorusValue;
use torus_core::{MultilinearTorusPolynomial, SymmetricTorusPolynomial};

/// Exact witness: basis coefficients in `[0, 1)` plus one integer offset per
/// constraint point realizing the mod-1 wraparound.
#[derive(Debug, Clone)]
pub struct FeasibilityWitness {
    basis: Basis,
    n: usize,
    /// (power or mask, coefficient); keys with zero coefficients included
    pub coefficients: Vec<(u64, Rational)>,
    /// (constraint point, offset m with |P(x) - alpha*f(x) - m| <= eps)
    pub offsets: Vec<(u64, BigInt)>,
}

/// Proof-of-search record accompanying an infeasible verdict.
#[derive(Debug, Clone)]
pub struct InfeasibilityRecord {
    pub degree: usize,
    pub eps: Rational,
    /// branch nodes visited before exhausting the offset space
    pub branches: u64,
}

#[derive(Debug, Clone)]
pub enum FeasibilityOutcome {
    Feasible(FeasibilityWitness),
    Infeasible(InfeasibilityRecord),
}

#[derive(Debug, Clone)]
pub struct DegreeCertificate {
    pub d_min: usize,
    pub witness: FeasibilityWitness,
    /// exhaustion record at `d_min - 1`; absent when `d_min = 0`
    pub infeasibility: Option<InfeasibilityRecord>,
}

impl FeasibilityWitness {
    /// Re-check every constraint from scratch with exact arithmetic.
    pub fn verify(&self, problem: &ApproximationProblem) -> Result<()> {
        if self.n != problem.n() || self.basis != problem.basis {
            return Err(OracleError::InvalidProblem(
                "witness does not match problem shape".into(),
            ));
        }
        for (key, c) in &self.coefficients {
            let deg = match self.basis {
                Basis::SymmetricPower => *key as usize,
                Basis::MultilinearSubset => key.count_ones() as usize,
            };
            if deg > problem.degree {
                return Err(OracleError::GuaranteeFailed(format!(
                    "witness key {key} exceeds degree {}",
                    problem.degree
                )));
            }
            if c.is_negative() || c >= &Rational::one() {
                return Err(OracleError::GuaranteeFailed(format!(
                    "coefficient {c} outside [0, 1)"
                )));
            }
        }
        let offsets: std::collections::BTreeMap<u64, &BigInt> =
            self.offsets.iter().map(|(x, m)| (*x, m)).collect();
        for x in problem.points() {
            let m = offsets.get(&x).ok_or_else(|| {
                OracleError::GuaranteeFailed(format!("missing offset for point {x}"))
            })?;
            let value: Rational = self
                .coefficients
                .iter()
                .map(|(key, c)| c * basis_value(self.basis, *key, x))
                .sum();
            let resid = value - problem.target_at(x) - Rational::from_integer((*m).clone());
            if resid.abs() > problem.eps {
                return Err(OracleError::GuaranteeFailed(format!(
                    "constraint at point {x} violated: residual {resid}"
                )));
            }
        }
        Ok(())
    }

    /// Materialize a symmetric-basis witness.
    pub fn to_symmetric(&self) -> Option<SymmetricTorusPolynomial> {
        if self.basis != Basis::SymmetricPower {
            return None;
        }
        let deg = self.coefficients.iter().map(|(j, _)| *j as usize).max().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (j, c) in &self.coefficients {
            coeffs[*j as usize] = c.clone();
        }
        Some(SymmetricTorusPolynomial::from_coeffs(self.n, coeffs))
    }

    /// Materialize a multilinear-basis witness.
    pub fn to_multilinear(&self) -> Option<MultilinearTorusPolynomial> {
        if self.basis != Basis::MultilinearSubset {
            return None;
        }
        MultilinearTorusPolynomial::from_terms(
            self.n,
            self.coefficients.iter().map(|(m, c)| (*m, c.clone())),
        )
        .ok()
    }
}

/// Value of one basis element at a point. Symmetric-power uses `w^j`;
/// the anchor machinery below uses the binomial basis instead.
fn basis_value(basis: Basis, key: u64, x: u64) -> Rational {
    match basis {
        Basis::SymmetricPower => {
            let mut v = BigInt::one();
            for _ in 0..key {
                v *= BigInt::from(x);
            }
            Rational::from_integer(v)
        }
        Basis::MultilinearSubset => {
            if key & !x == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        }
    }
}

/// Anchor points: `d + 1` domain points at which the (integer-valued)
/// binomial/subset basis evaluates to a unitriangular matrix.
fn anchors(problem: &ApproximationProblem) -> Vec<u64> {
    let n = problem.n();
    let d = problem.degree;
    match problem.basis {
        Basis::SymmetricPower => (0..=(d.min(n)) as u64).collect(),
        Basis::MultilinearSubset => {
            let mut a: Vec<u64> = (0..(1u64 << n))
                .filter(|m| (m.count_ones() as usize) <= d)
                .collect();
            a.sort_by_key(|m| (m.count_ones(), *m));
            a
        }
    }
}

/// Integer-valued anchor basis element `j` at domain point `x`:
/// `C(|x|, j)` for symmetric, `[S_j subset of x]` for multilinear.
fn anchor_basis_value(problem: &ApproximationProblem, anchor_list: &[u64], j: usize, x: u64) -> Rational {
    match problem.basis {
        Basis::SymmetricPower => Rational::from_integer(binomial(x, j as u64)),
        Basis::MultilinearSubset => {
            if anchor_list[j] & !x == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        }
    }
}

/// `lambda` with `value(x) = sum_a lambda[a] * value(anchor_a)` for every
/// polynomial of the given degree; integer by unitriangularity.
fn extrapolation_row(
    problem: &ApproximationProblem,
    anchor_list: &[u64],
    x: u64,
) -> Vec<Rational> {
    let k = anchor_list.len();
    let mut lambda = vec![Rational::zero(); k];
    // solve sum_{a >= j} lambda[a] * M[a][j] = B[x][j], descending j
    for j in (0..k).rev() {
        let mut v = anchor_basis_value(problem, anchor_list, j, x);
        for a in (j + 1)..k {
            let m_aj = anchor_basis_value(problem, anchor_list, j, anchor_list[a]);
            if !m_aj.is_zero() {
                v -= &lambda[a] * m_aj;
            }
        }
        lambda[j] = v;
    }
    lambda
}

struct Search<'a> {
    problem: &'a ApproximationProblem,
    anchor_list: Vec<u64>,
    /// per non-anchor point: (point, integer extrapolation row)
    rows: Vec<(u64, Vec<Rational>)>,
    anchor_targets: Vec<Rational>,
    branches: u64,
    max_branches: u64,
    max_offsets_per_point: u64,
}

enum SearchResult {
    Found(Vec<Rational>, Vec<(usize, BigInt)>),
    Exhausted,
}

impl<'a> Search<'a> {
    /// Tighten anchor boxes against the chosen constraints. Pruning only:
    /// rounds are capped because exact-rational interval propagation can
    /// contract forever on cyclic dependencies; soundness comes from the
    /// exact solve at the leaves. Returns `false` when a box empties.
    fn propagate(
        &self,
        boxes: &mut [(Rational, Rational)],
        chosen: &[(usize, BigInt)],
    ) -> bool {
        for _ in 0..8 {
            let mut changed = false;
            for (row_idx, m) in chosen {
                let (point, lambda) = &self.rows[*row_idx];
                let center = self.problem.target_at(*point)
                    + Rational::from_integer(m.clone());
                let lo_c = &center - &self.problem.eps;
                let hi_c = &center + &self.problem.eps;
                // reachable interval of sum excluding each variable in turn
                for v in 0..lambda.len() {
                    let l = &lambda[v];
                    if l.is_zero() {
                        continue;
                    }
                    let mut rest_lo = Rational::zero();
                    let mut rest_hi = Rational::zero();
                    for (u, lu) in lambda.iter().enumerate() {
                        if u == v || lu.is_zero() {
                            continue;
                        }
                        let (a, b) = (lu * &boxes[u].0, lu * &boxes[u].1);
                        if a <= b {
                            rest_lo += a;
                            rest_hi += b;
                        } else {
                            rest_lo += b;
                            rest_hi += a;
                        }
                    }
                    // l * y_v in [lo_c - rest_hi, hi_c - rest_lo]
                    let (mut nl, mut nh) = ((&lo_c - &rest_hi) / l, (&hi_c - &rest_lo) / l);
                    if nl > nh {
                        std::mem::swap(&mut nl, &mut nh);
                    }
                    if nl > boxes[v].0 {
                        boxes[v].0 = nl;
                        changed = true;
                    }
                    if nh < boxes[v].1 {
                        boxes[v].1 = nh;
                        changed = true;
                    }
                    if boxes[v].0 > boxes[v].1 {
                        return false;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        true
    }

    fn reachable(&self, lambda: &[Rational], boxes: &[(Rational, Rational)]) -> (Rational, Rational) {
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        for (l, (bl, bh)) in lambda.iter().zip(boxes) {
            if l.is_zero() {
                continue;
            }
            let (a, b) = (l * bl, l * bh);
            if a <= b {
                lo += a;
                hi += b;
            } else {
                lo += b;
                hi += a;
            }
        }
        (lo, hi)
    }

    fn dfs(
        &mut self,
        boxes: Vec<(Rational, Rational)>,
        chosen: &mut Vec<(usize, BigInt)>,
        remaining: &[usize],
    ) -> Result<SearchResult> {
        self.branches += 1;
        if self.branches > self.max_branches {
            return Err(OracleError::SizeLimitExceeded(format!(
                "offset search exceeded {} branch nodes",
                self.max_branches
            )));
        }
        let mut boxes = boxes;
        if !self.propagate(&mut boxes, chosen) {
            return Ok(SearchResult::Exhausted);
        }
        if remaining.is_empty() {
            return Ok(self.solve_leaf(chosen));
        }

        // fail-first: the remaining point with the fewest admissible offsets
        let mut best: Option<(usize, BigInt, BigInt, BigInt)> = None;
        for &row_idx in remaining {
            let (point, lambda) = &self.rows[row_idx];
            let (lo, hi) = self.reachable(lambda, &boxes);
            let t = self.problem.target_at(*point);
            let m_lo = (&lo - &t - &self.problem.eps).ceil().to_integer();
            let m_hi = (&hi - &t + &self.problem.eps).floor().to_integer();
            if m_lo > m_hi {
                return Ok(SearchResult::Exhausted); // some point has no offset
            }
            let count = &m_hi - &m_lo + BigInt::one();
            let is_better = match &best {
                Some((_, _, _, c)) => &count < c,
                None => true,
            };
            if is_better {
                let done = count == BigInt::one();
                best = Some((row_idx, m_lo, m_hi, count));
                if done {
                    break;
                }
            }
        }
        let (row_idx, m_lo, m_hi, count) = best.expect("remaining nonempty");
        if count > BigInt::from(self.max_offsets_per_point) {
            return Err(OracleError::SizeLimitExceeded(format!(
                "point requires enumerating {count} offsets"
            )));
        }
        // nearest-to-midpoint first
        let (point, lambda) = &self.rows[row_idx];
        let (lo, hi) = self.reachable(lambda, &boxes);
        let mid = (&lo + &hi) / Rational::from_integer(2.into()) - self.problem.target_at(*point);
        let mut candidates: Vec<BigInt> = Vec::new();
        let mut m = m_lo.clone();
        while m <= m_hi {
            candidates.push(m.clone());
            m += BigInt::one();
        }
        candidates.sort_by_key(|m| (Rational::from_integer(m.clone()) - &mid).abs());
        let rest: Vec<usize> = remaining.iter().copied().filter(|r| *r != row_idx).collect();
        for m in candidates {
            chosen.push((row_idx, m));
            let out = self.dfs(boxes.clone(), chosen, &rest)?;
            chosen.pop();
            if let SearchResult::Found(y, cs) = out {
                return Ok(SearchResult::Found(y, cs));
            }
        }
        Ok(SearchResult::Exhausted)
    }

    /// All offsets fixed: decide the exact linear system.
    fn solve_leaf(&self, chosen: &[(usize, BigInt)]) -> SearchResult {
        let k = self.anchor_list.len();
        let mut sys = LinearSystem::new(k);
        for (v, t) in self.anchor_targets.iter().enumerate() {
            let mut row = vec![Rational::zero(); k];
            row[v] = Rational::one();
            sys.le(row.clone(), t + &self.problem.eps);
            sys.ge(row, t - &self.problem.eps);
        }
        for (row_idx, m) in chosen {
            let (point, lambda) = &self.rows[*row_idx];
            let center =
                self.problem.target_at(*point) + Rational::from_integer(m.clone());
            sys.le(lambda.clone(), &center + &self.problem.eps);
            sys.ge(lambda.clone(), &center - &self.problem.eps);
        }
        // elimination is fine for a handful of variables but blows up
        // beyond that; the pivoting solver decides the same system exactly
        let solution = if k <= 6 { solve(&sys) } else { solve_simplex(&sys) };
        match solution {
            Some(y) => SearchResult::Found(y, chosen.to_vec()),
            None => SearchResult::Exhausted,
        }
    }
}

/// Decide exactly whether a degree-`problem.degree` polynomial in the given
/// basis approximates the target within `eps`.
pub fn feasibility(
    problem: &ApproximationProblem,
    caps: &OracleCaps,
) -> Result<FeasibilityOutcome> {
    problem.check_caps(caps)?;
    let anchor_list = anchors(problem);
    let anchor_set: std::collections::BTreeSet<u64> = anchor_list.iter().copied().collect();
    let rows: Vec<(u64, Vec<Rational>)> = problem
        .points()
        .into_iter()
        .filter(|x| !anchor_set.contains(x))
        .map(|x| {
            let lambda = extrapolation_row(problem, &anchor_list, x);
            debug_assert!(lambda.iter().all(|l| l.is_integer()));
            (x, lambda)
        })
        .collect();
    let anchor_targets: Vec<Rational> =
        anchor_list.iter().map(|a| problem.target_at(*a)).collect();
    let boxes: Vec<(Rational, Rational)> = anchor_targets
        .iter()
        .map(|t| (t - &problem.eps, t + &problem.eps))
        .collect();

    let mut search = Search {
        problem,
        anchor_list,
        rows,
        anchor_targets,
        branches: 0,
        max_branches: caps.max_branch_nodes,
        max_offsets_per_point: caps.max_offsets_per_point,
    };
    let remaining: Vec<usize> = (0..search.rows.len()).collect();
    let mut chosen = Vec::new();
    match search.dfs(boxes, &mut chosen, &remaining)? {
        SearchResult::Found(y, _) => {
            let witness = build_witness(problem, &search, &y)?;
            witness.verify(problem)?;
            Ok(FeasibilityOutcome::Feasible(witness))
        }
        SearchResult::Exhausted => Ok(FeasibilityOutcome::Infeasible(InfeasibilityRecord {
            degree: problem.degree,
            eps: problem.eps.clone(),
            branches: search.branches,
        })),
    }
}

/// Convert anchor values into `[0,1)` basis coefficients and recompute every
/// point's offset from scratch.
fn build_witness(
    problem: &ApproximationProblem,
    search: &Search,
    y: &[Rational],
) -> Result<FeasibilityWitness> {
    let anchor_list = &search.anchor_list;
    let k = anchor_list.len();
    let coefficients: Vec<(u64, Rational)> = match problem.basis {
        Basis::SymmetricPower => {
            // forward differences give binomial-basis coefficients b_j;
            // expand sum_j b_j * C(w, j) into powers of w
            let mut diffs = y.to_vec();
            let mut b = Vec::with_capacity(k);
            for _ in 0..k {
                b.push(diffs[0].clone());
                for i in 0..diffs.len() - 1 {
                    diffs[i] = &diffs[i + 1] - &diffs[i];
                }
                diffs.pop();
            }
            let mut coeffs = vec![Rational::zero(); k];
            // falling = w(w-1)...(w-j+1)/j!, maintained as power coefficients
            let mut falling = vec![Rational::one()];
            for (j, bj) in b.iter().enumerate() {
                if j > 0 {
                    let jr = Rational::from_integer(BigInt::from(j as u64));
                    // multiply by (w - (j-1)) / j
                    let mut next = vec![Rational::zero(); falling.len() + 1];
                    let shift = Rational::from_integer(BigInt::from(j as u64 - 1));
                    for (i, c) in falling.iter().enumerate() {
                        next[i + 1] += c / &jr;
                        next[i] -= c * &shift / &jr;
                    }
                    falling = next;
                }
                for (i, c) in falling.iter().enumerate() {
                    coeffs[i] += bj * c;
                }
            }
            coeffs
                .into_iter()
                .enumerate()
                .map(|(j, c)| (j as u64, TorusValue::reduce(&c).into_value()))
                .collect()
        }
        Basis::MultilinearSubset => {
            // Moebius inversion over the subset lattice of anchors
            let index: std::collections::BTreeMap<u64, usize> =
                anchor_list.iter().enumerate().map(|(i, a)| (*a, i)).collect();
            anchor_list
                .iter()
                .map(|s| {
                    let mut c = Rational::zero();
                    // sum over subsets t of s: (-1)^(|s|-|t|) y_t
                    let mut t = *s;
                    loop {
                        let sign = if (s.count_ones() - t.count_ones()) % 2 == 0 {
                            1
                        } else {
                            -1
                        };
                        c += Rational::from_integer(sign.into()) * &y[index[&t]];
                        if t == 0 {
                            break;
                        }
                        t = (t - 1) & s;
                    }
                    (*s, TorusValue::reduce(&c).into_value())
                })
                .collect()
        }
    };

    // recompute offsets against the normalized coefficients
    let mut offsets = Vec::new();
    for x in problem.points() {
        let value: Rational = coefficients
            .iter()
            .map(|(key, c)| c * basis_value(problem.basis, *key, x))
            .sum();
        let resid = value - problem.target_at(x);
        // nearest integer (round half up is fine: re-verification is exact)
        let m = (&resid + Rational::new(BigInt::one(), BigInt::from(2)))
            .floor()
            .to_integer();
        offsets.push((x, m));
    }
    Ok(FeasibilityWitness {
        basis: problem.basis,
        n: problem.n(),
        coefficients,
        offsets,
    })
}

/// Smallest feasible degree up to `d_max`, with witness and (when
/// `d_min > 0`) the exhaustion record one degree below.
pub fn exact_degree(
    target: Target,
    alpha: Rational,
    eps: Rational,
    basis: Basis,
    d_max: usize,
    caps: &OracleCaps,
) -> Result<DegreeCertificate> {
    let mut last_infeasible: Option<InfeasibilityRecord> = None;
    for d in 0..=d_max {
        let problem = ApproximationProblem::new(target.clone(), alpha.clone(), eps.clone(), d, basis)?;
        match feasibility(&problem, caps)? {
            FeasibilityOutcome::Feasible(witness) => {
                return Ok(DegreeCertificate {
                    d_min: d,
                    witness,
                    infeasibility: last_infeasible,
                });
            }
            FeasibilityOutcome::Infeasible(rec) => last_infeasible = Some(rec),
        }
    }
    Err(OracleError::NotFoundWithin { d_max })
}
