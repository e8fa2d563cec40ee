//! Brute-force solvers for the leg-length programs behind the spider and
//! pendant-path bounds.
//!
//! Three programs are covered, each over non-increasing tuples
//! `n_1 >= ... >= n_k >= 1`:
//!
//! * [`Problem::E1`]: `sum n_i = n - 1`, `n_1 <= n/2`, half-integral
//!   entries, minimizing
//!   `sum ((2n_i - 1)n - n_i(2n_i + 1) + 1) + (n_1 - n_2)`.
//!   Claimed lexicographically largest optimum: `(n/2, n/2 - k + 1, 1, ...)`
//!   when `n >= 2k`, otherwise `(n - k, 1, ..., 1)`.
//! * [`Problem::Case12`]: `sum n_i = n - 1`, `n_1 > n/2`, integral,
//!   minimizing `(n-1)(n-2)/2 + (2n_1-n)(2n_1-n+1)/2 + (k-1)n_1
//!   + sum_{i>=2} ((2n_i-1)n - n_i(2n_i+1) + 1 - n_i)`.
//!   Claimed optimum `(n - k, 1, ..., 1)`.
//! * [`Problem::Case2`]: `sum n_i = n' - 1`, integral, minimizing
//!   `sum ((2n_i-1)n - n_i(2n_i+1) + 1 + (n - n') - n_i)
//!   - ((2n'-2)n - n'(2n'-1) + 1)`.
//!   Claimed optimum `(n' - k, 1, ..., 1)`.
//!
//! The objectives are the complete expressions, constants included, so
//! the values can be compared with the closed forms directly. All
//! arithmetic is exact.

use num_rational::Ratio;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::star_bound;

/// Exact rational with small denominators (at most 4 in practice).
pub type Q = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Problem {
    #[serde(rename = "e1")]
    E1,
    #[serde(rename = "case12")]
    Case12,
    #[serde(rename = "case2")]
    Case2,
}

impl Problem {
    /// Entries are multiples of `1 / granularity`.
    pub fn granularity(self) -> i64 {
        match self {
            Problem::E1 => 2,
            Problem::Case12 | Problem::Case2 => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RelaxationInstance {
    pub problem: Problem,
    pub n: usize,
    pub k: usize,
    /// Only for [`Problem::Case2`].
    pub n_prime: Option<usize>,
}

impl RelaxationInstance {
    pub fn e1(n: usize, k: usize) -> Self {
        RelaxationInstance { problem: Problem::E1, n, k, n_prime: None }
    }

    pub fn case12(n: usize, k: usize) -> Self {
        RelaxationInstance { problem: Problem::Case12, n, k, n_prime: None }
    }

    pub fn case2(n: usize, n_prime: usize, k: usize) -> Self {
        RelaxationInstance { problem: Problem::Case2, n, k, n_prime: Some(n_prime) }
    }

    fn leg_total(&self) -> usize {
        match self.problem {
            Problem::Case2 => self.n_prime.unwrap_or(0).saturating_sub(1),
            _ => self.n.saturating_sub(1),
        }
    }

    /// Checks the tuple against every constraint of the program.
    pub fn check_tuple(&self, tuple: &[Q]) -> Result<()> {
        let bad = |msg: String| Err(Error::InfeasibleTuple(msg));
        if tuple.len() != self.k {
            return bad(format!("expected {} entries, got {}", self.k, tuple.len()));
        }
        let g = Q::from_integer(self.problem.granularity());
        if let Some(x) = tuple.iter().find(|x| !(**x * g).is_integer()) {
            return bad(format!("{x} is not a multiple of 1/{g}"));
        }
        if tuple.iter().any(|x| *x < Q::one()) {
            return bad("entries must be at least 1".into());
        }
        if tuple.windows(2).any(|w| w[0] < w[1]) {
            return bad("entries must be non-increasing".into());
        }
        let sum: Q = tuple.iter().sum();
        if sum != Q::from_integer(self.leg_total() as i64) {
            return bad(format!("entries sum to {sum}, expected {}", self.leg_total()));
        }
        let half_n = Q::new(self.n as i64, 2);
        match self.problem {
            Problem::E1 if tuple[0] > half_n => bad(format!("n_1 = {} exceeds n/2 = {half_n}", tuple[0])),
            Problem::Case12 if tuple[0] <= half_n => {
                bad(format!("n_1 = {} does not exceed n/2 = {half_n}", tuple[0]))
            }
            _ => Ok(()),
        }
    }

    fn check_shape(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Infeasible(msg));
        if self.k < 2 {
            return bad(format!("k = {} must be at least 2", self.k));
        }
        if self.leg_total() < self.k {
            return bad(format!("{} legs cannot share {} vertices", self.k, self.leg_total()));
        }
        if let (Problem::Case2, Some(np)) = (self.problem, self.n_prime) {
            if 2 * np > self.n {
                return bad(format!("n' = {np} exceeds n/2 for n = {}", self.n));
            }
        }
        Ok(())
    }

    /// The objective, after checking feasibility.
    pub fn objective(&self, tuple: &[Q]) -> Result<Q> {
        self.check_shape().map_err(|e| Error::InfeasibleTuple(e.to_string()))?;
        self.check_tuple(tuple)?;
        Ok(self.raw_objective(tuple))
    }

    fn raw_objective(&self, tuple: &[Q]) -> Q {
        match self.problem {
            Problem::E1 => e1_expression(self.n, tuple),
            Problem::Case12 => case12_expression(self.n, tuple),
            Problem::Case2 => case2_expression(self.n, self.n_prime.unwrap_or(0), tuple),
        }
    }

    /// The configuration the optimality argument arrives at.
    pub fn claimed_tuple(&self) -> Vec<Q> {
        let int = |v: i64| Q::from_integer(v);
        let (n, k) = (self.n as i64, self.k as i64);
        let mut t = vec![Q::one(); self.k];
        match self.problem {
            Problem::E1 if n >= 2 * k => {
                t[0] = Q::new(n, 2);
                t[1] = Q::new(n, 2) - int(k - 1);
            }
            Problem::E1 | Problem::Case12 => t[0] = int(n - k),
            Problem::Case2 => t[0] = int(self.n_prime.unwrap_or(0) as i64 - k),
        }
        t
    }

    pub fn solve(&self) -> Result<RelaxationSolution> {
        self.check_shape()?;
        let g = self.problem.granularity();
        let total = self.leg_total() as i64 * g;
        let cap = match self.problem {
            Problem::E1 => self.n as i64,
            _ => total,
        };
        let mut best: Option<(Q, Vec<Q>)> = None;
        for_each_nonincreasing(total, self.k, cap, g, &mut |units| {
            let tuple: Vec<Q> = units.iter().map(|&u| Q::new(u, g)).collect();
            if self.check_tuple(&tuple).is_err() {
                return;
            }
            let value = self.raw_objective(&tuple);
            let better = match &best {
                None => true,
                Some((v, t)) => value < *v || (value == *v && tuple > *t),
            };
            if better {
                best = Some((value, tuple));
            }
        });
        let (value, tuple) = best.ok_or_else(|| Error::Infeasible(format!("no feasible tuple for {self:?}")))?;
        Ok(RelaxationSolution { instance: *self, tuple, value, lex_max: true })
    }
}

/// An optimal tuple together with its objective value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelaxationSolution {
    pub instance: RelaxationInstance,
    pub tuple: Vec<Q>,
    pub value: Q,
    /// The tuple is the lexicographically largest among all optima.
    pub lex_max: bool,
}

/// Calls `f` with every non-increasing tuple of `k` integers in
/// `[min, max]` summing to `total`, in decreasing lexicographic order.
fn for_each_nonincreasing(total: i64, k: usize, max: i64, min: i64, f: &mut dyn FnMut(&[i64])) {
    fn go(total: i64, k: usize, max: i64, min: i64, prefix: &mut Vec<i64>, f: &mut dyn FnMut(&[i64])) {
        if k == 0 {
            if total == 0 {
                f(prefix);
            }
            return;
        }
        let hi = max.min(total - min * (k as i64 - 1));
        let mut v = hi;
        while v >= min && v * k as i64 >= total {
            prefix.push(v);
            go(total - v, k - 1, v, min, prefix, f);
            prefix.pop();
            v -= 1;
        }
    }
    go(total, k, max, min, &mut Vec::with_capacity(k), f);
}

/// Contribution `(2m - 1)n - m(2m + 1) + 1` of one leg, which equals
/// `(n-2) + (n-3) + ... + (n-2m)` for integral `m`.
fn leg_term(n: i64, m: Q) -> Q {
    let two = Q::from_integer(2);
    (two * m - Q::one()) * n - m * (two * m + Q::one()) + Q::one()
}

fn e1_expression(n: usize, t: &[Q]) -> Q {
    let n = n as i64;
    t.iter().map(|&m| leg_term(n, m)).sum::<Q>() + (t[0] - t[1])
}

fn case12_expression(n: usize, t: &[Q]) -> Q {
    let k = t.len() as i64;
    let n = n as i64;
    let n1 = t[0];
    let over = n1 * 2 - Q::from_integer(n);
    Q::new((n - 1) * (n - 2), 2)
        + over * (over + Q::one()) / 2
        + n1 * (k - 1)
        + t[1..].iter().map(|&m| leg_term(n, m) - m).sum::<Q>()
}

fn case2_expression(n: usize, n_prime: usize, t: &[Q]) -> Q {
    let (n, np) = (n as i64, n_prime as i64);
    let legs: Q = t.iter().map(|&m| leg_term(n, m) + Q::from_integer(n - np) - m).sum();
    legs - Q::from_integer((2 * np - 2) * n - np * (2 * np - 1) + 1)
}

pub fn objective_e1(n: usize, tuple: &[Q]) -> Result<Q> {
    RelaxationInstance::e1(n, tuple.len()).objective(tuple)
}

pub fn objective_case12(n: usize, tuple: &[Q]) -> Result<Q> {
    RelaxationInstance::case12(n, tuple.len()).objective(tuple)
}

pub fn objective_case2(n: usize, n_prime: usize, tuple: &[Q]) -> Result<Q> {
    RelaxationInstance::case2(n, n_prime, tuple.len()).objective(tuple)
}

pub fn solve_e1(n: usize, k: usize) -> Result<RelaxationSolution> {
    RelaxationInstance::e1(n, k).solve()
}

pub fn solve_case12(n: usize, k: usize) -> Result<RelaxationSolution> {
    RelaxationInstance::case12(n, k).solve()
}

pub fn solve_case2(n: usize, n_prime: usize, k: usize) -> Result<RelaxationSolution> {
    RelaxationInstance::case2(n, n_prime, k).solve()
}

/// Value the optimum is claimed to take:
/// `(n-1)(n-2) + (n-2k)(k-2)` or `(n-1)(n-2) + (2k-n)(n-k-1)` for E1,
/// `(n-1)(n-2) + (k-1)(k-2)` for Case12, and `(3n' - 2k - 3)(k - 1)` for
/// Case2 (where it is a lower bound on the uB₂ decrease).
pub fn claimed_value(inst: &RelaxationInstance) -> Q {
    let (n, k) = (inst.n as i64, inst.k as i64);
    let base = star_bound(inst.n) as i64;
    Q::from_integer(match inst.problem {
        Problem::E1 if n >= 2 * k => base + (n - 2 * k) * (k - 2),
        Problem::E1 => base + (2 * k - n) * (n - k - 1),
        Problem::Case12 => base + (k - 1) * (k - 2),
        Problem::Case2 => (3 * inst.n_prime.unwrap_or(0) as i64 - 2 * k - 3) * (k - 1),
    })
}

/// `p/q` in lowest terms, or just `p` for integers.
pub fn render_q(q: &Q) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// One line of the claims sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub problem: Problem,
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_prime: Option<usize>,
    pub optimum_value: String,
    pub optimum_tuple: Vec<String>,
    pub claimed_tuple: Vec<String>,
    pub claim_holds: bool,
}

/// Solves one instance and checks the claimed configuration:
///
/// * the claimed tuple is feasible and attains the brute-force optimum;
/// * for E1 it is also the lexicographically largest optimum;
/// * the optimum equals the claimed value (E1, Case12) or is at least the
///   claimed bound, which is positive (Case2);
/// * the E1 and Case12 values are at least `(n-1)(n-2)`.
pub fn check_claim(inst: &RelaxationInstance) -> Result<ClaimCheck> {
    let sol = inst.solve()?;
    let claimed = inst.claimed_tuple();
    let claimed_value_ok = inst.objective(&claimed).map_or(false, |v| v == sol.value);
    let target = claimed_value(inst);
    let holds = claimed_value_ok
        && match inst.problem {
            Problem::E1 => {
                sol.tuple == claimed && sol.value == target && sol.value >= Q::from_integer(star_bound(inst.n) as i64)
            }
            Problem::Case12 => sol.value == target && sol.value >= Q::from_integer(star_bound(inst.n) as i64),
            Problem::Case2 => sol.value >= target && target > Q::zero(),
        };
    Ok(ClaimCheck {
        problem: inst.problem,
        n: inst.n,
        k: inst.k,
        n_prime: inst.n_prime,
        optimum_value: render_q(&sol.value),
        optimum_tuple: sol.tuple.iter().map(render_q).collect(),
        claimed_tuple: claimed.iter().map(render_q).collect(),
        claim_holds: holds,
    })
}

/// Every feasible instance with `n <= n_max`, in a fixed order: by `n`,
/// then E1 over `k`, Case12 over `k`, Case2 over `(n', k)`.
pub fn sweep_instances(n_max: usize) -> Vec<RelaxationInstance> {
    let mut out = Vec::new();
    for n in 3..=n_max {
        for k in 2..n {
            out.push(RelaxationInstance::e1(n, k));
        }
        for k in 2..n {
            // needs n_1 = n - k > n/2
            if 2 * (n - k) > n {
                out.push(RelaxationInstance::case12(n, k));
            }
        }
        for np in 3..=n / 2 {
            for k in 2..np {
                out.push(RelaxationInstance::case2(n, np, k));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n_max: usize,
    pub claims: Vec<ClaimCheck>,
}

impl SweepReport {
    pub fn violations(&self) -> impl Iterator<Item = &ClaimCheck> {
        self.claims.iter().filter(|c| !c.claim_holds)
    }

    pub fn all_hold(&self) -> bool {
        self.violations().next().is_none()
    }
}

/// Checks the claimed optimum of every instance from [`sweep_instances`].
pub fn sweep_claims(n_max: usize) -> SweepReport {
    let claims = sweep_instances(n_max)
        .par_iter()
        .map(|inst| check_claim(inst).expect("swept instances are feasible"))
        .collect();
    SweepReport { n_max, claims }
}

/// Change of the E1 objective when half a unit moves from leg `from` to
/// leg `to` (both zero-based). Returns `None` if the result is infeasible.
pub fn e1_exchange_delta(n: usize, tuple: &[Q], to: usize, from: usize) -> Option<Q> {
    let inst = RelaxationInstance::e1(n, tuple.len());
    let before = inst.objective(tuple).ok()?;
    let mut moved = tuple.to_vec();
    moved[to] += Q::new(1, 2);
    moved[from] -= Q::new(1, 2);
    Some(inst.objective(&moved).ok()? - before)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Q {
        Q::from_integer(v)
    }

    fn ints(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn e1_objective_values() {
        assert_eq!(objective_e1(10, &ints(&[5, 3, 1])).unwrap(), q(76));
        assert_eq!(objective_e1(10, &ints(&[5, 3, 1])).unwrap(), q(72 + (10 - 6) * (3 - 2)));
        assert_eq!(objective_e1(5, &ints(&[1, 1, 1, 1])).unwrap(), q(12));
        assert_eq!(objective_e1(12, &ints(&[6, 3, 1, 1])).unwrap(), q(118));
        assert_eq!(objective_e1(7, &ints(&[2, 1, 1, 1, 1])).unwrap(), q(33));
        // half-integral entries come in pairs, so the value stays integral
        let t = vec![Q::new(9, 2), Q::new(7, 2), q(1)];
        assert_eq!(objective_e1(10, &t).unwrap(), q(78));
    }

    #[test]
    fn e1_objective_rejects_infeasible() {
        assert!(matches!(objective_e1(10, &ints(&[6, 2, 1])), Err(Error::InfeasibleTuple(_))));
        assert!(objective_e1(10, &ints(&[3, 5, 1])).is_err());
        assert!(objective_e1(10, &ints(&[5, 3, 2])).is_err());
        assert!(objective_e1(10, &[Q::new(13, 3), q(3), Q::new(5, 3)]).is_err());
        assert!(objective_case12(10, &ints(&[5, 3, 1])).is_err());
    }

    #[test]
    fn e1_optima() {
        assert_eq!(solve_e1(10, 3).unwrap().tuple, ints(&[5, 3, 1]));
        assert_eq!(solve_e1(5, 4).unwrap().tuple, ints(&[1, 1, 1, 1]));
        assert_eq!(solve_e1(8, 4).unwrap().tuple, ints(&[4, 1, 1, 1]));
        assert!(matches!(solve_e1(3, 3), Err(Error::Infeasible(_))));
    }

    #[test]
    fn case12_optima() {
        let s = solve_case12(10, 3).unwrap();
        assert_eq!(s.tuple, ints(&[7, 1, 1]));
        assert_eq!(s.value, q(72 + 2));
        assert_eq!(solve_case12(9, 4).unwrap().tuple, ints(&[5, 1, 1, 1]));
        assert!(solve_case12(6, 3).is_err());
    }

    #[test]
    fn case2_optima() {
        let s = solve_case2(12, 6, 2).unwrap();
        assert_eq!(s.tuple, ints(&[4, 1]));
        assert_eq!(claimed_value(&s.instance), q(11));
        assert!(s.value >= q(11));
        let s = solve_case2(6, 3, 2).unwrap();
        assert_eq!(s.tuple, ints(&[1, 1]));
        assert_eq!(s.value, q(2));
        assert!(solve_case2(8, 5, 2).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(render_q(&Q::new(153, 2)), "153/2");
        assert_eq!(render_q(&Q::new(8, 4)), "2");
    }

    #[test]
    fn claims_hold_through_twelve() {
        let report = sweep_claims(12);
        assert!(report.all_hold(), "{:?}", report.violations().collect::<Vec<_>>());
    }

    /// Every feasible E1 tuple for small orders.
    fn e1_tuples(n: usize, k: usize) -> Vec<Vec<Q>> {
        let mut out = Vec::new();
        for_each_nonincreasing(2 * (n as i64 - 1), k, n as i64, 2, &mut |u| {
            out.push(u.iter().map(|&x| Q::new(x, 2)).collect());
        });
        out
    }

    #[test]
    fn e1_exchange_moves_match_displayed_differences() {
        let half = Q::new(1, 2);
        for n in 4..=14 {
            for k in 2..n {
                for t in e1_tuples(n, k) {
                    if let Some(d) = e1_exchange_delta(n, &t, 0, 1) {
                        assert_eq!(d, q(-2) * (t[0] - t[1]));
                        assert!(d <= Q::zero());
                    }
                    for i in 2..k {
                        if let Some(d) = e1_exchange_delta(n, &t, 0, i) {
                            assert_eq!(d, q(-2) * (t[0] - t[i]) - half);
                            assert!(d < Q::zero());
                        }
                        if let Some(d) = e1_exchange_delta(n, &t, 1, i) {
                            assert_eq!(d, q(-2) * (t[1] - t[i]) - q(3) * half);
                            assert!(d < Q::zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn case12_exchange_strictly_improves() {
        for n in 7..=16 {
            for k in 3..n {
                let inst = RelaxationInstance::case12(n, k);
                let total = n as i64 - 1;
                for_each_nonincreasing(total, k, total, 1, &mut |u| {
                    let t: Vec<Q> = u.iter().map(|&x| q(x)).collect();
                    let Ok(before) = inst.objective(&t) else { return };
                    for i in 1..k {
                        if u[i] <= 1 {
                            continue;
                        }
                        let step = 4 * (u[0] + u[i]) - 4 * n as i64 + k as i64 + 2;
                        assert!(step <= -3 * k as i64 + 6 && step < 0);
                        // exact difference of the raw expression
                        let mut moved = t.clone();
                        moved[0] += Q::one();
                        moved[i] -= Q::one();
                        assert_eq!(case12_expression(n, &moved) - before, q(step));
                    }
                });
            }
        }
    }
}
