//! Brute-force ground truth: search `x` directly.
//!
//! Search bounds, each safe for a fixed target `n`:
//! - `a_i >= 1`: `a_i·x_i <= a·x <= n - alpha`, so `x_i` never exceeds the
//!   remaining lower budget (in particular `x_i <= n`).
//! - `a_i = 0, b_i >= 1`: raising `x_i` leaves `a·x` alone and only raises
//!   `b·x`, and at `x_i = n + beta` already `b·x - beta >= n`; so
//!   `x_i <= n + beta` loses nothing.
//! - `a_i = b_i = 0`: `x_i` appears on neither side, take `x_i = 0`.

use serde::{Deserialize, Serialize};

use crate::diophantine::NatVec;
use crate::error::{Error, Result};
use crate::instance::ProblemInstance;
use crate::solver::SolveReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub n: u64,
    pub solver_says: bool,
    pub oracle_says: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub bound: u64,
    /// Members of `S` up to `bound`; 0 only if it satisfies the inequalities.
    pub members: Vec<u64>,
    pub disagreements: Vec<Disagreement>,
}

impl OracleReport {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Per-coordinate upper limit for targets up to `n`.
fn coordinate_cap(instance: &ProblemInstance, i: usize, n: u64, lower_budget: u64) -> u64 {
    match (instance.a[i], instance.b[i]) {
        (0, 0) => 0,
        (0, _) => n.saturating_add(instance.beta),
        (a, _) => lower_budget / a,
    }
}

/// Finds some `x` with `a·x + alpha <= n <= b·x - beta`.
///
/// Coordinates are tried in lexicographic order, so the witness is the
/// lexicographically smallest one within the search box.
pub fn feasible(n: u64, instance: &ProblemInstance) -> Option<NatVec> {
    let budget = n.checked_sub(instance.alpha)?;
    let target = n as u128 + instance.beta as u128;
    let mut x = vec![0u64; instance.dim()];
    search(instance, n, target, 0, budget, 0, &mut x).then_some(NatVec(x))
}

fn search(
    instance: &ProblemInstance,
    n: u64,
    target: u128,
    i: usize,
    lower_budget: u64,
    upper: u128,
    x: &mut [u64],
) -> bool {
    if i == x.len() {
        return upper >= target;
    }
    let cap = coordinate_cap(instance, i, n, lower_budget);
    for v in 0..=cap {
        x[i] = v;
        let spent = instance.a[i] * v;
        let up = upper + instance.b[i] as u128 * v as u128;
        if search(instance, n, target, i + 1, lower_budget - spent, up, x) {
            return true;
        }
    }
    x[i] = 0;
    false
}

/// `{n <= bound : feasible(n)}`.
///
/// Every `x` reachable for some `n <= bound` lies in the box for `bound`,
/// and any `x` at all is a valid certificate, so marking the interval
/// `[a·x + alpha, b·x - beta]` of each box point gives the same set as
/// testing each `n` separately.
pub fn brute_force_set(instance: &ProblemInstance, bound: u64) -> Result<Vec<u64>> {
    let Some(budget) = bound.checked_sub(instance.alpha) else {
        return Ok(Vec::new());
    };
    let len = usize::try_from(bound)
        .ok()
        .and_then(|b| b.checked_add(2))
        .ok_or(Error::TooLarge(bound))?;
    // Difference array: prefix sums count the intervals covering n.
    let mut delta = vec![0i64; len];
    let mut x = vec![0u64; instance.dim()];
    mark(instance, bound, 0, budget, 0, &mut x, &mut delta);

    let mut members = Vec::new();
    let mut running = 0i64;
    for (n, d) in delta.iter().take(len - 1).enumerate() {
        running += d;
        if running > 0 {
            members.push(n as u64);
        }
    }
    Ok(members)
}

fn mark(
    instance: &ProblemInstance,
    bound: u64,
    i: usize,
    lower_budget: u64,
    upper: u128,
    x: &mut [u64],
    delta: &mut [i64],
) {
    if i == x.len() {
        // a·x + alpha = bound - lower_budget
        let lo = bound - lower_budget;
        let Some(hi) = upper.checked_sub(instance.beta as u128) else {
            return;
        };
        let hi = hi.min(bound as u128) as u64;
        if lo <= hi {
            delta[lo as usize] += 1;
            delta[hi as usize + 1] -= 1;
        }
        return;
    }
    let cap = coordinate_cap(instance, i, bound, lower_budget);
    for v in 0..=cap {
        x[i] = v;
        let spent = instance.a[i] * v;
        let up = upper + instance.b[i] as u128 * v as u128;
        mark(instance, bound, i + 1, lower_budget - spent, up, x, delta);
    }
}

/// Compares the report's monoid against brute force for every `n <= bound`.
///
/// At `n = 0` the report's `zero_in_s` flag is compared with direct
/// feasibility of 0; elsewhere descriptor membership is compared with
/// feasibility of `n`.
pub fn agree(report: &SolveReport, bound: u64) -> Result<OracleReport> {
    let members = brute_force_set(&report.instance, bound)?;
    let mut disagreements = Vec::new();
    let mut it = members.iter().peekable();
    for n in 0..=bound {
        let oracle_says = it.next_if_eq(&&n).is_some();
        let solver_says = if n == 0 {
            report.zero_in_s
        } else {
            report.monoid.contains(n)
        };
        if solver_says != oracle_says {
            disagreements.push(Disagreement {
                n,
                solver_says,
                oracle_says,
            });
        }
    }
    Ok(OracleReport {
        bound,
        members,
        disagreements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::solve;
    use crate::submonoid::{GeneratorSet, MonoidDescriptor};

    fn inst(a: &[u64], b: &[u64], alpha: u64, beta: u64) -> ProblemInstance {
        ProblemInstance::new(a.to_vec(), b.to_vec(), alpha, beta).unwrap()
    }

    #[test]
    fn feasible_examples() {
        let i = inst(&[4, 5], &[3, 6], 3, 1);
        assert_eq!(feasible(23, &i), Some(NatVec(vec![0, 4])));
        assert_eq!(feasible(22, &i), None);
        assert_eq!(feasible(0, &inst(&[1], &[2], 0, 0)), Some(NatVec(vec![0])));
        assert_eq!(feasible(2, &inst(&[1], &[2], 3, 0)), None);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_force_set(&inst(&[4, 5], &[3, 6], 0, 0), 14).unwrap(),
            vec![0, 5, 6, 9, 10, 11, 12, 14]
        );
        assert_eq!(
            brute_force_set(&inst(&[4, 5], &[3, 6], 3, 1), 37).unwrap(),
            vec![23, 28, 29, 32, 33, 34, 35, 37]
        );
        assert!(brute_force_set(&inst(&[3], &[2], 5, 0), 50)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn brute_force_matches_pointwise_search() {
        let cases = [
            inst(&[0, 2], &[3, 1], 1, 2),
            inst(&[0, 0], &[0, 2], 0, 3),
            inst(&[2, 0, 1], &[5, 0, 1], 2, 0),
            inst(&[1], &[1], 0, 0),
        ];
        for i in &cases {
            let pointwise: Vec<u64> = (0..=40).filter(|&n| feasible(n, i).is_some()).collect();
            assert_eq!(brute_force_set(i, 40).unwrap(), pointwise, "{i:?}");
        }
    }

    #[test]
    fn agreement_and_corruption() {
        let r = solve(&inst(&[4, 5], &[3, 6], 3, 1)).unwrap();
        assert!(agree(&r, 60).unwrap().agrees());
        let mut r = solve(&inst(&[4, 5], &[3, 6], 0, 0)).unwrap();
        assert!(agree(&r, 60).unwrap().agrees());

        r.monoid = MonoidDescriptor::from_generators(&GeneratorSet::new([5, 6])).unwrap();
        let report = agree(&r, 60).unwrap();
        assert!(!report.agrees());
        assert_eq!(
            report.disagreements[0],
            Disagreement {
                n: 9,
                solver_says: false,
                oracle_says: true
            }
        );
    }
}
