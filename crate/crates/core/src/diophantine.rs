//! Minimal non-negative solutions of a single homogeneous linear equation,
//! and the decomposition of the feasible region of `(b-a)·x >= alpha+beta`
//! into minimal points plus the monoid `A(b-a) = {x : (b-a)·x >= 0}`.
//!
//! Minimal solutions are enumerated exhaustively up to a bound on the
//! coordinate sum: every componentwise-minimal non-zero solution of
//! `c·x = 0` has `x_1 + ... + x_q <= |c_1| + ... + |c_q| + 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::ProblemInstance;

/// Coefficient vector of a linear form over the integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVec(pub Vec<i64>);

/// A point of `N^q`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NatVec(pub Vec<u64>);

impl IntVec {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Exact `self · x`.
    pub fn dot(&self, x: &NatVec) -> i128 {
        debug_assert_eq!(self.len(), x.len());
        self.0
            .iter()
            .zip(&x.0)
            .map(|(&c, &v)| c as i128 * v as i128)
            .sum()
    }

    /// `sum |c_i| + 1`, the coordinate-sum budget for minimal solutions.
    pub fn pottier_budget(&self) -> Result<u64> {
        self.0
            .iter()
            .try_fold(1u64, |acc, c| acc.checked_add(c.unsigned_abs()))
            .ok_or(Error::Overflow("computing the enumeration budget"))
    }
}

impl NatVec {
    pub fn zeros(len: usize) -> Self {
        NatVec(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    /// Componentwise `self <= other`.
    pub fn le_componentwise(&self, other: &NatVec) -> bool {
        self.0.iter().zip(&other.0).all(|(x, y)| x <= y)
    }

    /// `other - self` if it stays in `N^q`.
    pub fn checked_diff(&self, other: &NatVec) -> Option<NatVec> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(x, y)| y.checked_sub(*x))
            .collect::<Option<Vec<_>>>()
            .map(NatVec)
    }

    /// Drops the trailing `k` coordinates.
    pub fn truncate(&self, keep: usize) -> NatVec {
        NatVec(self.0[..keep].to_vec())
    }

    /// Non-negative dot product with a coefficient vector of naturals.
    pub fn weighted_sum(&self, weights: &[u64]) -> Result<u64> {
        debug_assert_eq!(weights.len(), self.len());
        weights.iter().zip(&self.0).try_fold(0u64, |acc, (&w, &v)| {
            w.checked_mul(v)
                .and_then(|t| acc.checked_add(t))
                .ok_or(Error::Overflow("evaluating a linear form"))
        })
    }
}

impl fmt::Display for NatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// The generators of `A(b-a)` and the minimal points of the feasible region,
/// together with the minimal solutions that were set aside.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CdDecomposition {
    pub d_set: Vec<NatVec>,
    pub c_set: Vec<NatVec>,
    /// Minimal solutions of the slack equation whose last coordinate is >= 2.
    pub discarded: Vec<NatVec>,
}

/// Componentwise-minimal elements of `{x in N^q : coeffs·x = 0} \ {0}`,
/// sorted lexicographically.
pub fn minimal_homogeneous_solutions(coeffs: &IntVec) -> Result<Vec<NatVec>> {
    let budget = coeffs.pottier_budget()?;
    Ok(minimal_solutions_within(coeffs, budget))
}

/// Minimal non-zero solutions among those with coordinate sum at most `budget`.
///
/// With `budget` at least the value of [`IntVec::pottier_budget`] this is the
/// full set of minimal solutions.
pub fn minimal_solutions_within(coeffs: &IntVec, budget: u64) -> Vec<NatVec> {
    if coeffs.is_empty() {
        return Vec::new();
    }
    let c: Vec<i128> = coeffs.0.iter().map(|&v| v as i128).collect();
    let q = c.len();

    // Largest positive and largest negative magnitude among coordinates i..q.
    let mut max_pos = vec![0i128; q + 1];
    let mut max_neg = vec![0i128; q + 1];
    for i in (0..q).rev() {
        max_pos[i] = max_pos[i + 1].max(c[i]);
        max_neg[i] = max_neg[i + 1].max(-c[i]);
    }

    let mut search = Search {
        c: &c,
        max_pos: &max_pos,
        max_neg: &max_neg,
        point: vec![0; q],
        found: Vec::new(),
    };
    search.descend(0, 0, budget as i128);

    let mut solutions = minimal_elements(search.found);
    solutions.sort();
    solutions
}

struct Search<'a> {
    c: &'a [i128],
    max_pos: &'a [i128],
    max_neg: &'a [i128],
    point: Vec<u64>,
    found: Vec<NatVec>,
}

impl Search<'_> {
    fn descend(&mut self, i: usize, partial: i128, remaining: i128) {
        let q = self.c.len();
        if i == q {
            if partial == 0 && self.point.iter().any(|&v| v > 0) {
                self.found.push(NatVec(self.point.clone()));
            }
            return;
        }
        // The remaining coordinates can move the partial sum by at most
        // max_pos * remaining upwards and max_neg * remaining downwards.
        if partial + self.max_pos[i] * remaining < 0 || partial - self.max_neg[i] * remaining > 0 {
            return;
        }
        let ci = self.c[i];
        if i + 1 == q {
            // Last coordinate is forced.
            let value = if ci == 0 {
                if partial != 0 {
                    return;
                }
                // Any value works; only 0 and 1 can be minimal.
                if self.point[..i].iter().all(|&v| v == 0) {
                    1
                } else {
                    0
                }
            } else {
                if partial % ci != 0 {
                    return;
                }
                let v = -partial / ci;
                if v < 0 || v > remaining {
                    return;
                }
                v
            };
            if value > remaining {
                return;
            }
            self.point[i] = value as u64;
            self.descend(q, partial + ci * value, remaining - value);
            self.point[i] = 0;
            return;
        }
        // A solution with x_i > 0 at a zero coefficient dominates the unit
        // vector e_i, so only 0 and 1 need visiting there.
        let top = if ci == 0 { remaining.min(1) } else { remaining };
        for v in 0..=top {
            self.point[i] = v as u64;
            self.descend(i + 1, partial + ci * v, remaining - v);
        }
        self.point[i] = 0;
    }
}

/// Keeps the componentwise-minimal members, removing duplicates.
pub fn minimal_elements(mut points: Vec<NatVec>) -> Vec<NatVec> {
    points.sort_by_key(|p| p.0.iter().sum::<u64>());
    points.dedup();
    let mut kept: Vec<NatVec> = Vec::new();
    for p in points {
        // Anything below p has a strictly smaller coordinate sum, so it was
        // already seen.
        if !kept.iter().any(|k| k.le_componentwise(&p)) {
            kept.push(p);
        }
    }
    kept
}

/// A system of generators of `A(z) = {x in N^p : z·x >= 0}`.
pub fn generators_of_a(z: &IntVec) -> Result<Vec<NatVec>> {
    let mut coeffs = z.0.clone();
    coeffs.push(-1);
    let mut gens: Vec<NatVec> = minimal_homogeneous_solutions(&IntVec(coeffs))?
        .into_iter()
        .map(|s| s.truncate(z.len()))
        .filter(|g| !g.is_zero())
        .collect();
    gens.sort();
    gens.dedup();
    Ok(gens)
}

/// `x <=_{A(z)} y`, that is `y - x` lies in `N^p` and `z·(y - x) >= 0`.
pub fn leq_a(x: &NatVec, y: &NatVec, z: &IntVec) -> bool {
    match x.checked_diff(y) {
        Some(diff) => z.dot(&diff) >= 0,
        None => false,
    }
}

/// Splits the minimal solutions of
/// `(b-a)·x - x_{p+1} - (alpha+beta)·x_{p+2} = 0` by their last coordinate.
pub fn cd_decomposition(instance: &ProblemInstance) -> Result<CdDecomposition> {
    let offset = instance
        .alpha
        .checked_add(instance.beta)
        .ok_or(Error::Overflow("adding offsets"))?;
    if offset == 0 {
        return Err(Error::DegenerateOffsets);
    }
    let z = instance.difference()?;
    let p = z.len();
    let mut coeffs = z.0.clone();
    coeffs.push(-1);
    coeffs.push(-i64::try_from(offset).map_err(|_| Error::Overflow("negating offsets"))?);

    let mut d_set = Vec::new();
    let mut candidates = Vec::new();
    let mut discarded = Vec::new();
    for s in minimal_homogeneous_solutions(&IntVec(coeffs))? {
        match s.0[p + 1] {
            0 => d_set.push(s.truncate(p)),
            1 => candidates.push(s.truncate(p)),
            _ => discarded.push(s),
        }
    }
    d_set.retain(|d: &NatVec| !d.is_zero());
    d_set.sort();
    d_set.dedup();
    candidates.sort();
    candidates.dedup();

    let c_set = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|other| other != *c && leq_a(other, c, &z))
        })
        .cloned()
        .collect();

    Ok(CdDecomposition {
        d_set,
        c_set,
        discarded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nv(v: &[u64]) -> NatVec {
        NatVec(v.to_vec())
    }

    fn sols(c: &[i64]) -> Vec<NatVec> {
        minimal_homogeneous_solutions(&IntVec(c.to_vec())).unwrap()
    }

    #[test]
    fn minimal_solutions_of_worked_equations() {
        assert_eq!(sols(&[-1, 1, -1]), vec![nv(&[0, 1, 1]), nv(&[1, 1, 0])]);
        assert_eq!(
            sols(&[-1, 1, -1, -4]),
            vec![nv(&[0, 1, 1, 0]), nv(&[0, 4, 0, 1]), nv(&[1, 1, 0, 0])]
        );
        assert_eq!(sols(&[-1, 0, -1]), vec![nv(&[0, 1, 0])]);
        assert!(sols(&[-1, -1]).is_empty());
    }

    #[test]
    fn slack_solution_with_large_last_coordinate() {
        assert!(sols(&[5, -1, -2]).contains(&nv(&[1, 1, 2])));
    }

    #[test]
    fn zero_coefficients_give_unit_vectors() {
        assert_eq!(sols(&[0, 0]), vec![nv(&[0, 1]), nv(&[1, 0])]);
        assert_eq!(sols(&[0]), vec![nv(&[1])]);
    }

    #[test]
    fn generators_of_a_examples() {
        let g = |z: &[i64]| generators_of_a(&IntVec(z.to_vec())).unwrap();
        assert_eq!(g(&[-1, 1]), vec![nv(&[0, 1]), nv(&[1, 1])]);
        assert_eq!(g(&[-1, 0]), vec![nv(&[0, 1])]);
        assert!(g(&[-5, -3]).is_empty());
    }

    #[test]
    fn leq_a_examples() {
        let z = IntVec(vec![-1, 1]);
        assert!(leq_a(&nv(&[0, 4]), &nv(&[1, 5]), &z));
        assert!(!leq_a(&nv(&[0, 1]), &nv(&[1, 1]), &z));
        assert!(leq_a(&nv(&[3, 2]), &nv(&[3, 2]), &z));
        assert!(!leq_a(&nv(&[1, 0]), &nv(&[0, 5]), &z));
    }

    #[test]
    fn cd_decomposition_examples() {
        let inst = ProblemInstance::new(vec![4, 5], vec![3, 6], 3, 1).unwrap();
        let cd = cd_decomposition(&inst).unwrap();
        assert_eq!(cd.d_set, vec![nv(&[0, 1]), nv(&[1, 1])]);
        assert_eq!(cd.c_set, vec![nv(&[0, 4])]);
        assert!(cd.discarded.is_empty());

        // x1 - x2 - x3 = 0 has minimal solutions (1,1,0) and (1,0,1) only.
        let inst = ProblemInstance::new(vec![1], vec![2], 0, 1).unwrap();
        let cd = cd_decomposition(&inst).unwrap();
        assert_eq!(cd.d_set, vec![nv(&[1])]);
        assert_eq!(cd.c_set, vec![nv(&[1])]);

        let inst = ProblemInstance::new(vec![2], vec![1], 1, 0).unwrap();
        let cd = cd_decomposition(&inst).unwrap();
        assert!(cd.d_set.is_empty());
        assert!(cd.c_set.is_empty());
    }

    #[test]
    fn cd_decomposition_rejects_zero_offsets() {
        let inst = ProblemInstance::new(vec![1], vec![2], 0, 0).unwrap();
        assert_eq!(cd_decomposition(&inst), Err(Error::DegenerateOffsets));
    }

    #[test]
    fn minimal_elements_drops_dominated_and_duplicates() {
        let pts = vec![nv(&[1, 1]), nv(&[2, 1]), nv(&[1, 1]), nv(&[0, 3])];
        let mut m = minimal_elements(pts);
        m.sort();
        assert_eq!(m, vec![nv(&[0, 3]), nv(&[1, 1])]);
    }
}
