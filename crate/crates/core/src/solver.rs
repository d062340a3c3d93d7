//! Computes `S(a, b, alpha, beta) ∪ {0}` for an instance.
//!
//! With zero offsets the monoid is generated by the intervals
//! `[a·m, b·m]` over generators `m` of `A(b-a)`. Otherwise it is the
//! smallest `D`-monoid containing `C`, where `C` collects the intervals
//! `[a·c + alpha, b·c - beta]` over the minimal feasible points `c` and `D`
//! the offset-free intervals over the generators of `A(b-a)`.

use serde::{Deserialize, Serialize};

use crate::diophantine::{cd_decomposition, generators_of_a, CdDecomposition, NatVec};
use crate::error::{Error, Result};
use crate::instance::ProblemInstance;
use crate::oracle;
use crate::submonoid::{smallest_b_monoid, GeneratorSet, MonoidDescriptor};

/// A non-empty closed integer range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[u64; 2]", try_from = "[u64; 2]")]
pub struct Interval {
    lo: u64,
    hi: u64,
}

impl Interval {
    pub fn new(lo: u64, hi: u64) -> Option<Self> {
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    pub fn contains(&self, n: u64) -> bool {
        self.lo <= n && n <= self.hi
    }

    /// Positive members of the interval that can be minimal generators.
    ///
    /// With `l = max(lo, 1)`, anything in `[2l, hi]` is `l + (n - l)` with
    /// both summands in the interval, so only `[l, min(hi, 2l - 1)]` matters.
    pub fn generator_material(&self) -> impl Iterator<Item = u64> {
        let l = self.lo.max(1);
        let top = self.hi.min(l.saturating_mul(2) - 1);
        l..=top
    }
}

impl From<Interval> for [u64; 2] {
    fn from(i: Interval) -> Self {
        [i.lo, i.hi]
    }
}

impl TryFrom<[u64; 2]> for Interval {
    type Error = String;

    fn try_from([lo, hi]: [u64; 2]) -> std::result::Result<Self, Self::Error> {
        Interval::new(lo, hi).ok_or_else(|| format!("empty interval [{lo},{hi}]"))
    }
}

/// Which of the three structural cases an instance falls into.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseTag {
    /// All `a_i >= b_i` with every inequality strict, or with non-zero
    /// offsets: the monoid is `{0}`.
    EmptyOrTrivial,
    /// All `a_i >= b_i`, some equal, zero offsets: the monoid is generated
    /// by `{a_i : i in equal_coords}`. Coordinates are 1-based.
    DiagonalSubmonoid { equal_coords: Vec<usize> },
    /// Some `a_j < b_j` (first such `j`, 1-based): a numerical semigroup.
    NumericalSemigroup { witness_j: usize },
}

impl CaseTag {
    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::EmptyOrTrivial => "empty_or_trivial",
            CaseTag::DiagonalSubmonoid { .. } => "diagonal_submonoid",
            CaseTag::NumericalSemigroup { .. } => "numerical_semigroup",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub instance: ProblemInstance,
    pub case_tag: CaseTag,
    /// Whether `n = 0` itself satisfies the inequalities, as opposed to
    /// being adjoined as the identity.
    pub zero_in_s: bool,
    pub cd: Option<CdDecomposition>,
    pub c_intervals: Vec<Interval>,
    pub d_intervals: Vec<Interval>,
    pub monoid: MonoidDescriptor,
}

impl SolveReport {
    pub fn witness_j(&self) -> Option<usize> {
        match self.case_tag {
            CaseTag::NumericalSemigroup { witness_j } => Some(witness_j),
            _ => None,
        }
    }
}

/// `[a·m + alpha, b·m - beta]` (or without the offsets), if non-empty.
pub fn interval_of(
    m: &NatVec,
    instance: &ProblemInstance,
    with_offsets: bool,
) -> Result<Option<Interval>> {
    let (alpha, beta) = if with_offsets {
        (instance.alpha, instance.beta)
    } else {
        (0, 0)
    };
    let lo = instance
        .lower_form(m)?
        .checked_add(alpha)
        .ok_or(Error::Overflow("offsetting an interval"))?;
    let Some(hi) = instance.upper_form(m)?.checked_sub(beta) else {
        return Ok(None);
    };
    Ok(Interval::new(lo, hi))
}

fn intervals_over(
    points: &[NatVec],
    instance: &ProblemInstance,
    with_offsets: bool,
) -> Result<Vec<Interval>> {
    let mut out = Vec::new();
    for m in points {
        if let Some(i) = interval_of(m, instance, with_offsets)? {
            out.push(i);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn material(intervals: &[Interval]) -> GeneratorSet {
    intervals
        .iter()
        .flat_map(Interval::generator_material)
        .collect()
}

/// Case `alpha = beta = 0`.
pub fn solve_zero_case(instance: &ProblemInstance) -> Result<SolveReport> {
    if instance.has_offsets() {
        return Err(Error::InternalInconsistency(
            "zero-offset solver called with offsets".into(),
        ));
    }
    let gens = generators_of_a(&instance.difference()?)?;
    let intervals = intervals_over(&gens, instance, false)?;
    let monoid = MonoidDescriptor::from_generators(&material(&intervals))?;
    Ok(SolveReport {
        instance: instance.clone(),
        case_tag: classify(instance),
        zero_in_s: true,
        cd: None,
        c_intervals: Vec::new(),
        d_intervals: intervals,
        monoid,
    })
}

/// Case `(alpha, beta) != (0, 0)`.
pub fn solve_general(instance: &ProblemInstance) -> Result<SolveReport> {
    let cd = cd_decomposition(instance)?;
    let assembled = assemble(instance, &cd.c_set, &cd.d_set)?;
    Ok(SolveReport {
        instance: instance.clone(),
        case_tag: classify(instance),
        zero_in_s: assembled.zero_in_s,
        cd: Some(cd),
        c_intervals: assembled.c_intervals,
        d_intervals: assembled.d_intervals,
        monoid: assembled.monoid,
    })
}

/// Intervals and monoid built from minimal points and shift generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assembled {
    pub c_intervals: Vec<Interval>,
    pub d_intervals: Vec<Interval>,
    pub zero_in_s: bool,
    pub monoid: MonoidDescriptor,
}

/// Smallest `D`-monoid containing `C`, where `C` and `D` are the interval
/// unions over `c_set` (with offsets) and `d_set` (without).
pub fn assemble(
    instance: &ProblemInstance,
    c_set: &[NatVec],
    d_set: &[NatVec],
) -> Result<Assembled> {
    let c_intervals = intervals_over(c_set, instance, true)?;
    let d_intervals = intervals_over(d_set, instance, false)?;
    let zero_in_s = c_intervals.iter().any(|i| i.contains(0));
    let monoid = if c_intervals.is_empty() {
        MonoidDescriptor::trivial()
    } else {
        let shifts = material(&d_intervals);
        // The closure never shifts the element 0, yet 0 ∈ C puts every
        // interval [a·d, b·d] inside S directly.
        let seed = if zero_in_s {
            c_intervals
                .iter()
                .chain(&d_intervals)
                .flat_map(Interval::generator_material)
                .collect()
        } else {
            material(&c_intervals)
        };
        smallest_b_monoid(&seed, &shifts)?.monoid
    };
    Ok(Assembled {
        c_intervals,
        d_intervals,
        zero_in_s,
        monoid,
    })
}

pub fn classify(instance: &ProblemInstance) -> CaseTag {
    let pairs = || instance.a.iter().zip(&instance.b);
    if let Some(j) = pairs().position(|(a, b)| a < b) {
        return CaseTag::NumericalSemigroup { witness_j: j + 1 };
    }
    let equal_coords: Vec<usize> = pairs()
        .enumerate()
        .filter(|(_, (a, b))| a == b)
        .map(|(i, _)| i + 1)
        .collect();
    if !equal_coords.is_empty() && !instance.has_offsets() {
        CaseTag::DiagonalSubmonoid { equal_coords }
    } else {
        CaseTag::EmptyOrTrivial
    }
}

/// Solves the instance and cross-checks the result against its case.
pub fn solve(instance: &ProblemInstance) -> Result<SolveReport> {
    let instance = instance.clone().validate()?;
    let report = if instance.has_offsets() {
        solve_general(&instance)?
    } else {
        solve_zero_case(&instance)?
    };
    check_case(&report)?;
    Ok(report)
}

fn check_case(report: &SolveReport) -> Result<()> {
    let monoid = &report.monoid;
    match &report.case_tag {
        CaseTag::EmptyOrTrivial if !monoid.is_trivial() => {
            Err(Error::InternalInconsistency(format!(
                "case 1 instance produced non-trivial generators {:?}",
                monoid.msg.as_slice()
            )))
        }
        CaseTag::NumericalSemigroup { .. } if !monoid.is_numerical => Err(
            Error::InternalInconsistency(format!("case 3 instance produced gcd {}", monoid.gcd)),
        ),
        CaseTag::DiagonalSubmonoid { equal_coords } => {
            let predicted =
                GeneratorSet::new(equal_coords.iter().map(|&i| report.instance.a[i - 1]));
            let expected = MonoidDescriptor::from_generators(&predicted)?;
            if expected.msg != monoid.msg {
                return Err(Error::InternalInconsistency(format!(
                    "case 2 instance produced {:?}, expected {:?}",
                    monoid.msg.as_slice(),
                    expected.msg.as_slice()
                )));
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

/// How a number relates to `S ∪ {0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// `n` satisfies the inequalities, certified by `witness`.
    InS {
        witness: NatVec,
    },
    /// `n = 0` is in the monoid only as the adjoined identity.
    AdjoinedZero,
    NotMember,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        !matches!(self, Membership::NotMember)
    }
}

/// Answers membership from the descriptor and extracts a certificate.
pub fn membership_with_witness(n: u64, report: &SolveReport) -> Result<Membership> {
    let claimed = if n == 0 {
        report.zero_in_s
    } else {
        report.monoid.contains(n)
    };
    if !claimed {
        return Ok(if n == 0 {
            Membership::AdjoinedZero
        } else {
            Membership::NotMember
        });
    }
    match oracle::feasible(n, &report.instance) {
        Some(witness) => Ok(Membership::InS { witness }),
        None => Err(Error::WitnessSearchFailure(n)),
    }
}
