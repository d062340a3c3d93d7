//! Finitely generated submonoids of `(N, +)`.
//!
//! Everything here works on explicit generator lists: membership by a
//! boolean reachability table, the minimal system of generators, gcd
//! normalization, Frobenius number and gaps, and the closure of a set under
//! `(M \ {0}) + B ⊆ M`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest reachability table we are willing to allocate.
pub const MAX_TABLE_LEN: u64 = 1 << 28;

/// Generators of a submonoid of `(N, +)`: positive, distinct, ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<u64>", into = "Vec<u64>")]
pub struct GeneratorSet(Vec<u64>);

impl GeneratorSet {
    pub fn new<I: IntoIterator<Item = u64>>(gens: I) -> Self {
        let mut v: Vec<u64> = gens.into_iter().filter(|&g| g != 0).collect();
        v.sort_unstable();
        v.dedup();
        GeneratorSet(v)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<u64> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn gcd(&self) -> u64 {
        self.0.iter().fold(0, |acc, &g| gcd(acc, g))
    }

    pub fn contains(&self, g: u64) -> bool {
        self.0.binary_search(&g).is_ok()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }
}

impl From<Vec<u64>> for GeneratorSet {
    fn from(v: Vec<u64>) -> Self {
        GeneratorSet::new(v)
    }
}

impl From<GeneratorSet> for Vec<u64> {
    fn from(g: GeneratorSet) -> Self {
        g.0
    }
}

impl FromIterator<u64> for GeneratorSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        GeneratorSet::new(iter)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn table_len(limit: u64) -> Result<usize> {
    if limit >= MAX_TABLE_LEN {
        return Err(Error::TooLarge(limit));
    }
    Ok(limit as usize + 1)
}

/// `reach[n]` is true iff `n` is a non-negative combination of `gens`, for
/// `n` in `0..=limit`.
fn reachability(gens: &[u64], limit: u64) -> Result<Vec<bool>> {
    let mut reach = vec![false; table_len(limit)?];
    reach[0] = true;
    for &g in gens {
        add_generator(&mut reach, g);
    }
    Ok(reach)
}

/// Closes `reach` under adding `g`.
fn add_generator(reach: &mut [bool], g: u64) {
    let g = g as usize;
    for n in g..reach.len() {
        if reach[n - g] {
            reach[n] = true;
        }
    }
}

/// Whether `n` lies in the monoid generated by `gens`.
///
/// Beyond `(min - 1)(max - 1)` every multiple of the gcd is a member, so
/// the table never needs to grow past that.
pub fn membership(n: u64, gens: &GeneratorSet) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    let d = gens.gcd();
    if d == 0 || !n.is_multiple_of(d) {
        return Ok(false);
    }
    let m = n / d;
    let normalized: Vec<u64> = gens.as_slice().iter().map(|g| g / d).collect();
    let lo = normalized[0];
    let hi = normalized[normalized.len() - 1];
    if let Some(schur) = (lo - 1).checked_mul(hi - 1) {
        if m >= schur {
            return Ok(true);
        }
    }
    Ok(reachability(&normalized, m)?[m as usize])
}

/// The minimal system of generators of the monoid generated by `gens`.
///
/// A generator is kept iff it is not a sum of two non-zero members, which
/// for an ascending scan is the same as not being reachable from the
/// generators kept so far.
pub fn msg(gens: &GeneratorSet) -> Result<GeneratorSet> {
    let Some(max) = gens.max() else {
        return Ok(GeneratorSet::default());
    };
    let d = gens.gcd();
    let mut reach = vec![false; table_len(max / d)?];
    reach[0] = true;
    let mut minimal = Vec::new();
    for &g in gens.as_slice() {
        let k = g / d;
        if !reach[k as usize] {
            minimal.push(g);
            add_generator(&mut reach, k);
        }
    }
    Ok(GeneratorSet(minimal))
}

/// `(gcd, gens / gcd)`.
pub fn gcd_normalize(gens: &GeneratorSet) -> Result<(u64, GeneratorSet)> {
    if gens.is_empty() {
        return Err(Error::EmptyGeneratorSet);
    }
    let d = gens.gcd();
    Ok((
        d,
        GeneratorSet(gens.as_slice().iter().map(|g| g / d).collect()),
    ))
}

/// Frobenius number, conductor and gaps of a numerical semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusData {
    pub frobenius: Option<u64>,
    pub conductor: u64,
    pub gaps: Vec<u64>,
}

/// Scans upwards until `min(gens)` consecutive members are found; from the
/// start of that run on, adding `min(gens)` covers everything.
pub fn frobenius_and_gaps(gens: &GeneratorSet) -> Result<FrobeniusData> {
    let (Some(lo), Some(hi)) = (gens.min(), gens.max()) else {
        return Err(Error::EmptyGeneratorSet);
    };
    let d = gens.gcd();
    if d != 1 {
        return Err(Error::NotNumerical(d));
    }
    let cap = lo
        .checked_mul(hi)
        .and_then(|v| v.checked_add(lo))
        .ok_or(Error::Overflow("bounding the conductor search"))?;
    let reach = reachability(gens.as_slice(), cap)?;

    let mut run = 0u64;
    for (n, &member) in reach.iter().enumerate() {
        if member {
            run += 1;
            if run == lo {
                let conductor = n as u64 + 1 - lo;
                let gaps = (1..conductor).filter(|&k| !reach[k as usize]).collect();
                return Ok(FrobeniusData {
                    frobenius: conductor.checked_sub(1),
                    conductor,
                    gaps,
                });
            }
        } else {
            run = 0;
        }
    }
    Err(Error::SafetyCap(cap))
}

/// Finite description of a submonoid of `(N, +)`.
///
/// `frobenius`, `conductor` and `gaps` describe the monoid divided by its
/// gcd. The trivial monoid `{0}` has gcd 0 and no generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidDescriptor {
    pub gcd: u64,
    pub msg: GeneratorSet,
    pub frobenius: Option<u64>,
    pub conductor: u64,
    pub gaps: Vec<u64>,
    pub is_numerical: bool,
}

impl MonoidDescriptor {
    pub fn trivial() -> Self {
        MonoidDescriptor {
            gcd: 0,
            msg: GeneratorSet::default(),
            frobenius: None,
            conductor: 0,
            gaps: Vec::new(),
            is_numerical: false,
        }
    }

    pub fn from_generators(gens: &GeneratorSet) -> Result<Self> {
        let minimal = msg(gens)?;
        if minimal.is_empty() {
            return Ok(Self::trivial());
        }
        let (d, normalized) = gcd_normalize(&minimal)?;
        let FrobeniusData {
            frobenius,
            conductor,
            gaps,
        } = frobenius_and_gaps(&normalized)?;
        Ok(MonoidDescriptor {
            gcd: d,
            msg: minimal,
            frobenius,
            conductor,
            gaps,
            is_numerical: d == 1,
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.msg.is_empty()
    }

    pub fn contains(&self, n: u64) -> bool {
        if n == 0 {
            return true;
        }
        if self.gcd == 0 || !n.is_multiple_of(self.gcd) {
            return false;
        }
        let m = n / self.gcd;
        m >= self.conductor || self.gaps.binary_search(&m).is_err()
    }

    /// Smallest element from which on every multiple of the gcd is a member.
    pub fn scaled_conductor(&self) -> u64 {
        self.gcd.saturating_mul(self.conductor)
    }

    /// Members up to and including `up_to`, ascending.
    pub fn elements_up_to(&self, up_to: u64) -> Vec<u64> {
        if self.gcd == 0 {
            return vec![0];
        }
        (0..=up_to / self.gcd)
            .map(|k| k * self.gcd)
            .filter(|&n| self.contains(n))
            .collect()
    }
}

pub fn enumerate_elements(desc: &MonoidDescriptor, up_to: u64) -> Vec<u64> {
    desc.elements_up_to(up_to)
}

/// Result of the B-monoid closure together with the successive minimal
/// generating sets it passed through.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    pub monoid: MonoidDescriptor,
    pub trace: Vec<GeneratorSet>,
}

/// Smallest submonoid `M` of `(N, +)` containing `a` with
/// `(M \ {0}) + b ⊆ M`.
///
/// Iterates `X <- msg(X ∪ (X + B))` from `X = msg(A)`. It is enough to test
/// the condition on generators, so a stable `X` is the answer.
pub fn smallest_b_monoid(a: &GeneratorSet, b: &GeneratorSet) -> Result<Closure> {
    let mut x = msg(a)?;
    if x.is_empty() {
        return Ok(Closure {
            monoid: MonoidDescriptor::trivial(),
            trace: vec![x],
        });
    }
    let estimate = x
        .min()
        .unwrap_or(0)
        .saturating_mul(x.max().unwrap_or(0).max(b.max().unwrap_or(0)));
    let cap = estimate
        .saturating_add(b.max().unwrap_or(0))
        .saturating_add(1)
        .saturating_mul(10);
    let cap = usize::try_from(cap).unwrap_or(usize::MAX);

    let mut trace = vec![x.clone()];
    for _ in 0..cap {
        let mut y = x.as_slice().to_vec();
        for &g in x.as_slice() {
            for &h in b.as_slice() {
                y.push(
                    g.checked_add(h)
                        .ok_or(Error::Overflow("shifting generators"))?,
                );
            }
        }
        let next = msg(&GeneratorSet::new(y))?;
        if next == x {
            return Ok(Closure {
                monoid: MonoidDescriptor::from_generators(&x)?,
                trace,
            });
        }
        trace.push(next.clone());
        x = next;
    }
    Err(Error::IterationCap(cap))
}
