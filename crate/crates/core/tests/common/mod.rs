#![allow(dead_code)]

use std::collections::BTreeSet;

use ineqmonoid::{IntVec, NatVec, ProblemInstance};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SWEEP_SEED: u64 = 0x5eed_2017;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random instance with `p <= max_p`, coefficients `<= max_coef`, offsets `<= max_off`.
pub fn random_instance(
    rng: &mut ChaCha8Rng,
    max_p: usize,
    max_coef: u64,
    max_off: u64,
) -> ProblemInstance {
    let p = rng.gen_range(1..=max_p);
    let a = (0..p).map(|_| rng.gen_range(0..=max_coef)).collect();
    let b = (0..p).map(|_| rng.gen_range(0..=max_coef)).collect();
    ProblemInstance::new(a, b, rng.gen_range(0..=max_off), rng.gen_range(0..=max_off)).unwrap()
}

/// The fixed 100-instance sweep.
pub fn sweep_instances() -> Vec<ProblemInstance> {
    let mut r = rng(SWEEP_SEED);
    (0..100).map(|_| random_instance(&mut r, 3, 6, 4)).collect()
}

/// Members up to `limit` of the smallest monoid containing `a` and closed
/// under `(M \ {0}) + b`, by saturating an explicit set.
pub fn brute_force_closure(a: &[u64], b: &[u64], limit: u64) -> BTreeSet<u64> {
    let mut m: BTreeSet<u64> = a.iter().copied().filter(|&x| x <= limit).collect();
    m.insert(0);
    loop {
        let snapshot: Vec<u64> = m.iter().copied().collect();
        let before = m.len();
        for (i, &x) in snapshot.iter().enumerate() {
            for &y in &snapshot[i..] {
                if x + y <= limit {
                    m.insert(x + y);
                }
            }
            if x > 0 {
                for &d in b {
                    if d > 0 && x + d <= limit {
                        m.insert(x + d);
                    }
                }
            }
        }
        if m.len() == before {
            return m;
        }
    }
}

/// Members up to `limit` of the monoid generated by `gens`, by plain search.
pub fn brute_force_monoid(gens: &[u64], limit: u64) -> BTreeSet<u64> {
    brute_force_closure(gens, &[], limit)
}

/// All points of the box `[0, side]^q`.
pub fn box_points(q: usize, side: u64) -> Vec<NatVec> {
    let mut out = vec![Vec::new()];
    for _ in 0..q {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u64>| {
                (0..=side).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(NatVec).collect()
}

/// Non-negative integer combinations of `gens` that stay inside `[0, side]^q`.
pub fn combinations_in_box(gens: &[NatVec], q: usize, side: u64) -> BTreeSet<Vec<u64>> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![vec![0u64; q]];
    while let Some(v) = stack.pop() {
        if !seen.insert(v.clone()) {
            continue;
        }
        for g in gens {
            let w: Vec<u64> = v.iter().zip(&g.0).map(|(x, y)| x + y).collect();
            if w.iter().all(|&k| k <= side) && !seen.contains(&w) {
                stack.push(w);
            }
        }
    }
    seen
}

pub fn random_coeffs(rng: &mut ChaCha8Rng, max_q: usize, max_abs: i64) -> IntVec {
    let q = rng.gen_range(1..=max_q);
    IntVec((0..q).map(|_| rng.gen_range(-max_abs..=max_abs)).collect())
}
