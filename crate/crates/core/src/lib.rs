//! Monoids of non-negative integers `n` for which
//! `a·x + alpha <= n <= b·x - beta` has a solution `x` in `N^p`.
//!
//! The set of such `n`, with 0 adjoined, is a submonoid of `(N, +)`. This
//! crate computes its minimal system of generators exactly, together with
//! the gcd, Frobenius number and gaps, and offers a brute-force oracle to
//! check the answer.
//!
//! ```
//! use ineqmonoid::{solve, ProblemInstance};
//!
//! let instance = ProblemInstance::new(vec![4, 5], vec![3, 6], 0, 0).unwrap();
//! let report = solve(&instance).unwrap();
//! assert_eq!(report.monoid.msg.as_slice(), &[5, 6, 9]);
//! assert_eq!(report.monoid.frobenius, Some(13));
//! ```

pub mod cli;
pub mod diophantine;
pub mod error;
pub mod instance;
pub mod oracle;
pub mod solver;
pub mod submonoid;

pub use diophantine::{
    cd_decomposition, generators_of_a, leq_a, minimal_homogeneous_solutions, CdDecomposition,
    IntVec, NatVec,
};
pub use error::{Error, Result};
pub use instance::{ProblemInstance, TransportSpec};
pub use oracle::{agree, brute_force_set, feasible, OracleReport};
pub use solver::{
    assemble, classify, interval_of, membership_with_witness, solve, solve_general,
    solve_zero_case, CaseTag, Interval, Membership, SolveReport,
};
pub use submonoid::{
    enumerate_elements, frobenius_and_gaps, gcd_normalize, membership, msg, smallest_b_monoid,
    Closure, GeneratorSet, MonoidDescriptor,
};
