//! Command-line front end.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diophantine::{minimal_homogeneous_solutions, IntVec, NatVec};
use crate::instance::{ProblemInstance, TransportSpec};
use crate::oracle::{agree, Disagreement, OracleReport};
use crate::solver::{membership_with_witness, solve, CaseTag, Interval, Membership, SolveReport};
use crate::submonoid::{smallest_b_monoid, GeneratorSet, MonoidDescriptor};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_DISAGREE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Solver(#[from] crate::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "ineqmonoid",
    version,
    about = "Monoids of integers n with a·x + alpha <= n <= b·x - beta solvable over N^p"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the monoid S(a,b,alpha,beta) ∪ {0}.
    Solve(InstanceArgs),
    /// Solve and compare against brute force up to a bound.
    Verify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, default_value_t = 200)]
        bound: u64,
    },
    /// Smallest B-monoid containing a set A.
    Closure {
        #[arg(long = "set", value_delimiter = ',', required = true)]
        set: Vec<u64>,
        #[arg(long = "b-set", value_delimiter = ',')]
        b_set: Vec<u64>,
        /// Print members up to this bound instead of up to the conductor.
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Minimal non-negative solutions of coeffs·x = 0.
    Hilbert {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        coeffs: Vec<i64>,
    },
    /// Membership of n in S ∪ {0}.
    Member {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        n: u64,
        /// Also search for a certificate x.
        #[arg(long)]
        witness: bool,
    },
    /// Reduce the truck transport problem and solve it.
    Transport(TransportArgs),
}

#[derive(Debug, Args)]
pub struct InstanceArgs {
    /// JSON file {"a":[..],"b":[..],"alpha":k,"beta":k}.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    pub a: Option<Vec<u64>>,
    #[arg(long, value_delimiter = ',')]
    pub b: Option<Vec<u64>>,
    #[arg(long)]
    pub alpha: Option<u64>,
    #[arg(long)]
    pub beta: Option<u64>,
}

#[derive(Debug, Args)]
pub struct TransportArgs {
    /// JSON file {"capacities":[..],"costs":[..],"price":k,"profit":k,"spare":k}.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    pub capacities: Option<Vec<u64>>,
    #[arg(long, value_delimiter = ',')]
    pub costs: Option<Vec<u64>>,
    #[arg(long)]
    pub price: Option<u64>,
    #[arg(long)]
    pub profit: Option<u64>,
    #[arg(long)]
    pub spare: Option<u64>,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &PathBuf) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.clone(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

impl InstanceArgs {
    pub fn load(&self) -> Result<ProblemInstance, CliError> {
        let inline =
            self.a.is_some() || self.b.is_some() || self.alpha.is_some() || self.beta.is_some();
        let instance = match (&self.input, inline) {
            (Some(_), true) => {
                return Err(CliError::Usage(
                    "give either --input or inline --a/--b/--alpha/--beta, not both".into(),
                ))
            }
            (Some(path), false) => read_json::<ProblemInstance>(path)?,
            (None, _) => {
                let (Some(a), Some(b)) = (&self.a, &self.b) else {
                    return Err(CliError::Usage(
                        "an instance needs --a and --b (or --input)".into(),
                    ));
                };
                ProblemInstance {
                    a: a.clone(),
                    b: b.clone(),
                    alpha: self.alpha.unwrap_or(0),
                    beta: self.beta.unwrap_or(0),
                }
            }
        };
        Ok(instance.validate()?)
    }
}

impl TransportArgs {
    pub fn load(&self) -> Result<TransportSpec, CliError> {
        let inline = self.capacities.is_some()
            || self.costs.is_some()
            || self.price.is_some()
            || self.profit.is_some()
            || self.spare.is_some();
        match (&self.input, inline) {
            (Some(_), true) => Err(CliError::Usage(
                "give either --input or inline transport flags, not both".into(),
            )),
            (Some(path), false) => read_json(path),
            (None, _) => {
                let (Some(capacities), Some(costs), Some(price)) =
                    (&self.capacities, &self.costs, self.price)
                else {
                    return Err(CliError::Usage(
                        "transport needs --capacities, --costs and --price (or --input)".into(),
                    ));
                };
                Ok(TransportSpec {
                    capacities: capacities.clone(),
                    costs: costs.clone(),
                    price,
                    profit: self.profit.unwrap_or(0),
                    spare: self.spare.unwrap_or(0),
                })
            }
        }
    }
}

/// Machine-readable view of a monoid descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidJson {
    pub gcd: u64,
    pub min_generators: Vec<u64>,
    pub frobenius: Option<u64>,
    pub conductor: u64,
    pub gaps: Vec<u64>,
    pub elements: Vec<u64>,
    /// Every multiple of `gcd` past the listed elements is a member.
    pub and_beyond: bool,
    pub is_numerical: bool,
}

impl MonoidJson {
    pub fn new(desc: &MonoidDescriptor, horizon: Option<u64>) -> Self {
        let horizon = horizon.unwrap_or_else(|| default_horizon(desc));
        let and_beyond = !desc.is_trivial() && horizon >= desc.scaled_conductor();
        MonoidJson {
            gcd: desc.gcd,
            min_generators: desc.msg.as_slice().to_vec(),
            frobenius: desc.frobenius,
            conductor: desc.conductor,
            gaps: desc.gaps.clone(),
            elements: desc.elements_up_to(horizon),
            and_beyond,
            is_numerical: desc.is_numerical,
        }
    }
}

/// Members are listed up to the conductor, and at least up to the gcd.
fn default_horizon(desc: &MonoidDescriptor) -> u64 {
    desc.scaled_conductor().max(desc.gcd)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveJson {
    pub instance: ProblemInstance,
    pub case: String,
    pub witness_j: Option<usize>,
    pub equal_coords: Vec<usize>,
    pub zero_in_s: bool,
    #[serde(flatten)]
    pub monoid: MonoidJson,
    pub c_set: Vec<NatVec>,
    pub d_set: Vec<NatVec>,
    pub c_intervals: Vec<Interval>,
    pub d_intervals: Vec<Interval>,
    pub discarded_minimals: Vec<NatVec>,
}

impl SolveJson {
    pub fn new(report: &SolveReport) -> Self {
        let (c_set, d_set, discarded) = match &report.cd {
            Some(cd) => (cd.c_set.clone(), cd.d_set.clone(), cd.discarded.clone()),
            None => (Vec::new(), Vec::new(), Vec::new()),
        };
        let equal_coords = match &report.case_tag {
            CaseTag::DiagonalSubmonoid { equal_coords } => equal_coords.clone(),
            _ => Vec::new(),
        };
        SolveJson {
            instance: report.instance.clone(),
            case: report.case_tag.name().to_string(),
            witness_j: report.witness_j(),
            equal_coords,
            zero_in_s: report.zero_in_s,
            monoid: MonoidJson::new(&report.monoid, None),
            c_set,
            d_set,
            c_intervals: report.c_intervals.clone(),
            d_intervals: report.d_intervals.clone(),
            discarded_minimals: discarded,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub report: SolveJson,
    pub bound: u64,
    pub agrees: bool,
    pub oracle_members: Vec<u64>,
    pub disagreements: Vec<Disagreement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureJson {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub trace: Vec<Vec<u64>>,
    #[serde(flatten)]
    pub monoid: MonoidJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertJson {
    pub coeffs: Vec<i64>,
    pub budget: u64,
    pub minimal_solutions: Vec<NatVec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberJson {
    pub n: u64,
    pub member: bool,
    /// `n` satisfies the inequalities itself (false for an adjoined 0).
    pub in_s: bool,
    pub witness: Option<NatVec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransportJson {
    pub transport: TransportSpec,
    pub minimum_load: Option<u64>,
    pub report: SolveJson,
}

/// Canonical JSON rendering used for every command.
pub fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(value)?)
}

fn braces<T: std::fmt::Display>(items: &[T]) -> String {
    let body: Vec<String> = items.iter().map(T::to_string).collect();
    format!("{{{}}}", body.join(","))
}

fn tuple(v: &[u64]) -> String {
    NatVec(v.to_vec()).to_string()
}

/// `{0,5,6,9,10,11,12,14,…→}` style listing.
pub fn render_elements(m: &MonoidJson) -> String {
    let mut body: Vec<String> = m.elements.iter().map(u64::to_string).collect();
    if m.and_beyond {
        body.push("…→".to_string());
    }
    format!("{{{}}}", body.join(","))
}

fn render_monoid(out: &mut String, m: &MonoidJson) {
    let _ = writeln!(out, "gcd: {}", m.gcd);
    let _ = writeln!(out, "minimal generators: {}", braces(&m.min_generators));
    match m.frobenius {
        Some(f) => {
            let _ = writeln!(out, "frobenius: {f}");
        }
        None => {
            let _ = writeln!(out, "frobenius: none");
        }
    }
    let _ = writeln!(out, "conductor: {}", m.conductor);
    let _ = writeln!(out, "gaps: {}", braces(&m.gaps));
    if m.gcd > 1 {
        let _ = writeln!(
            out,
            "(frobenius, conductor and gaps refer to the monoid divided by {})",
            m.gcd
        );
    }
    let _ = writeln!(out, "monoid: {}", render_elements(m));
    if m.and_beyond && m.gcd > 1 {
        let _ = writeln!(out, "  (→ continues through multiples of {})", m.gcd);
    }
}

fn render_intervals(intervals: &[Interval]) -> String {
    if intervals.is_empty() {
        return "∅".to_string();
    }
    intervals
        .iter()
        .map(|i| format!("[{},{}]", i.lo(), i.hi()))
        .collect::<Vec<_>>()
        .join(" ∪ ")
}

fn render_points(points: &[NatVec]) -> String {
    if points.is_empty() {
        return "none".to_string();
    }
    points
        .iter()
        .map(NatVec::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_solve(s: &SolveJson) -> String {
    let mut out = String::new();
    let i = &s.instance;
    let _ = writeln!(
        out,
        "instance: a={} b={} alpha={} beta={}",
        tuple(&i.a),
        tuple(&i.b),
        i.alpha,
        i.beta
    );
    let case = match (s.case.as_str(), s.witness_j) {
        ("numerical_semigroup", Some(j)) => format!("numerical semigroup (a_{j} < b_{j})"),
        ("diagonal_submonoid", _) => format!(
            "diagonal submonoid generated by a_i for i in {}",
            braces(&s.equal_coords)
        ),
        _ => "trivial monoid {0}".to_string(),
    };
    let _ = writeln!(out, "case: {case}");
    let _ = writeln!(
        out,
        "0 in S: {}",
        if s.zero_in_s { "yes" } else { "no (adjoined)" }
    );
    render_monoid(&mut out, &s.monoid);
    let _ = writeln!(out, "audit:");
    if s.instance.alpha == 0 && s.instance.beta == 0 {
        let _ = writeln!(out, "  L = {}", render_intervals(&s.d_intervals));
    } else {
        let _ = writeln!(
            out,
            "  minimal feasible points: {}",
            render_points(&s.c_set)
        );
        let _ = writeln!(out, "  generators of A(b-a): {}", render_points(&s.d_set));
        let _ = writeln!(out, "  C = {}", render_intervals(&s.c_intervals));
        let _ = writeln!(out, "  D = {}", render_intervals(&s.d_intervals));
        let _ = writeln!(
            out,
            "  discarded minimal solutions: {}",
            render_points(&s.discarded_minimals)
        );
    }
    out
}

pub fn verify_status(oracle: &OracleReport) -> i32 {
    if oracle.agrees() {
        EXIT_OK
    } else {
        EXIT_DISAGREE
    }
}

/// Runs one command, writing the report to `out`. Returns the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut status = EXIT_OK;
    let text = match &cli.command {
        Command::Solve(args) => {
            let report = SolveJson::new(&solve(&args.load()?)?);
            if cli.json {
                to_json(&report)?
            } else {
                render_solve(&report)
            }
        }
        Command::Verify { instance, bound } => {
            let report = solve(&instance.load()?)?;
            let oracle = agree(&report, *bound)?;
            status = verify_status(&oracle);
            let view = VerifyJson {
                report: SolveJson::new(&report),
                bound: *bound,
                agrees: oracle.agrees(),
                oracle_members: oracle.members,
                disagreements: oracle.disagreements,
            };
            if cli.json {
                to_json(&view)?
            } else {
                let mut text = render_solve(&view.report);
                if view.agrees {
                    let _ = writeln!(
                        text,
                        "verify: solver and brute force agree for all n <= {bound}"
                    );
                } else {
                    let _ = writeln!(
                        text,
                        "verify: {} disagreement(s) up to {bound}",
                        view.disagreements.len()
                    );
                    for d in &view.disagreements {
                        let _ = writeln!(
                            text,
                            "  n={}: solver says {}, brute force says {}",
                            d.n, d.solver_says, d.oracle_says
                        );
                    }
                }
                text
            }
        }
        Command::Closure { set, b_set, bound } => {
            let a = GeneratorSet::new(set.iter().copied());
            let b = GeneratorSet::new(b_set.iter().copied());
            let closure = smallest_b_monoid(&a, &b)?;
            let view = ClosureJson {
                a: a.as_slice().to_vec(),
                b: b.as_slice().to_vec(),
                trace: closure
                    .trace
                    .iter()
                    .map(|x| x.as_slice().to_vec())
                    .collect(),
                monoid: MonoidJson::new(&closure.monoid, *bound),
            };
            if cli.json {
                to_json(&view)?
            } else {
                let mut text = String::new();
                let _ = writeln!(text, "A = {}, B = {}", braces(&view.a), braces(&view.b));
                for (k, x) in view.trace.iter().enumerate() {
                    let _ = writeln!(text, "round {k}: X = {}", braces(x));
                }
                render_monoid(&mut text, &view.monoid);
                text
            }
        }
        Command::Hilbert { coeffs } => {
            let c = IntVec(coeffs.clone());
            let view = HilbertJson {
                coeffs: coeffs.clone(),
                budget: c.pottier_budget()?,
                minimal_solutions: minimal_homogeneous_solutions(&c)?,
            };
            if cli.json {
                to_json(&view)?
            } else {
                let mut text = String::new();
                let _ = writeln!(text, "coefficients: {coeffs:?}");
                let _ = writeln!(text, "coordinate-sum budget: {}", view.budget);
                let _ = writeln!(
                    text,
                    "minimal solutions: {}",
                    render_points(&view.minimal_solutions)
                );
                text
            }
        }
        Command::Member {
            instance,
            n,
            witness,
        } => {
            let report = solve(&instance.load()?)?;
            let view = if *witness {
                match membership_with_witness(*n, &report)? {
                    Membership::InS { witness } => MemberJson {
                        n: *n,
                        member: true,
                        in_s: true,
                        witness: Some(witness),
                    },
                    Membership::AdjoinedZero => MemberJson {
                        n: *n,
                        member: true,
                        in_s: false,
                        witness: None,
                    },
                    Membership::NotMember => MemberJson {
                        n: *n,
                        member: false,
                        in_s: false,
                        witness: None,
                    },
                }
            } else {
                let member = report.monoid.contains(*n);
                MemberJson {
                    n: *n,
                    member,
                    in_s: if *n == 0 { report.zero_in_s } else { member },
                    witness: None,
                }
            };
            if cli.json {
                to_json(&view)?
            } else {
                let verdict = match (view.member, view.in_s) {
                    (true, true) => "is in S",
                    (true, false) => "is the adjoined 0 (not in S itself)",
                    _ => "is not in S ∪ {0}",
                };
                let mut text = format!("{} {verdict}\n", view.n);
                if let Some(x) = &view.witness {
                    let _ = writeln!(text, "witness x = {x}");
                }
                text
            }
        }
        Command::Transport(args) => {
            let spec = args.load()?;
            let instance = spec.reduce()?;
            let report = solve(&instance)?;
            let minimum_load = report.monoid.msg.min();
            let view = TransportJson {
                transport: spec,
                minimum_load,
                report: SolveJson::new(&report),
            };
            if cli.json {
                to_json(&view)?
            } else {
                let mut text = render_solve(&view.report);
                match minimum_load {
                    Some(n) => {
                        let _ = writeln!(text, "minimum profitable load: {n} cars");
                    }
                    None => {
                        let _ = writeln!(text, "no load is profitable");
                    }
                }
                text
            }
        }
    };
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(status)
}
