use std::process::{Command, Output};

use ineqmonoid::cli::{to_json, ClosureJson, MemberJson, SolveJson, TransportJson, VerifyJson};
use ineqmonoid::{solve, NatVec, ProblemInstance};

fn ineqmonoid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ineqmonoid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_prints_worked_example() {
    let o = ineqmonoid(&[
        "solve", "--a", "4,5", "--b", "3,6", "--alpha", "3", "--beta", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains("monoid: {0,23,28,29,32,33,34,35,37,…→}"),
        "{out}"
    );
    assert!(out.contains("frobenius: 36"));
}

#[test]
fn closure_prints_trace_and_generators() {
    let o = ineqmonoid(&["closure", "--set", "5,7", "--b-set", "2,3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let c: ClosureJson = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(c.monoid.min_generators, vec![5, 7, 8, 9, 11]);
    assert_eq!(
        c.trace,
        vec![vec![5, 7], vec![5, 7, 8, 9], vec![5, 7, 8, 9, 11]]
    );
    assert_eq!(c.monoid.elements, vec![0, 5, 7]);
    assert!(c.monoid.and_beyond);
}

#[test]
fn transport_reports_minimum_load() {
    let o = ineqmonoid(&[
        "transport",
        "--capacities",
        "3,6",
        "--costs",
        "1200,1500",
        "--price",
        "300",
        "--profit",
        "900",
        "--spare",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("minimum profitable load: 23 cars"));
}

#[test]
fn json_inputs_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("instance.json");
    std::fs::write(&inst, r#"{"a":[4,5],"b":[3,6],"alpha":0,"beta":0}"#).unwrap();
    let o = ineqmonoid(&["solve", "--json", "--input", inst.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let s: SolveJson = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(s.monoid.min_generators, vec![5, 6, 9]);
    assert_eq!(s.monoid.elements, vec![0, 5, 6, 9, 10, 11, 12, 14]);
    assert_eq!(s.monoid.frobenius, Some(13));

    let trucks = dir.path().join("transport.json");
    std::fs::write(
        &trucks,
        r#"{"capacities":[3,6],"costs":[1200,1500],"price":300,"profit":900,"spare":1}"#,
    )
    .unwrap();
    let o = ineqmonoid(&["transport", "--json", "--input", trucks.to_str().unwrap()]);
    let t: TransportJson = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(t.minimum_load, Some(23));
    assert_eq!(t.report.c_set, vec![NatVec(vec![0, 4])]);
}

#[test]
fn solve_json_schema_keys() {
    let o = ineqmonoid(&[
        "solve", "--json", "--a", "4,5", "--b", "3,6", "--alpha", "3", "--beta", "1",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in [
        "case",
        "zero_in_s",
        "gcd",
        "min_generators",
        "frobenius",
        "conductor",
        "gaps",
        "elements",
        "and_beyond",
        "c_set",
        "d_set",
        "c_intervals",
        "d_intervals",
        "discarded_minimals",
    ] {
        assert!(v.get(key).is_some(), "missing key {key}");
    }
    assert_eq!(v["case"], "numerical_semigroup");
    assert_eq!(v["c_intervals"], serde_json::json!([[23, 23]]));
    assert_eq!(v["d_intervals"], serde_json::json!([[5, 6], [9, 9]]));
    assert_eq!(v["frobenius"], 36);

    let o = ineqmonoid(&["solve", "--json", "--a", "4,5", "--b", "3,5"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["frobenius"], serde_json::Value::Null);
    assert_eq!(v["gcd"], 5);
}

#[test]
fn solve_json_round_trips_byte_identically() {
    let instances = [
        (vec![4, 5], vec![3, 6], 3, 1),
        (vec![4, 5], vec![3, 6], 0, 0),
        (vec![4, 5], vec![3, 5], 0, 0),
        (vec![3], vec![2], 5, 0),
        (vec![2, 0, 1], vec![5, 0, 1], 2, 3),
    ];
    for (a, b, alpha, beta) in instances {
        let report = solve(&ProblemInstance::new(a, b, alpha, beta).unwrap()).unwrap();
        let first = to_json(&SolveJson::new(&report)).unwrap();
        let parsed: SolveJson = serde_json::from_str(&first).unwrap();
        assert_eq!(to_json(&parsed).unwrap(), first);
    }
    let o = ineqmonoid(&[
        "solve", "--json", "--a", "1,4", "--b", "2,2", "--alpha", "1", "--beta", "2",
    ]);
    let emitted = stdout(&o);
    let parsed: SolveJson = serde_json::from_str(&emitted).unwrap();
    assert_eq!(to_json(&parsed).unwrap() + "\n", emitted);
}

#[test]
fn verify_agrees_and_exits_zero() {
    let o = ineqmonoid(&[
        "verify", "--json", "--a", "4,5", "--b", "3,6", "--alpha", "3", "--beta", "1", "--bound",
        "120",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: VerifyJson = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.agrees);
    assert!(v.disagreements.is_empty());
    assert_eq!(&v.oracle_members[..4], &[23, 28, 29, 32]);
}

#[test]
fn member_with_witness() {
    let base = [
        "member",
        "--json",
        "--a",
        "4,5",
        "--b",
        "3,6",
        "--alpha",
        "3",
        "--beta",
        "1",
        "--witness",
    ];
    let run = |n: &str| -> MemberJson {
        let mut args = base.to_vec();
        args.extend(["--n", n]);
        serde_json::from_slice(&ineqmonoid(&args).stdout).unwrap()
    };
    let m = run("23");
    assert!(m.member && m.in_s);
    assert_eq!(m.witness, Some(NatVec(vec![0, 4])));
    let m = run("22");
    assert!(!m.member);
    let m = run("0");
    assert!(m.member && !m.in_s);
}

#[test]
fn hilbert_lists_minimal_solutions() {
    let o = ineqmonoid(&["hilbert", "--coeffs", "-1,1,-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("minimal solutions: (0,1,1) (1,1,0)"));
}

#[test]
fn invalid_input_exits_one() {
    for args in [
        vec!["solve", "--a", "4,5", "--b", "3"],
        vec!["solve", "--a", "4,5"],
        vec!["solve", "--a", "x"],
        vec!["solve", "--input", "/nonexistent/instance.json"],
        vec![
            "transport",
            "--capacities",
            "3,6",
            "--costs",
            "1200,1500",
            "--price",
            "299",
        ],
        vec!["frobnicate"],
    ] {
        let o = ineqmonoid(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}
