//! End-to-end tests against the built binary: golden outputs, exit-code
//! contract, determinism across worker counts, and a small-range run of
//! every registered claim.

use serde_json::Value;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_usequence"));
    cmd.env_remove("USEQ_MAX_INDEX");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn json_without_wall(text: &str) -> Value {
    let mut v: Value = serde_json::from_str(text).expect("valid json");
    v.as_object_mut().unwrap().remove("wall_ms");
    v
}

#[test]
fn compute_u_matches_golden_table() {
    let out = run(&["compute", "u", "--max", "16"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), include_str!("golden/compute_u_table.txt"));
}

#[test]
fn compute_table_spot_values() {
    let out = run(&["compute", "a", "--max", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.lines().last().unwrap().contains("-7309866728"));

    let out = run(&["compute", "u", "--max", "3"]);
    let text = stdout_of(&out);
    let row3: Vec<&str> = text.lines().last().unwrap().split_whitespace().collect();
    assert_eq!(row3, ["3", "0"], "odd index renders an exact zero");

    let out = run(&["compute", "bernoulli", "--max", "6", "--format", "csv"]);
    let text = stdout_of(&out);
    assert!(text.contains("6,1/42"), "rationals render as num/den: {text}");
}

#[test]
fn compute_budget_is_enforced_and_overridable() {
    let out = run(&["compute", "u", "--max", "600"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("index budget exceeded"));

    let out = bin()
        .env("USEQ_MAX_INDEX", "700")
        .args(["compute", "u", "--max", "600", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = bin()
        .env("USEQ_MAX_INDEX", "not-a-number")
        .args(["compute", "u", "--max", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json_matches_golden() {
    let out = run(&["verify", "thm3.2.iv", "--primes", "7..13", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let got = json_without_wall(&stdout_of(&out));
    let want = json_without_wall(include_str!("golden/verify_thm32iv.json"));
    assert_eq!(got, want);
}

#[test]
fn verify_csv_matches_golden_including_honest_failure() {
    let out = run(&["verify", "thm3.3", "--primes", "11..11", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(1), "k=6 has a vanishing denominator");
    assert_eq!(stdout_of(&out), include_str!("golden/verify_thm33_p11.csv"));
}

#[test]
fn verify_is_deterministic_across_worker_counts() {
    let args = |jobs: &'static str| {
        vec![
            "verify", "thm3.4", "--primes", "23..31", "--format", "json", "--jobs", jobs,
        ]
    };
    let single = run(&args("1"));
    let parallel = run(&args("4"));
    assert_eq!(single.status.code(), Some(0));
    assert_eq!(parallel.status.code(), Some(0));
    assert_eq!(
        json_without_wall(&stdout_of(&single)),
        json_without_wall(&stdout_of(&parallel))
    );
    // byte-identical including key order once the wall-time line is masked
    let mask = |s: &str| {
        s.lines()
            .filter(|l| !l.contains("\"wall_ms\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(mask(&stdout_of(&single)), mask(&stdout_of(&parallel)));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "thm2.4.v", "--n", "1..10"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "thm3.3", "--primes", "11..11"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "nosuch.claim"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "thm2.1", "--n", "9..3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "thm4.1", "--n", "3..260"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "thm2.1", "--n", "1..5", "--jobs", "0"]).status.code(), Some(2));
    // clap-level usage errors also use exit code 2
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "nosuchseq", "--max", "3"]).status.code(), Some(2));
}

#[test]
fn negative_control_row_and_scope() {
    let out = run(&[
        "verify",
        "lem5.1.ii",
        "--n",
        "1..8",
        "--negative-control",
        "n+1",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "control violation is the expected outcome");
    let v = json_without_wall(&stdout_of(&out));
    let rows = v["reports"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    let control = rows.last().unwrap();
    assert_eq!(control["claim"], "lem5.1.ii.control");
    assert_eq!(control["pass"], true);
    assert!(control["lhs"].as_str().unwrap().starts_with("violated at n=2"));
    assert!(rows[..8].iter().all(|r| r["pass"] == true));

    let out = run(&["verify", "thm2.1", "--negative-control", "n+1"]);
    assert_eq!(out.status.code(), Some(2), "control only applies to the divisor conditions");
}

#[test]
fn series_reports_residual() {
    let out = run(&["series", "--n", "1", "--terms", "100", "--digits", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("partial sum"));
    assert!(text.contains("residual"));
    assert!(text.contains("verdict: pass"));

    let out = run(&[
        "series", "--n", "2", "--terms", "200", "--digits", "40", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_without_wall(&stdout_of(&out));
    let row = &v["reports"][0];
    assert_eq!(row["claim"], "thm2.5");
    for key in ["claim", "params", "lhs", "rhs", "pass"] {
        assert!(row.get(key).is_some(), "schema key {key} present");
    }
    assert!(row["params"]["residual"].as_str().unwrap().starts_with("0.0000"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "verify", "thm2.2", "--cases", "4", "--len", "9", "--seed", "11", "--format", "json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let mask = |s: &str| {
        s.lines()
            .filter(|l| !l.contains("\"wall_ms\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(mask(&stdout_of(&first)), mask(&stdout_of(&second)));
}

#[test]
fn every_registered_claim_runs_on_a_small_range() {
    // windows are chosen to avoid the known vanishing-denominator pairs, so
    // every run must exit 0 with zero failures
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("lem2.1", vec!["--order", "10"]),
        ("thm2.1", vec!["--n", "1..5"]),
        ("thm2.2", vec!["--cases", "2", "--len", "6"]),
        ("thm2.3.i", vec!["--n", "1..3"]),
        ("thm2.3.ii", vec!["--n", "1..3"]),
        ("thm2.3.iii", vec!["--n", "1..3"]),
        ("thm2.4.i", vec!["--n", "1..5"]),
        ("thm2.4.ii", vec!["--n", "1..5"]),
        ("thm2.4.iii", vec!["--n", "1..5"]),
        ("thm2.4.iv", vec!["--n", "1..5"]),
        ("thm2.4.v", vec!["--n", "1..5"]),
        ("thm2.5", vec!["--n", "1..1", "--terms", "50", "--digits", "35"]),
        ("cor2.1", vec!["--n", "1..5"]),
        ("thm3.1", vec!["--primes", "5..20"]),
        ("cor3.1", vec!["--primes", "5..20"]),
        ("thm3.2.i", vec!["--primes", "7..13"]),
        ("thm3.2.ii", vec!["--primes", "7..13"]),
        ("thm3.2.iii", vec!["--primes", "7..13"]),
        ("thm3.2.iv", vec!["--primes", "7..13"]),
        ("thm3.3", vec!["--primes", "5..7"]),
        ("cor3.2", vec!["--primes", "7..7"]),
        ("thm3.4", vec!["--primes", "5..7"]),
        ("cor3.3", vec!["--primes", "5..20"]),
        ("thm4.1", vec!["--n", "3..6"]),
        ("cor4.1", vec!["--n", "3..6"]),
        ("thm4.2", vec!["--p", "3,5", "--b", "0,2", "--depth", "2"]),
        ("thm4.3", vec!["--p", "3,5", "--k", "1..2", "--m", "1..1"]),
        ("thm4.4", vec!["--p", "3,5", "--order", "1..2"]),
        ("thm4.5", vec!["--p", "3,5", "--k", "1..1", "--m", "1..1"]),
        ("cor4.2.i", vec!["--k", "1..5"]),
        ("cor4.2.ii", vec!["--k", "2..5"]),
        ("cor4.2.iii", vec!["--k", "1..5"]),
        ("lem5.1.ii", vec!["--n", "1..6"]),
        ("lem5.1.iv", vec!["--n", "2..6"]),
        ("lem5.1.v", vec!["--n", "1..6"]),
        ("lem5.1.vi", vec!["--n", "1..6"]),
        ("lem5.1.vii", vec!["--n", "1..6"]),
        ("thm5.1", vec!["--n", "1..6"]),
    ];
    for (claim, extra) in cases {
        let mut args = vec!["verify", claim, "--format", "json"];
        args.extend(extra);
        let out = run(&args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{claim}: {}{}",
            stdout_of(&out),
            stderr_of(&out)
        );
        let v = json_without_wall(&stdout_of(&out));
        assert_eq!(v["summary"]["fail"], 0, "{claim}");
        assert!(v["reports"].as_array().unwrap().len() > 0, "{claim}");
    }
}
