//! `usequence` — compute the exact sequences and sweep-verify the identities
//! and congruences they satisfy.
//!
//! Exit codes: 0 all checks pass, 1 at least one check fails, 2 usage error
//! (unknown claim, malformed range, index budget exceeded).

mod manifest;
mod ranges;
mod registry;

use clap::{Args, Parser, Subcommand, ValueEnum};
use manifest::{ComputeManifest, Format, RunManifest};
use rayon::prelude::*;
use std::time::Instant;
use usequence_core::sequences::DEFAULT_MAX_INDEX;
use usequence_core::SeqStore;

#[derive(Parser)]
#[command(
    name = "usequence",
    version,
    about = "Exact computation and mechanical verification for a binomial-recurrence integer sequence and its companions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print exact values of a sequence up to an index
    Compute(ComputeArgs),
    /// Run a verification sweep for a registered claim
    Verify(VerifyArgs),
    /// High-precision comparison of the alternating inverse-power series
    /// against its closed form
    Series(SeriesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqKind {
    /// the central sequence U_n
    U,
    /// Euler numbers E_n
    Euler,
    /// Bernoulli numbers B_n (rendered num/den)
    Bernoulli,
    /// the Lucas-type sequence V_m (V_0=2, V_1=1, V_{m+1}=V_m-7V_{m-1})
    V,
    /// the Newton-recurrence companion a_n
    A,
    /// the divisor-weight sequence c_n with sum_{d|n} d c_d = U_{2n}
    C,
}

#[derive(Args)]
struct ComputeArgs {
    /// which sequence to print
    #[arg(value_enum)]
    seq: SeqKind,
    /// largest index to print (inclusive)
    #[arg(long)]
    max: u64,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// claim identifier, e.g. thm3.3 (see --help for the registry)
    claim: String,
    /// index range A..B for claims swept over n
    #[arg(long)]
    n: Option<String>,
    /// prime range A..B (claim-specific residue filters apply)
    #[arg(long)]
    primes: Option<String>,
    /// exponent range A..B
    #[arg(long)]
    k: Option<String>,
    /// prime-power level range A..B
    #[arg(long)]
    m: Option<String>,
    /// comma list of odd primes for the regularity grids
    #[arg(long)]
    p: Option<String>,
    /// comma list of even offsets b
    #[arg(long)]
    b: Option<String>,
    /// series order (lem2.1) or congruence order n (thm4.3 / thm4.4)
    #[arg(long)]
    order: Option<String>,
    /// alternating-difference depth N for regularity checks
    #[arg(long)]
    depth: Option<u32>,
    /// number of series terms (thm2.5)
    #[arg(long)]
    terms: Option<u64>,
    /// decimal digits of working precision (thm2.5)
    #[arg(long)]
    digits: Option<u32>,
    /// number of random round-trip cases (thm2.2)
    #[arg(long)]
    cases: Option<u64>,
    /// length of each random sequence (thm2.2)
    #[arg(long)]
    len: Option<usize>,
    /// RNG seed (thm2.2)
    #[arg(long)]
    seed: Option<u64>,
    /// also run a control sequence (e.g. "n+1") expected to violate the
    /// condition; the extra report row passes when a violation is found
    #[arg(long)]
    negative_control: Option<String>,
    /// worker threads for the sweep; output order is deterministic
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct SeriesArgs {
    /// series index n (the sum runs over inverse (2n+1)-th powers)
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 10_000)]
    terms: u64,
    #[arg(long, default_value_t = 50)]
    digits: u32,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(all_pass) => {
            if all_pass {
                0
            } else {
                1
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    };
    std::process::exit(code);
}

fn index_budget() -> Result<usize, String> {
    match std::env::var("USEQ_MAX_INDEX") {
        Ok(text) => text
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("USEQ_MAX_INDEX must be a nonnegative integer, got `{text}`")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_INDEX),
        Err(e) => Err(format!("USEQ_MAX_INDEX is not readable: {e}")),
    }
}

fn check_budget(needed: usize, budget: usize) -> Result<(), String> {
    if needed > budget {
        return Err(format!(
            "index budget exceeded: this run needs sequence indices up to {needed}, \
             but the budget is {budget}; set USEQ_MAX_INDEX={needed} (or higher) to allow it"
        ));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Compute(args) => run_compute(args),
        Command::Verify(args) => run_verify(args),
        Command::Series(args) => run_series(args),
    }
}

fn run_compute(args: ComputeArgs) -> Result<bool, String> {
    let budget = index_budget()?;
    let needed = match args.seq {
        SeqKind::U | SeqKind::Euler | SeqKind::Bernoulli | SeqKind::V => args.max,
        SeqKind::A | SeqKind::C => 2 * args.max,
    } as usize;
    check_budget(needed, budget)?;
    if matches!(args.seq, SeqKind::A | SeqKind::C) && args.max == 0 {
        return Err("these sequences start at index 1; --max must be at least 1".to_string());
    }
    let start = Instant::now();
    let store = SeqStore::with_max_index(budget);
    let first = match args.seq {
        SeqKind::A | SeqKind::C => 1,
        _ => 0,
    };
    let mut values = Vec::new();
    for i in first..=args.max {
        let rendered = match args.seq {
            SeqKind::U => store.u(i as usize).to_string(),
            SeqKind::Euler => store.euler_number(i as usize).to_string(),
            SeqKind::Bernoulli => {
                usequence_core::exactnum::render_rat(&store.bernoulli_number(i as usize))
            }
            SeqKind::V => store.lucas_v(i as usize).to_string(),
            SeqKind::A => store
                .companion_a(i as usize)
                .map_err(|e| e.to_string())?
                .to_string(),
            SeqKind::C => {
                let b = |d: u64| store.u(2 * d as usize);
                usequence_core::newton_euler::c_sequence(i, &b)
                    .map_err(|e| e.to_string())?
                    .to_string()
            }
        };
        values.push((i, rendered));
    }
    let seq_name = match args.seq {
        SeqKind::U => "u",
        SeqKind::Euler => "euler",
        SeqKind::Bernoulli => "bernoulli",
        SeqKind::V => "v",
        SeqKind::A => "a",
        SeqKind::C => "c",
    };
    let manifest = ComputeManifest::new(
        vec![
            ("seq".to_string(), seq_name.to_string()),
            ("max".to_string(), args.max.to_string()),
        ],
        values,
        start.elapsed().as_millis(),
    );
    print!("{}", manifest.render(args.format));
    Ok(true)
}

fn run_verify(args: VerifyArgs) -> Result<bool, String> {
    if args.jobs == 0 {
        return Err("--jobs must be at least 1".to_string());
    }
    let opts = registry::VerifyOpts {
        n: args.n,
        primes: args.primes,
        k: args.k,
        m: args.m,
        p: args.p,
        b: args.b,
        order: args.order,
        depth: args.depth,
        terms: args.terms,
        digits: args.digits,
        cases: args.cases,
        len: args.len,
        seed: args.seed,
        negative_control: args.negative_control,
    };
    let prepared = registry::prepare(&args.claim, &opts)?;
    let budget = index_budget()?;
    check_budget(prepared.needed_index, budget)?;

    let start = Instant::now();
    let store = SeqStore::with_max_index(budget);
    let reports: Vec<_> = if args.jobs == 1 {
        prepared.jobs.iter().map(|job| job(&store)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(args.jobs)
            .build()
            .map_err(|e| format!("cannot build worker pool: {e}"))?;
        pool.install(|| prepared.jobs.par_iter().map(|job| job(&store)).collect())
    };
    let manifest = RunManifest::new(
        "verify",
        prepared.parameters,
        reports,
        start.elapsed().as_millis(),
    );
    print!("{}", manifest.render(args.format));
    Ok(manifest.all_pass())
}

fn run_series(args: SeriesArgs) -> Result<bool, String> {
    if args.n == 0 {
        return Err("--n must be at least 1".to_string());
    }
    let budget = index_budget()?;
    check_budget(2 * args.n + 2, budget)?;
    let start = Instant::now();
    let store = SeqStore::with_max_index(budget);
    let report = registry::series_report(&store, args.n, args.terms, args.digits);
    let wall = start.elapsed().as_millis();
    match args.format {
        Format::Table => {
            let find = |key: &str| {
                report
                    .params
                    .iter()
                    .find(|(k, _)| k == key)
                    .map(|(_, v)| v.clone())
                    .unwrap_or_default()
            };
            println!(
                "claim {}  n={} terms={} digits={}",
                report.claim_id,
                find("n"),
                find("terms"),
                find("digits")
            );
            println!("partial sum  = {}", report.lhs);
            println!("closed form  = {}", report.rhs);
            println!("residual     = {}", find("residual"));
            println!("tolerance    = {}", find("tolerance"));
            println!(
                "verdict: {} ({} ms)",
                if report.pass { "pass" } else { "FAIL" },
                wall
            );
            Ok(report.pass)
        }
        _ => {
            let parameters = vec![
                ("n".to_string(), args.n.to_string()),
                ("terms".to_string(), args.terms.to_string()),
                ("digits".to_string(), args.digits.to_string()),
            ];
            let manifest = RunManifest::new("series", parameters, vec![report], wall);
            print!("{}", manifest.render(args.format));
            Ok(manifest.all_pass())
        }
    }
}
