use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use psi_lab::corpus_io::{export_corpus, ingest};
use psi_lab::families::{builtin_corpus, make, parse_spec};
use psi_lab::grpcore::DEFAULT_CAP;
use psi_lab::props::classify_bounded;
use psi_lab::psi::{psi_triple, BigRational};
use psi_lab::report::decimal_string;
use psi_lab::search::{
    min_psi_dprime_cyclic, open_problem_cyclic, primorial_threshold_k, scan_cyclic, Relation,
};
use psi_lab::verify::{run_suite, CheckId, Thresholds};

/// Exact-arithmetic calculator for the sum of element orders of a finite
/// group and its two normalizations.
#[derive(Parser)]
#[command(name = "psi-lab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group from a family expression and print its invariants.
    Compute(ComputeArgs),
    /// Run the theorem checks over a corpus and emit a JSON report.
    Verify(VerifyArgs),
    /// Scan cyclic groups or solve threshold equations.
    Search(SearchArgs),
    /// Write the built-in corpus in the ingestible text format.
    Export(ExportArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Family expression, e.g. "C(12)", "Q(16)", "X(Sym(3),C(5))".
    spec: String,
    /// Closure cap on the group order.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check to run; repeatable. Defaults to all of them.
    #[arg(long = "suite", value_name = "CHECK")]
    suites: Vec<String>,
    /// "builtin" or "file:PATH".
    #[arg(long, default_value = "builtin")]
    corpus: String,
    /// Largest group order drawn from the built-in corpus. Defaults to 200
    /// when any selected check enumerates normal subgroups, 1024 otherwise.
    #[arg(long)]
    max_order: Option<u64>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    jobs: Option<usize>,
    /// Treat skipped checks and bad corpus records as failures.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct SearchArgs {
    /// One of: eq, lt, gt, min, primorial, solve.
    mode: String,
    /// Target rational "a/b" (for eq/lt/gt/primorial/solve).
    #[arg(long)]
    target: Option<String>,
    /// Scan bound on n (for eq/lt/gt/min).
    #[arg(long, default_value_t = 1_000_000)]
    max_n: u64,
    /// Largest prime considered by solve. Runtime grows exponentially with
    /// the number of primes whose factors fit between the target and 1, so
    /// keep this modest for mid-range targets.
    #[arg(long, default_value_t = 20)]
    prime_bound: u64,
    /// Largest exponent per prime considered by solve.
    #[arg(long, default_value_t = 8)]
    exp_bound: u32,
    /// Print at most this many hits.
    #[arg(long, default_value_t = 50)]
    limit: usize,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long, default_value_t = 16)]
    max_order: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn cap_from_env(cli_cap: Option<usize>) -> usize {
    if let Some(c) = cli_cap {
        return c;
    }
    std::env::var("PSI_LAB_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

fn parse_ratio(s: &str) -> Result<BigRational, String> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| format!("bad numerator {num:?}"))?;
    let den = BigInt::from_str(den).map_err(|_| format!("bad denominator {den:?}"))?;
    if den == BigInt::from(0) {
        return Err("zero denominator".into());
    }
    Ok(BigRational::new(num, den))
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run_compute(args: &ComputeArgs) -> ExitCode {
    let spec = match parse_spec(&args.spec) {
        Ok(s) => s,
        Err(e) => return usage_error(&e.to_string()),
    };
    let g = match make(&spec, cap_from_env(args.cap)) {
        Ok(g) => g,
        Err(e) => return usage_error(&e.to_string()),
    };
    let t = psi_triple(&g);
    let flags = classify_bounded(&g, 200);
    println!("group      {spec}");
    println!("order      {}", g.order());
    println!("psi        {}", t.psi);
    println!("psi'       {}  ({})", t.psi_prime, decimal_string(&t.psi_prime, 10));
    println!("psi''      {}  ({})", t.psi_dprime, decimal_string(&t.psi_dprime, 10));
    let ss = if flags.supersolvable_estimated { " (estimated)" } else { "" };
    println!(
        "flags      cyclic={} abelian={} nilpotent={} supersolvable={}{ss} solvable={}",
        flags.cyclic, flags.abelian, flags.nilpotent, flags.supersolvable, flags.solvable
    );
    let th = Thresholds::paper();
    let named: [(&str, &BigRational); 5] = [
        ("cyclic 7/16", &th.cyclic),
        ("abelian 27/64", &th.abelian),
        ("nilpotent 13/36", &th.nilpotent),
        ("supersolvable 31/144", &th.supersolvable),
        ("solvable 211/3600", &th.solvable),
    ];
    for (label, bound) in named {
        let rel = match t.psi_dprime.cmp(bound) {
            std::cmp::Ordering::Greater => "above",
            std::cmp::Ordering::Equal => "at",
            std::cmp::Ordering::Less => "below",
        };
        println!("threshold  {rel:>5} {label}");
    }
    ExitCode::SUCCESS
}

fn run_verify(args: &VerifyArgs) -> ExitCode {
    if let Some(jobs) = args.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let checks: Vec<CheckId> = if args.suites.is_empty()
        || args.suites.iter().any(|s| s.eq_ignore_ascii_case("all"))
    {
        CheckId::ALL.to_vec()
    } else {
        let mut v = Vec::new();
        for s in &args.suites {
            match CheckId::from_str(s) {
                Ok(c) => v.push(c),
                Err(e) => return usage_error(&e),
            }
        }
        v
    };
    // Checks that classify or compare via normal subgroups get the smaller
    // default; the pointwise checks can afford a wider corpus.
    let enumerates = checks
        .iter()
        .any(|c| matches!(c, CheckId::Theorem11 | CheckId::QuotientMonotonicity));
    let max_order = args.max_order.unwrap_or(if enumerates { 200 } else { 1024 });
    let (corpus, description) = if args.corpus == "builtin" {
        (
            builtin_corpus(max_order),
            format!("builtin, orders 1..={max_order}"),
        )
    } else if let Some(path) = args.corpus.strip_prefix("file:") {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return usage_error(&format!("cannot read {path}: {e}")),
        };
        let (entries, diags) = ingest(&text, cap_from_env(None));
        for d in &diags {
            eprintln!("warning: skipped record, {d}");
        }
        if args.strict && !diags.is_empty() {
            return ExitCode::from(2);
        }
        (entries, format!("file {path}"))
    } else {
        return usage_error("--corpus expects \"builtin\" or \"file:PATH\"");
    };

    let mut report = run_suite(&corpus, &checks, 200);
    report.corpus = description;
    let json = report.to_json();
    if let Some(path) = &args.out {
        if let Err(e) = std::fs::write(path, &json) {
            return usage_error(&format!("cannot write {}: {e}", path.display()));
        }
    } else {
        println!("{json}");
    }
    eprintln!(
        "checks: {} passed, {} failed, {} skipped",
        report.summary.passed, report.summary.failed, report.summary.skipped
    );
    let bad = report.summary.failed + if args.strict { report.summary.skipped } else { 0 };
    if bad > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_search(args: &SearchArgs) -> ExitCode {
    let need_target = || -> Result<BigRational, String> {
        args.target
            .as_deref()
            .ok_or_else(|| "--target is required for this mode".to_string())
            .and_then(parse_ratio)
    };
    match args.mode.as_str() {
        "eq" | "lt" | "gt" => {
            let target = match need_target() {
                Ok(t) => t,
                Err(e) => return usage_error(&e),
            };
            let relation = Relation::from_str(&args.mode).unwrap();
            let hits = match scan_cyclic(args.max_n, relation, &target) {
                Ok(h) => h,
                Err(e) => return usage_error(&e.to_string()),
            };
            println!("{} hit(s) for psi''(C_n) {} {target}, n <= {}", hits.len(), args.mode, args.max_n);
            for h in hits.iter().take(args.limit) {
                println!(
                    "n={}  {}  psi''={}  ({})",
                    h.n,
                    h.factorization,
                    h.value,
                    decimal_string(&h.value, 10)
                );
            }
            if hits.len() > args.limit {
                println!("... {} more", hits.len() - args.limit);
            }
        }
        "min" => {
            let best = match min_psi_dprime_cyclic(args.max_n) {
                Ok(b) => b,
                Err(e) => return usage_error(&e.to_string()),
            };
            println!(
                "min at n={}  {}  psi''={}  ({})",
                best.n,
                best.factorization,
                best.value,
                decimal_string(&best.value, 10)
            );
        }
        "primorial" => {
            let target = match need_target() {
                Ok(t) => t,
                Err(e) => return usage_error(&e),
            };
            use num_traits::{One, Zero};
            if target <= BigRational::zero() || target >= BigRational::one() {
                return usage_error("primorial target must satisfy 0 < c < 1");
            }
            let (k, value) = primorial_threshold_k(&target);
            // The product is left unreduced; render only its magnitude.
            let digits_num = value.numer().to_string().len();
            let digits_den = value.denom().to_string().len();
            println!("first k with prod p/(p+1) over the first k primes < {target}: k={k}");
            println!("product has a {digits_num}-digit numerator over a {digits_den}-digit denominator");
        }
        "solve" => {
            let target = match need_target() {
                Ok(t) => t,
                Err(e) => return usage_error(&e),
            };
            let solutions = open_problem_cyclic(&target, args.prime_bound, args.exp_bound);
            println!(
                "{} factorization(s) with psi''(C_n) = {target} (primes <= {}, exponents <= {})",
                solutions.len(),
                args.prime_bound,
                args.exp_bound
            );
            for f in solutions.iter().take(args.limit) {
                println!("n = {} = {}", f.value(), f);
            }
        }
        other => return usage_error(&format!("unknown search mode {other:?}")),
    }
    ExitCode::SUCCESS
}

fn run_export(args: &ExportArgs) -> ExitCode {
    let text = export_corpus(&builtin_corpus(args.max_order));
    if let Some(path) = &args.out {
        if let Err(e) = std::fs::write(path, &text) {
            return usage_error(&format!("cannot write {}: {e}", path.display()));
        }
    } else {
        print!("{text}");
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Compute(args) => run_compute(&args),
        Command::Verify(args) => run_verify(&args),
        Command::Search(args) => run_search(&args),
        Command::Export(args) => run_export(&args),
    }
}
