//! `lrsym`: evaluate `φ`, compute Littlewood-Richardson coefficients and run
//! the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use lrsym::lr::{lr_coeff, lr_family, CoefficientSource, LrQuery};
use lrsym::report::SuiteReport;
use lrsym::symmetric::SchurCache;
use lrsym::tropical::{phi_direct, PhiParams};
use lrsym::verify::{run_suite, Suite, SuiteConfig};
use lrsym::{Error, IntTuple, Snake};

#[derive(Parser, Debug)]
#[command(
    name = "lrsym",
    version,
    about = "Schur Laurent polynomials, LR coefficients and the involution φ"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate φ(ω) = f_μ(ω − a) + b.
    Phi(PhiArgs),
    /// Littlewood-Richardson coefficient c_{μ,ν}^λ, or the whole family when --lambda is omitted.
    Lr(LrArgs),
    /// Run a verification suite and print its report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct FormatArgs {
    /// Emit JSON.
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV.
    #[arg(long)]
    csv: bool,
}

impl FormatArgs {
    fn format(&self) -> Format {
        match (self.json, self.csv) {
            (true, _) => Format::Json,
            (_, true) => Format::Csv,
            _ => Format::Text,
        }
    }
}

#[derive(Args, Debug)]
struct PhiArgs {
    /// Number of variables; inferred from the tuples when omitted.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    a: i64,
    #[arg(long)]
    b: i64,
    /// Partition μ, e.g. 2,1,0,0.
    #[arg(long, allow_hyphen_values = true)]
    mu: Snake,
    /// Any integer tuple ω, e.g. 5,3,2,0.
    #[arg(long, allow_hyphen_values = true)]
    omega: IntTuple,
    /// Also print ν = ω − a, τ_1..τ_n and η = f_μ(ν).
    #[arg(long)]
    trace: bool,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Args, Debug)]
struct LrArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Snake,
    #[arg(long, allow_hyphen_values = true)]
    nu: Snake,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<IntTuple>,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SourceArg {
    Expansion,
    Alternant,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// One of: main, birational, tropical, pieri, ominus, jt, rmatrix, counterexamples.
    suite: String,
    /// Restrict the sweep to one dimension.
    #[arg(long)]
    n: Option<usize>,
    /// Grid lower bound (entries of the swept tuples).
    #[arg(long, allow_hyphen_values = true)]
    lo: Option<i64>,
    /// Grid upper bound.
    #[arg(long, allow_hyphen_values = true)]
    hi: Option<i64>,
    #[arg(long)]
    max_ab: Option<i64>,
    #[arg(long)]
    max_mu1: Option<i64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random samples per dimension for the Q+ suites.
    #[arg(long)]
    samples: Option<usize>,
    /// Worker threads; defaults to all cores.
    #[arg(long)]
    jobs: Option<usize>,
    /// How the main suite computes coefficient families.
    #[arg(long, value_enum, default_value = "expansion")]
    source: SourceArg,
    /// Record elapsed_ms; without it the report is byte-for-byte reproducible.
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    format: FormatArgs,
}

enum Failure {
    Usage(String),
    Verification,
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Dimension(_) | Error::Domain(_) | Error::Parse(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn check_dims(n: Option<usize>, tuples: &[(&str, &IntTuple)]) -> Result<usize, Failure> {
    let n = n.unwrap_or(tuples[0].1.dim());
    for (name, t) in tuples {
        if t.dim() != n {
            return Err(Failure::Usage(format!(
                "--{name} has {} entries but n = {n}",
                t.dim()
            )));
        }
    }
    Ok(n)
}

fn cmd_phi(args: PhiArgs) -> Result<(), Failure> {
    check_dims(args.n, &[("mu", &args.mu), ("omega", &args.omega)])?;
    let params = PhiParams::new(args.a, args.b, args.mu)?;
    let trace = phi_direct(&params, &args.omega)?;
    match args.format.format() {
        Format::Json => {
            let value = if args.trace {
                json!({"omega": args.omega, "phi": trace.image, "nu": trace.nu, "tau": trace.tau, "eta": trace.eta})
            } else {
                json!({"omega": args.omega, "phi": trace.image})
            };
            println!("{value}");
        }
        Format::Csv => {
            println!("omega,phi");
            println!("\"{}\",\"{}\"", args.omega, trace.image);
        }
        Format::Text => {
            if args.trace {
                println!("nu: {}", trace.nu);
                println!("tau: {}", lrsym::report::join(&trace.tau));
                println!("eta: {}", trace.eta);
                println!("phi: {}", trace.image);
            } else {
                println!("{}", trace.image);
            }
        }
    }
    Ok(())
}

fn cmd_lr(args: LrArgs) -> Result<(), Failure> {
    let mut dims = vec![("mu", args.mu.as_tuple()), ("nu", args.nu.as_tuple())];
    if let Some(lambda) = &args.lambda {
        dims.push(("lambda", lambda));
    }
    check_dims(args.n, &dims)?;
    let cache = SchurCache::new();
    match args.lambda {
        Some(lambda) => {
            let c = lr_coeff(&LrQuery::new(args.mu, args.nu, lambda.clone())?, &cache)?;
            match args.format.format() {
                Format::Json => println!(
                    "{}",
                    json!({"lambda": lambda, "coefficient": c.to_string()})
                ),
                Format::Csv => println!("lambda,coefficient\n\"{lambda}\",{c}"),
                Format::Text => println!("{c}"),
            }
        }
        None => {
            let family = lr_family(&args.mu, &args.nu, &cache)?;
            match args.format.format() {
                Format::Csv => {
                    println!("lambda,coefficient");
                    for (lambda, c) in family.iter() {
                        println!("\"{lambda}\",{c}");
                    }
                }
                _ => println!("{}", serde_json::to_string(&family).expect("serializable")),
            }
        }
    }
    Ok(())
}

fn print_report(report: &SuiteReport, format: Format) {
    match format {
        Format::Csv => {
            println!("suite,instances,failures,elapsed_ms,seed");
            let seed = report.seed.map(|s| s.to_string()).unwrap_or_default();
            println!(
                "{},{},{},{},{}",
                report.suite,
                report.instances,
                report.failures.len(),
                report.elapsed_ms,
                seed
            );
        }
        _ => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("serializable")
        ),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let suite: Suite = args.suite.parse()?;
    if let (Some(lo), Some(hi)) = (args.lo, args.hi) {
        if lo > hi {
            return Err(Failure::Usage(format!("--lo {lo} exceeds --hi {hi}")));
        }
    }
    if let Some(jobs) = args.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Internal(e.to_string()))?;
    }
    let config = SuiteConfig {
        n: args.n,
        lo: args.lo,
        hi: args.hi,
        max_ab: args.max_ab,
        max_mu1: args.max_mu1,
        seed: args.seed,
        samples: args.samples,
        source: match args.source {
            SourceArg::Expansion => CoefficientSource::Expansion,
            SourceArg::Alternant => CoefficientSource::Alternant,
        },
        timing: args.timing,
    };
    let report = run_suite(suite, &config)?;
    print_report(&report, args.format.format());
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Phi(args) => cmd_phi(args),
        Command::Lr(args) => cmd_lr(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
