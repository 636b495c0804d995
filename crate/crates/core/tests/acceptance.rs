//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use lrsym::lr::{lr_coeff, verify_phi_symmetry, CoefficientSource, LrQuery, SweepOptions};
use lrsym::report::SuiteReport;
use lrsym::symmetric::SchurCache;
use lrsym::tropical::{phi_direct, reproduce_counterexamples, PhiParams};
use lrsym::tuple::partitions_bounded;
use lrsym::verify::{run_suite, tableau_cross_check, Suite, SuiteConfig};
use lrsym::{IntTuple, Snake};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn from_report(report: &SuiteReport) -> Outcome {
    let mut detail = format!(
        "{} instances, {} failures",
        report.instances,
        report.failures.len()
    );
    if let Some(first) = report.failures.first() {
        detail.push_str(&format!("; first: {first}"));
    }
    outcome(report.passed(), detail)
}

fn t<const N: usize>(e: [i64; N]) -> IntTuple {
    IntTuple::from(e)
}

fn s<const N: usize>(e: [i64; N]) -> Snake {
    Snake::try_from(e).unwrap()
}

fn reference_instance() -> Outcome {
    let params = PhiParams::new(1, 4, s([2, 1, 0, 0])).unwrap();
    let trace = phi_direct(&params, &t([5, 3, 2, 0])).unwrap();
    let cache = SchurCache::new();
    let c_alpha = lr_coeff(
        &LrQuery::new(s([5, 1, 1, 0]), s([2, 1, 0, 0]), t([5, 3, 2, 0])).unwrap(),
        &cache,
    )
    .unwrap();
    let c_beta = lr_coeff(
        &LrQuery::new(s([5, 4, 4, 0]), s([2, 1, 0, 0]), t([5, 5, 5, 1])).unwrap(),
        &cache,
    )
    .unwrap();
    let pass = trace.nu == t([4, 2, 1, -1])
        && trace.tau == vec![1, 2, 2, 3]
        && trace.eta == t([1, 1, 1, -3])
        && trace.image == t([5, 5, 5, 1])
        && c_alpha == BigInt::from(1)
        && c_beta == BigInt::from(1);
    outcome(
        pass,
        format!(
            "nu={} tau={:?} eta={} phi={} c_alpha={c_alpha} c_beta={c_beta}",
            trace.nu, trace.tau, trace.eta, trace.image
        ),
    )
}

fn defaults() -> SuiteConfig {
    SuiteConfig::default()
}

/// Splits main-sweep failures into R-set formula mismatches and the rest.
fn split_main(report: &SuiteReport) -> (usize, usize) {
    let mut r_set = 0;
    let mut other = 0;
    for family in &report.failures {
        for f in family["failures"].as_array().into_iter().flatten() {
            if f["check"] == "r-set-formula" {
                r_set += 1;
            } else {
                other += 1;
            }
        }
    }
    (r_set, other)
}

fn main_sweep(report: &SuiteReport) -> Outcome {
    let (_, other) = split_main(report);
    outcome(
        other == 0,
        format!(
            "{} omegas over {} families, {other} failures",
            report.instances,
            report
                .details
                .as_ref()
                .map_or(0, |d| d["families"].as_u64().unwrap_or(0))
        ),
    )
}

fn lr_cross_check(report: &SuiteReport) -> Outcome {
    let (r_set, _) = split_main(report);
    let mut pass = r_set == 0;
    let mut detail = format!(
        "R-set formula: {} omegas, {r_set} mismatches",
        report.instances
    );

    let mut tableau_instances = 0;
    let mut tableau_failures = 0;
    for n in 1..=4 {
        let rep = tableau_cross_check(n, 5).unwrap();
        tableau_instances += rep.instances;
        tableau_failures += rep.failures.len();
    }
    pass &= tableau_failures == 0;
    detail.push_str(&format!(
        "; tableau oracle: {tableau_instances} coefficients, {tableau_failures} mismatches"
    ));

    // Second code path for the same sweep: alternant read-off.
    let cache = SchurCache::new();
    let options = SweepOptions {
        source: CoefficientSource::Alternant,
        box_bounds: None,
        cross_check_r: true,
    };
    let mut alt_failures = 0;
    for n in 2..=4 {
        for a in 0..=3 {
            for b in 0..=3 {
                for mu in partitions_bounded(n, 4) {
                    let params = PhiParams::new(a, b, mu).unwrap();
                    alt_failures += verify_phi_symmetry(&params, &options, &cache)
                        .unwrap()
                        .failures
                        .len();
                }
            }
        }
    }
    pass &= alt_failures == 0;
    detail.push_str(&format!(
        "; alternant read-off sweep: {alt_failures} failures"
    ));
    outcome(pass, detail)
}

fn counterexamples() -> Outcome {
    let rep = reproduce_counterexamples();
    outcome(
        rep.pass,
        format!(
            "{} family cases, n=4 candidates distinct={}, f_u(x)={}",
            rep.family.len(),
            rep.n4_distinct,
            rep.n4_f_u_x
        ),
    )
}

fn timed(f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn main() -> ExitCode {
    let mut all_pass = true;
    let mut line =
        |id: u32, name: &str, (out, elapsed): (Outcome, Duration), limit: Option<Duration>| {
            let in_time = limit.is_none_or(|l| elapsed < l);
            let pass = out.pass && in_time;
            all_pass &= pass;
            let budget = limit.map_or(String::new(), |l| format!(" (limit {} ms)", l.as_millis()));
            println!(
                "{} criterion {id}: {name} [{} ms{budget}] {}",
                if pass { "PASS" } else { "FAIL" },
                elapsed.as_millis(),
                out.detail
            );
        };

    line(
        1,
        "reference instance phi(5,3,2,0) = (5,5,5,1) with equal coefficients",
        timed(reference_instance),
        Some(Duration::from_secs(1)),
    );

    let start = Instant::now();
    let main_report = run_suite(Suite::Main, &defaults()).unwrap();
    let main_elapsed = start.elapsed();
    line(
        2,
        "coefficient equality under phi, n in 2..4, a,b <= 3, mu_1 <= 4",
        (main_sweep(&main_report), main_elapsed),
        None,
    );

    line(
        3,
        "tropical f_mu involution and identities on [-3,3]^n, n in 2..4",
        timed(|| from_report(&run_suite(Suite::Tropical, &defaults()).unwrap())),
        None,
    );

    line(
        4,
        "Q+ involution, conserved quantities, table recurrences, R-matrix and gauge",
        timed(|| from_report(&run_suite(Suite::Birational, &defaults()).unwrap())),
        Some(Duration::from_secs(30)),
    );

    line(
        5,
        "Pieri rules for h_k^+ and h_k^-",
        timed(|| from_report(&run_suite(Suite::Pieri, &defaults()).unwrap())),
        None,
    );

    line(
        6,
        "b-minus-a expansions, shift and inversion rules, R-set expansion",
        timed(|| from_report(&run_suite(Suite::Ominus, &defaults()).unwrap())),
        None,
    );

    line(
        7,
        "Jacobi-Trudi determinants",
        timed(|| from_report(&run_suite(Suite::Jt, &defaults()).unwrap())),
        None,
    );

    line(
        8,
        "LR coefficients: R-set formula, tableau oracle, alternant read-off",
        timed(|| lr_cross_check(&main_report)),
        None,
    );

    line(
        9,
        "tropical non-uniqueness examples",
        timed(counterexamples),
        Some(Duration::from_secs(1)),
    );

    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
