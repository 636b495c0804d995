//! Verification suites. Each one sweeps a parameter range, collects failing
//! checks, and returns a [`SuiteReport`]. Sweeps run in parallel; results are
//! gathered in input order so reports are deterministic.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::birational::{
    check_equal_product_fixed_point, check_gauge, check_r_matrix_gauge, check_r_matrix_relation,
    BirationalContext,
};
use crate::error::{Error, Result};
use crate::lr::{
    lr_family, lr_tableau, verify_phi_symmetry, verify_r_formula, CoefficientSource, SweepOptions,
};
use crate::report::{IdentityCheck, SuiteReport};
use crate::semifield::{tropical_tuple, QPlus, Semifield};
use crate::symmetric::{
    ominus_identities, shift_and_inverse_checks, verify_jacobi_trudi, verify_pieri, PieriSign,
    SchurCache,
};
use crate::tropical::{reproduce_counterexamples, PhiParams, TropicalContext};
use crate::tuple::{
    alpha_shape, count_r, ominus, partitions_bounded, partitions_of, snakes_in_box, tuples_in_box,
    RSetParams,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Main,
    Birational,
    Tropical,
    Pieri,
    Ominus,
    Jt,
    Rmatrix,
    Counterexamples,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Main,
        Suite::Birational,
        Suite::Tropical,
        Suite::Pieri,
        Suite::Ominus,
        Suite::Jt,
        Suite::Rmatrix,
        Suite::Counterexamples,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Main => "main",
            Suite::Birational => "birational",
            Suite::Tropical => "tropical",
            Suite::Pieri => "pieri",
            Suite::Ominus => "ominus",
            Suite::Jt => "jt",
            Suite::Rmatrix => "rmatrix",
            Suite::Counterexamples => "counterexamples",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// Overrides for a suite; `None` selects the suite's default.
#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    /// Restrict to one dimension.
    pub n: Option<usize>,
    pub lo: Option<i64>,
    pub hi: Option<i64>,
    pub max_ab: Option<i64>,
    pub max_mu1: Option<i64>,
    pub seed: u64,
    pub samples: Option<usize>,
    pub source: CoefficientSource,
    /// Record wall-clock time; off gives byte-identical reports.
    pub timing: bool,
}

impl SuiteConfig {
    fn dims(&self, default: impl IntoIterator<Item = usize>) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => default.into_iter().collect(),
        }
    }

    fn bounds(&self, lo: i64, hi: i64) -> Result<(i64, i64)> {
        let (lo, hi) = (self.lo.unwrap_or(lo), self.hi.unwrap_or(hi));
        if lo > hi {
            return Err(Error::Domain(format!("empty range: lo = {lo} > hi = {hi}")));
        }
        Ok((lo, hi))
    }
}

fn failing(checks: impl IntoIterator<Item = IdentityCheck>) -> Vec<Value> {
    checks
        .into_iter()
        .filter(|c| !c.pass)
        .map(|c| serde_json::to_value(c).expect("serializable"))
        .collect()
}

/// Runs the suite, measuring time when requested.
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut report = match suite {
        Suite::Main => main_suite(config),
        Suite::Birational => birational_suite(config),
        Suite::Tropical => tropical_suite(config),
        Suite::Pieri => pieri_suite(config),
        Suite::Ominus => ominus_suite(config),
        Suite::Jt => jt_suite(config),
        Suite::Rmatrix => rmatrix_suite(config),
        Suite::Counterexamples => counterexample_suite(),
    }?;
    report.elapsed_ms = if config.timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    Ok(report)
}

fn report(suite: Suite, params: Value, instances: u64, failures: Vec<Value>) -> SuiteReport {
    SuiteReport {
        suite: suite.name().into(),
        params,
        instances,
        failures,
        elapsed_ms: 0,
        seed: None,
        details: None,
    }
}

/// `c_{α,μ}^ω = c_{β,μ}^{φ(ω)}` over `n`, `a, b ≤ max_ab`, `μ_1 ≤ max_mu1`,
/// with the R-set formula checked on every coefficient.
fn main_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let dims = config.dims([2, 3, 4]);
    let max_ab = config.max_ab.unwrap_or(3);
    let max_mu1 = config.max_mu1.unwrap_or(4);
    let box_bounds = match (config.lo, config.hi) {
        (None, None) => None,
        _ => Some(config.bounds(0, 0)?),
    };
    let options = SweepOptions {
        source: config.source,
        box_bounds,
        cross_check_r: true,
    };
    let mut jobs = Vec::new();
    for &n in &dims {
        for a in 0..=max_ab {
            for b in 0..=max_ab {
                for mu in partitions_bounded(n, max_mu1) {
                    jobs.push(PhiParams::new(a, b, mu)?);
                }
            }
        }
    }
    let cache = SchurCache::new();
    let reports = jobs
        .par_iter()
        .map(|params| verify_phi_symmetry(params, &options, &cache))
        .collect::<Result<Vec<_>>>()?;
    let instances = reports.iter().map(|r| r.omegas_checked).sum();
    let failures = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| json!({"n": r.n, "a": r.a, "b": r.b, "mu": r.mu, "failures": r.failures}))
        .collect();
    let mut out = report(
        Suite::Main,
        json!({"n": dims, "max_ab": max_ab, "max_mu1": max_mu1, "box": box_bounds, "source": config.source}),
        instances,
        failures,
    );
    out.details = Some(json!({
        "families": reports.len(),
        "support_total": reports.iter().map(|r| r.support_size).sum::<usize>(),
    }));
    Ok(out)
}

fn random_qplus(rng: &mut ChaCha8Rng) -> QPlus {
    QPlus::new(rng.gen_range(1..=20u32), rng.gen_range(1..=20u32)).expect("positive")
}

fn random_tuple(rng: &mut ChaCha8Rng, n: usize) -> Vec<QPlus> {
    (0..n).map(|_| random_qplus(rng)).collect()
}

/// `(u, x, g)` triples over `Q+`, drawn from one seeded stream per `n`.
fn qplus_samples(n: usize, samples: usize, seed: u64) -> Vec<(Vec<QPlus>, Vec<QPlus>, Vec<QPlus>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9).wrapping_add(n as u64));
    (0..samples)
        .map(|_| {
            (
                random_tuple(&mut rng, n),
                random_tuple(&mut rng, n),
                random_tuple(&mut rng, n),
            )
        })
        .collect()
}

fn birational_checks<K: Semifield>(u: &[K], x: &[K], g: &[K]) -> Result<Vec<IdentityCheck>> {
    let ctx = BirationalContext::new(u.to_vec())?;
    let mut checks = ctx.check_all_identities(x)?;
    checks.extend(ctx.check_t_table_steps(x)?);
    checks.push(check_equal_product_fixed_point(u, x)?);
    checks.push(check_r_matrix_relation(u, x)?);
    checks.push(check_gauge(g, u, x)?);
    checks.push(check_r_matrix_gauge(g, u, x)?);
    Ok(checks)
}

/// The birational identities on seeded random `Q+` inputs.
fn birational_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let dims = config.dims(2..=5);
    let samples = config.samples.unwrap_or(1000);
    let mut instances = 0;
    let mut failures = Vec::new();
    for &n in &dims {
        let batch = qplus_samples(n, samples, config.seed);
        let results = batch
            .par_iter()
            .map(|(u, x, g)| birational_checks(u, x, g))
            .collect::<Result<Vec<_>>>()?;
        instances += results.len() as u64;
        failures.extend(results.into_iter().flat_map(failing));
    }
    let mut out = report(
        Suite::Birational,
        json!({"n": dims, "samples": samples}),
        instances,
        failures,
    );
    out.seed = Some(config.seed);
    Ok(out)
}

/// R-matrix relation and gauge covariance over `Q+` and the tropical integers.
fn rmatrix_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let dims = config.dims(2..=5);
    let samples = config.samples.unwrap_or(1000);
    let mut instances = 0;
    let mut failures = Vec::new();
    for &n in &dims {
        let batch = qplus_samples(n, samples, config.seed);
        let results = batch
            .par_iter()
            .map(|(u, x, g)| {
                Ok(vec![
                    check_r_matrix_relation(u, x)?,
                    check_r_matrix_gauge(g, u, x)?,
                    check_gauge(g, u, x)?,
                ])
            })
            .collect::<Result<Vec<_>>>()?;
        instances += results.len() as u64;
        failures.extend(results.into_iter().flat_map(failing));

        let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(1000 + n as u64));
        let mut draw =
            || tropical_tuple(&(0..n).map(|_| rng.gen_range(-6..=6)).collect::<Vec<i64>>());
        let batch: Vec<_> = (0..samples).map(|_| (draw(), draw(), draw())).collect();
        let results = batch
            .par_iter()
            .map(|(u, x, g)| {
                Ok(vec![
                    check_r_matrix_relation(u, x)?,
                    check_r_matrix_gauge(g, u, x)?,
                    check_gauge(g, u, x)?,
                ])
            })
            .collect::<Result<Vec<Vec<IdentityCheck>>>>()?;
        instances += results.len() as u64;
        failures.extend(results.into_iter().flat_map(failing));
    }
    let mut out = report(
        Suite::Rmatrix,
        json!({"n": dims, "samples": samples}),
        instances,
        failures,
    );
    out.seed = Some(config.seed);
    Ok(out)
}

/// `f_μ` identities on every `(μ, γ) ∈ [lo, hi]^n × [lo, hi]^n`, R-set
/// cardinality transport for `n ≤ 3`, and the generic tropical `f_u` checks
/// on the `[−2, 2]` grid for `n ≤ 3`.
fn tropical_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let dims = config.dims([2, 3, 4]);
    let (lo, hi) = config.bounds(-3, 3)?;
    let max_ab = config.max_ab.unwrap_or(2);
    let mut instances = 0;
    let mut failures = Vec::new();
    for &n in &dims {
        let grid = tuples_in_box(n, lo, hi);
        let per_mu: Vec<Vec<Value>> = grid
            .par_iter()
            .map(|mu| {
                let ctx = TropicalContext::new(mu.clone());
                let mut bad = Vec::new();
                for gamma in &grid {
                    let failed = ctx.failed_identities(gamma)?;
                    if !failed.is_empty() {
                        bad.push(json!({"mu": mu, "gamma": gamma, "failed": failed}));
                    }
                    if n <= 3 {
                        let eta = ctx.apply(gamma)?;
                        for a in 0..=max_ab {
                            for b in 0..=max_ab {
                                let src = count_r(&RSetParams { mu: mu.clone(), gamma: gamma.clone(), a, b });
                                let dst = count_r(&RSetParams { mu: mu.clone(), gamma: eta.clone(), a: b, b: a });
                                if src != dst {
                                    bad.push(json!({"mu": mu, "gamma": gamma, "a": a, "b": b, "r_sizes": [src, dst]}));
                                }
                            }
                        }
                    }
                }
                Ok(bad)
            })
            .collect::<Result<_>>()?;
        instances += (grid.len() * grid.len()) as u64;
        failures.extend(per_mu.into_iter().flatten());

        if n <= 3 {
            let small = tuples_in_box(n, -2, 2);
            let results = small
                .par_iter()
                .map(|u| {
                    let u = tropical_tuple(u.entries());
                    let mut checks = Vec::new();
                    for x in &small {
                        let x = tropical_tuple(x.entries());
                        checks.extend(birational_checks(&u, &x, &u)?);
                    }
                    Ok(checks)
                })
                .collect::<Result<Vec<Vec<IdentityCheck>>>>()?;
            instances += (small.len() * small.len()) as u64;
            failures.extend(results.into_iter().flat_map(failing));
        }
    }
    Ok(report(
        Suite::Tropical,
        json!({"n": dims, "lo": lo, "hi": hi, "max_ab": max_ab}),
        instances,
        failures,
    ))
}

/// Both Pieri rules for every snake in `[lo, hi]^n` and `k ∈ [−1, 6]`.
fn pieri_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let dims = config.dims([2, 3]);
    let (lo, hi) = config.bounds(-2, 4)?;
    let cache = SchurCache::new();
    let mut instances = 0;
    let mut failures = Vec::new();
    for &n in &dims {
        let snakes = snakes_in_box(n, lo, hi);
        let results = snakes
            .par_iter()
            .map(|lambda| {
                let mut checks = Vec::new();
                for k in -1..=6 {
                    for sign in [PieriSign::Plus, PieriSign::Minus] {
                        checks.push(verify_pieri(lambda, k, sign, &cache)?);
                    }
                }
                Ok(checks)
            })
            .collect::<Result<Vec<_>>>()?;
        instances += results.iter().map(|c| c.len() as u64).sum::<u64>();
        failures.extend(results.into_iter().flat_map(failing));
    }
    Ok(report(
        Suite::Pieri,
        json!({"n": dims, "lo": lo, "hi": hi, "k": [-1, 6]}),
        instances,
        failures,
    ))
}

/// The `b ⊖ a` identities, the shift and inversion rules on the same shapes,
/// and the R-set expansion of `h_a^− h_b^+ s̄_μ` for `n ≤ 3`, `a, b ≤ 2`.
fn ominus_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let dims = config.dims([2, 3, 4]);
    let max_ab = config.max_ab.unwrap_or(4);
    let cache = SchurCache::new();
    let mut jobs = Vec::new();
    for &n in &dims {
        for a in 0..=max_ab {
            for b in 0..=max_ab {
                jobs.push((n, a, b));
            }
        }
    }
    let results = jobs
        .par_iter()
        .map(|&(n, a, b)| {
            let mut checks = ominus_identities(n, a, b, &cache)?;
            for shape in [ominus(b, a, n)?, alpha_shape(a, b, n)?] {
                for d in -2..=2 {
                    checks.extend(shift_and_inverse_checks(&shape, d, &cache)?);
                }
            }
            Ok(checks)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut instances = results.iter().map(|c| c.len() as u64).sum::<u64>();
    let mut failures: Vec<Value> = results.into_iter().flat_map(failing).collect();

    let r_dims: Vec<usize> = dims.iter().copied().filter(|&n| n <= 3).collect();
    let mut r_jobs = Vec::new();
    for &n in &r_dims {
        for mu in snakes_in_box(n, -1, 2) {
            for a in 0..=max_ab.min(2) {
                for b in 0..=max_ab.min(2) {
                    r_jobs.push((mu.clone(), a, b));
                }
            }
        }
    }
    let results = r_jobs
        .par_iter()
        .map(|(mu, a, b)| verify_r_formula(mu, *a, *b, &cache))
        .collect::<Result<Vec<_>>>()?;
    instances += results.len() as u64;
    failures.extend(failing(results));

    Ok(report(
        Suite::Ominus,
        json!({"n": dims, "max_ab": max_ab, "r_formula": {"n": r_dims, "mu_box": [-1, 2], "max_ab": max_ab.min(2)}}),
        instances,
        failures,
    ))
}

/// Jacobi-Trudi for every `p + q ≤ n` and partitions with entries `≤ 3`.
fn jt_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let dims = config.dims(1..=4);
    let max_entry = config.hi.unwrap_or(3);
    let cache = SchurCache::new();
    let mut jobs = Vec::new();
    for &n in &dims {
        for p in 0..=n {
            for q in 0..=n - p {
                for a in partitions_bounded(p, max_entry) {
                    for b in partitions_bounded(q, max_entry) {
                        jobs.push((n, a.clone(), b));
                    }
                }
            }
        }
    }
    let results = jobs
        .par_iter()
        .map(|(n, a, b)| verify_jacobi_trudi(*n, a.entries(), b.entries(), &cache))
        .collect::<Result<Vec<_>>>()?;
    let instances = results.len() as u64;
    Ok(report(
        Suite::Jt,
        json!({"n": dims, "max_entry": max_entry}),
        instances,
        failing(results),
    ))
}

fn counterexample_suite() -> Result<SuiteReport> {
    let rep = reproduce_counterexamples();
    let failures = if rep.pass {
        Vec::new()
    } else {
        vec![serde_json::to_value(&rep).expect("serializable")]
    };
    let mut out = report(
        Suite::Counterexamples,
        json!({}),
        (rep.family.len() + rep.n4_candidates.len()) as u64,
        failures,
    );
    out.details = Some(serde_json::to_value(&rep).expect("serializable"));
    Ok(out)
}

/// Expansion coefficients against the skew-tableau count for all partitions
/// `μ, ν` with `|μ|, |ν| ≤ max_size` in `n` variables.
pub fn tableau_cross_check(n: usize, max_size: i64) -> Result<SuiteReport> {
    let shapes: Vec<_> = (0..=max_size).flat_map(|s| partitions_of(s, n)).collect();
    let pairs: Vec<_> = shapes
        .iter()
        .flat_map(|mu| shapes.iter().map(move |nu| (mu, nu)))
        .collect();
    let cache = SchurCache::new();
    let results = pairs
        .par_iter()
        .map(|&(mu, nu)| {
            let fam = lr_family(mu, nu, &cache)?;
            let mut bad = Vec::new();
            let mut count = 0u64;
            for lambda in partitions_of(mu.size() + nu.size(), n) {
                count += 1;
                let oracle = lr_tableau(mu, nu, &lambda);
                if fam.get(&lambda) != oracle.into() {
                    bad.push(json!({"mu": mu, "nu": nu, "lambda": lambda, "expansion": fam.get(&lambda).to_string(), "tableau": oracle}));
                }
            }
            Ok((count, bad))
        })
        .collect::<Result<Vec<_>>>()?;
    let instances = results.iter().map(|r| r.0).sum();
    let failures = results.into_iter().flat_map(|r| r.1).collect();
    Ok(SuiteReport {
        suite: "lr-tableau".into(),
        params: json!({"n": n, "max_size": max_size}),
        instances,
        failures,
        elapsed_ms: 0,
        seed: None,
        details: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass_and_are_deterministic() {
        let config = SuiteConfig {
            n: Some(2),
            samples: Some(20),
            max_ab: Some(1),
            max_mu1: Some(2),
            ..Default::default()
        };
        for suite in Suite::ALL {
            let first = run_suite(suite, &config).unwrap();
            assert!(first.passed(), "{suite}: {:?}", first.failures);
            let second = run_suite(suite, &config).unwrap();
            assert_eq!(
                serde_json::to_string(&first).unwrap(),
                serde_json::to_string(&second).unwrap()
            );
        }
    }

    #[test]
    fn seeds_change_samples() {
        assert_ne!(qplus_samples(3, 5, 0), qplus_samples(3, 5, 1));
        assert_eq!(qplus_samples(3, 5, 7), qplus_samples(3, 5, 7));
    }

    #[test]
    fn bad_bounds_are_rejected() {
        let config = SuiteConfig {
            lo: Some(2),
            hi: Some(1),
            ..Default::default()
        };
        assert!(run_suite(Suite::Pieri, &config).is_err());
    }

    #[test]
    fn tableau_cross_check_small() {
        let rep = tableau_cross_check(3, 3).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
    }
}
