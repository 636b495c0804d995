//! Littlewood-Richardson coefficients `c_{μ,ν}^λ` in `n` variables, their
//! R-set formula for the shapes `α = (a+b, a^{n−2})`, and the sweep that
//! checks `c_{α,μ}^ω = c_{β,μ}^{φ(ω)}`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::laurent::exponent;
use crate::report::IdentityCheck;
use crate::symmetric::{expand_in_schur_basis, h_minus, h_plus, SchurCache, SchurExpansion};
use crate::tropical::{phi, phi_inverse, PhiParams};
use crate::tuple::{
    count_r, partitions_of, pieri_minus_shapes, pieri_plus_shapes, staircase, tuples_in_box,
    IntTuple, RSetParams, Snake,
};

/// A coefficient query; `lambda` may be any tuple, the coefficient being zero
/// off `Par[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LrQuery {
    pub mu: Snake,
    pub nu: Snake,
    pub lambda: IntTuple,
}

impl LrQuery {
    pub fn new(mu: Snake, nu: Snake, lambda: IntTuple) -> Result<Self> {
        let n = mu.dim();
        if nu.dim() != n || lambda.dim() != n {
            return Err(Error::Dimension(format!(
                "mu, nu and lambda must have the same length, got {}, {}, {}",
                n,
                nu.dim(),
                lambda.dim()
            )));
        }
        check_partition(&mu, "mu")?;
        check_partition(&nu, "nu")?;
        Ok(LrQuery { mu, nu, lambda })
    }
}

fn check_partition(s: &Snake, name: &str) -> Result<()> {
    if s.is_partition() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} = ({s}) is not a partition")))
    }
}

/// The coefficients `λ ↦ c_{μ,ν}^λ` over `Par[n]`; only positive values are
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CoefficientFamily {
    coeffs: BTreeMap<IntTuple, BigInt>,
}

impl CoefficientFamily {
    pub fn get(&self, lambda: &IntTuple) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IntTuple, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &IntTuple> {
        self.coeffs.keys()
    }

    /// The values, sorted.
    pub fn multiset(&self) -> Vec<BigInt> {
        self.coeffs.values().cloned().sorted().collect()
    }

    fn from_expansion(expansion: &SchurExpansion) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (lambda, c) in expansion.iter() {
            if !lambda.is_partition() || !c.is_positive() {
                return Err(Error::NotInSchurSpan(format!(
                    "product of Schur polynomials has coefficient {c} at ({lambda})"
                )));
            }
            coeffs.insert(lambda.as_tuple().clone(), c.clone());
        }
        Ok(CoefficientFamily { coeffs })
    }
}

impl Serialize for CoefficientFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(
            self.coeffs
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string())),
        )
    }
}

/// `s̄_μ · s̄_ν` written in the `s̄` basis.
pub fn product_expansion(mu: &Snake, nu: &Snake, cache: &SchurCache) -> Result<SchurExpansion> {
    let product = &*cache.get(mu)? * &*cache.get(nu)?;
    expand_in_schur_basis(&product, cache)
}

/// `c_{μ,ν}^λ` by expanding `s̄_μ · s̄_ν`.
pub fn lr_coeff(query: &LrQuery, cache: &SchurCache) -> Result<BigInt> {
    if !query.lambda.is_partition() {
        return Ok(BigInt::zero());
    }
    Ok(lr_family(&query.mu, &query.nu, cache)?.get(&query.lambda))
}

/// All nonzero `c_{μ,ν}^λ`, by expanding `s̄_μ · s̄_ν`.
pub fn lr_family(mu: &Snake, nu: &Snake, cache: &SchurCache) -> Result<CoefficientFamily> {
    LrQuery::new(mu.clone(), nu.clone(), mu.as_tuple().clone())?;
    CoefficientFamily::from_expansion(&product_expansion(mu, nu, cache)?)
}

/// All nonzero `c_{μ,ν}^λ`, read off `s̄_μ · a_{ν+ρ} = Σ_λ c_{μ,ν}^λ a_{λ+ρ}`:
/// the coefficient of the strictly decreasing monomial `x^{λ+ρ}` is
/// `c_{μ,ν}^λ`.
pub fn lr_family_via_alternant(
    mu: &Snake,
    nu: &Snake,
    cache: &SchurCache,
) -> Result<CoefficientFamily> {
    LrQuery::new(mu.clone(), nu.clone(), mu.as_tuple().clone())?;
    let n = mu.dim();
    let rho = staircase(n)?;
    let shifted: Vec<i32> = nu
        .add(&rho)
        .entries()
        .iter()
        .map(|&v| exponent(v))
        .collect::<Result<_>>()?;
    let rho: Vec<i64> = rho.into_tuple().into_entries();
    let s_mu = cache.get(mu)?;
    let mut acc: HashMap<Vec<i64>, BigInt> = HashMap::new();
    let perms: Vec<(Vec<usize>, bool)> = (0..n)
        .permutations(n)
        .map(|p| {
            let odd = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count()
                % 2
                == 1;
            (p, odd)
        })
        .collect();
    let mut kappa = vec![0i64; n];
    for (exps, c) in s_mu.terms() {
        for (perm, odd) in &perms {
            for (i, &w) in perm.iter().enumerate() {
                kappa[w] = exps[w] as i64 + shifted[i] as i64;
            }
            if kappa.windows(2).all(|w| w[0] > w[1]) {
                let slot = acc
                    .entry(kappa.iter().zip(&rho).map(|(k, r)| k - r).collect())
                    .or_default();
                if *odd {
                    *slot -= c;
                } else {
                    *slot += c;
                }
            }
        }
    }
    let mut coeffs = BTreeMap::new();
    for (lambda, c) in acc {
        if c.is_zero() {
            continue;
        }
        let lambda = IntTuple::new(lambda)?;
        if !lambda.is_partition() || c.is_negative() {
            return Err(Error::NotInSchurSpan(format!(
                "coefficient {c} at ({lambda})"
            )));
        }
        coeffs.insert(lambda, c);
    }
    Ok(CoefficientFamily { coeffs })
}

/// `c_{α,μ}^λ = |R_{μ,a,b}(λ−a)| − |R_{μ,a−1,b−1}(λ−a)|`.
pub fn lr_via_r(params: &PhiParams, lambda: &IntTuple) -> i64 {
    let gamma = lambda.shift(-params.a);
    let mu = params.mu.as_tuple().clone();
    let outer = count_r(&RSetParams {
        mu: mu.clone(),
        gamma: gamma.clone(),
        a: params.a,
        b: params.b,
    });
    let inner = count_r(&RSetParams {
        mu,
        gamma,
        a: params.a - 1,
        b: params.b - 1,
    });
    outer as i64 - inner as i64
}

/// `c_{μ,ν}^λ` by counting Littlewood-Richardson tableaux of shape `λ/μ`
/// and content `ν`: semistandard fillings whose right-to-left, top-to-bottom
/// reading word is a lattice word.
pub fn lr_tableau(mu: &Snake, nu: &Snake, lambda: &IntTuple) -> u64 {
    let n = mu.dim();
    if nu.dim() != n
        || lambda.dim() != n
        || !mu.is_partition()
        || !nu.is_partition()
        || !lambda.is_partition()
    {
        return 0;
    }
    if lambda.size() != mu.size() + nu.size()
        || (0..n).any(|i| lambda.entries()[i] < mu.entries()[i])
    {
        return 0;
    }
    let lam: Vec<usize> = lambda.entries().iter().map(|&v| v as usize).collect();
    let inner: Vec<usize> = mu.entries().iter().map(|&v| v as usize).collect();
    let content: Vec<usize> = nu.entries().iter().map(|&v| v as usize).collect();
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|r| (inner[r]..lam[r]).rev().map(move |c| (r, c)))
        .collect();

    struct State<'a> {
        lam: &'a [usize],
        inner: &'a [usize],
        content: &'a [usize],
        cells: &'a [(usize, usize)],
        grid: Vec<Vec<usize>>,
        counts: Vec<usize>,
    }

    fn go(s: &mut State, k: usize) -> u64 {
        if k == s.cells.len() {
            return 1;
        }
        let (r, c) = s.cells[k];
        // Filling runs right to left, so the right neighbour is an upper bound.
        let hi = if c + 1 < s.lam[r] {
            s.grid[r][c + 1]
        } else {
            usize::MAX
        };
        let lo = if r > 0 && c >= s.inner[r - 1] {
            s.grid[r - 1][c] + 1
        } else {
            0
        };
        let mut total = 0;
        for v in lo..s.content.len().min(hi.saturating_add(1)) {
            if s.counts[v] == s.content[v] || (v > 0 && s.counts[v] == s.counts[v - 1]) {
                continue;
            }
            s.counts[v] += 1;
            s.grid[r][c] = v;
            total += go(s, k + 1);
            s.counts[v] -= 1;
        }
        total
    }

    let mut state = State {
        lam: &lam,
        inner: &inner,
        content: &content,
        cells: &cells,
        grid: lam.iter().map(|&len| vec![0; len]).collect(),
        counts: vec![0; n],
    };
    go(&mut state, 0)
}

/// `h_a^− h_b^+ s̄_μ` expanded in the `s̄` basis against `Σ_γ |R_{μ,a,b}(γ)| s̄_γ`.
pub fn verify_r_formula(mu: &Snake, a: i64, b: i64, cache: &SchurCache) -> Result<IdentityCheck> {
    let n = mu.dim();
    let lhs = expand_in_schur_basis(
        &(&(&h_minus(n, a) * &h_plus(n, b)) * &*cache.get(mu)?),
        cache,
    )?;
    let mut gammas = BTreeSet::new();
    for nu in pieri_minus_shapes(mu, a) {
        gammas.extend(pieri_plus_shapes(&nu, b));
    }
    let rhs: SchurExpansion = gammas
        .into_iter()
        .map(|gamma| {
            let count = count_r(&RSetParams {
                mu: mu.as_tuple().clone(),
                gamma: gamma.as_tuple().clone(),
                a,
                b,
            });
            (gamma, BigInt::from(count))
        })
        .collect();
    let render = |e: &SchurExpansion| serde_json::to_string(e).expect("serializable");
    Ok(IdentityCheck {
        identity: "r-set-expansion".into(),
        instance: format!("mu=({mu}) a={a} b={b}"),
        pass: lhs == rhs,
        lhs: render(&lhs),
        rhs: render(&rhs),
    })
}

/// How `verify_phi_symmetry` obtains coefficient families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum CoefficientSource {
    /// Expand `s̄_α · s̄_μ` in the `s̄` basis.
    #[default]
    Expansion,
    /// Read coefficients off `s̄_α · a_{μ+ρ}`.
    Alternant,
}

#[derive(Clone, Debug, Default)]
pub struct SweepOptions {
    pub source: CoefficientSource,
    /// Extra box `[lo, hi]^n` of `ω` values on top of the stratum and margin.
    pub box_bounds: Option<(i64, i64)>,
    /// Also compare each coefficient with the R-set formula.
    pub cross_check_r: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiSymmetryReport {
    pub n: usize,
    pub a: i64,
    pub b: i64,
    pub mu: Snake,
    pub alpha: Snake,
    pub beta: Snake,
    pub omegas_checked: u64,
    pub support_size: usize,
    pub multiset_equal: bool,
    pub phi_injective_on_support: bool,
    pub failures: Vec<Value>,
}

impl PhiSymmetryReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn family(
    source: CoefficientSource,
    x: &Snake,
    y: &Snake,
    cache: &SchurCache,
) -> Result<CoefficientFamily> {
    match source {
        CoefficientSource::Expansion => lr_family(x, y, cache),
        CoefficientSource::Alternant => lr_family_via_alternant(x, y, cache),
    }
}

/// Checks `c_{α,μ}^ω = c_{β,μ}^{φ(ω)}` on the degree stratum
/// `|ω| = |α| + |μ|` of `Par[n]`, every `ω ± e_i` around it, and an optional
/// box; then the multiset equality of the two families and the injectivity
/// of `φ` on the support.
pub fn verify_phi_symmetry(
    params: &PhiParams,
    options: &SweepOptions,
    cache: &SchurCache,
) -> Result<PhiSymmetryReport> {
    let n = params.n();
    let (alpha, beta) = (params.alpha(), params.beta());
    let fam_alpha = family(options.source, &alpha, &params.mu, cache)?;
    let fam_beta = family(options.source, &beta, &params.mu, cache)?;
    let swapped = params.swapped();
    let mut failures = Vec::new();

    let stratum = partitions_of(alpha.size() + params.mu.size(), n);
    let mut omegas: BTreeSet<IntTuple> = BTreeSet::new();
    for omega in &stratum {
        omegas.insert(omega.as_tuple().clone());
        for i in 0..n {
            for d in [-1, 1] {
                let mut e = omega.entries().to_vec();
                e[i] += d;
                omegas.insert(IntTuple::new(e)?);
            }
        }
    }
    if let Some((lo, hi)) = options.box_bounds {
        omegas.extend(tuples_in_box(n, lo, hi));
    }
    omegas.extend(fam_alpha.support().cloned());

    for omega in &omegas {
        let image = phi(params, omega)?;
        let lhs = fam_alpha.get(omega);
        let rhs = fam_beta.get(&image);
        if lhs != rhs {
            failures.push(json!({
                "check": "coefficient", "omega": omega.to_string(), "phi": image.to_string(),
                "lhs": lhs.to_string(), "rhs": rhs.to_string(),
            }));
        }
        if phi_inverse(params, &image)? != *omega {
            failures.push(json!({"check": "phi-inverse", "omega": omega.to_string(), "phi": image.to_string()}));
        }
        if options.cross_check_r {
            for (p, lambda, fam) in [(params, omega, &fam_alpha), (&swapped, &image, &fam_beta)] {
                let via_r = lr_via_r(p, lambda);
                if BigInt::from(via_r) != fam.get(lambda) {
                    failures.push(json!({
                        "check": "r-set-formula", "a": p.a, "b": p.b, "lambda": lambda.to_string(),
                        "via_r": via_r, "coefficient": fam.get(lambda).to_string(),
                    }));
                }
            }
        }
    }

    let multiset_equal = fam_alpha.multiset() == fam_beta.multiset();
    if !multiset_equal {
        failures
            .push(json!({"check": "multiset", "alpha_family": fam_alpha, "beta_family": fam_beta}));
    }
    let images: BTreeSet<IntTuple> = fam_alpha
        .support()
        .map(|w| phi(params, w))
        .collect::<Result<_>>()?;
    let phi_injective_on_support = images.len() == fam_alpha.len();
    if !phi_injective_on_support {
        failures.push(json!({"check": "injective"}));
    }
    if images.iter().ne(fam_beta.support()) {
        failures.push(json!({"check": "support-image"}));
    }

    Ok(PhiSymmetryReport {
        n,
        a: params.a,
        b: params.b,
        mu: params.mu.clone(),
        alpha,
        beta,
        omegas_checked: omegas.len() as u64,
        support_size: fam_alpha.len(),
        multiset_equal,
        phi_injective_on_support,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tuple::partitions_bounded;
    use num_traits::One;

    fn snake<const N: usize>(e: [i64; N]) -> Snake {
        Snake::try_from(e).unwrap()
    }

    fn t<const N: usize>(e: [i64; N]) -> IntTuple {
        IntTuple::from(e)
    }

    fn coeff(mu: Snake, nu: Snake, lambda: IntTuple, cache: &SchurCache) -> BigInt {
        lr_coeff(&LrQuery::new(mu, nu, lambda).unwrap(), cache).unwrap()
    }

    #[test]
    fn golden_coefficients() {
        let cache = SchurCache::new();
        assert_eq!(
            coeff(
                snake([5, 1, 1, 0]),
                snake([2, 1, 0, 0]),
                t([5, 3, 2, 0]),
                &cache
            ),
            BigInt::one()
        );
        assert_eq!(
            coeff(
                snake([5, 4, 4, 0]),
                snake([2, 1, 0, 0]),
                t([5, 5, 5, 1]),
                &cache
            ),
            BigInt::one()
        );
        assert_eq!(
            lr_tableau(&snake([5, 1, 1, 0]), &snake([2, 1, 0, 0]), &t([5, 3, 2, 0])),
            1
        );
        let params = PhiParams::new(1, 4, snake([2, 1, 0, 0])).unwrap();
        assert_eq!(lr_via_r(&params, &t([5, 3, 2, 0])), 1);
        assert_eq!(lr_via_r(&params.swapped(), &t([5, 5, 5, 1])), 1);
    }

    #[test]
    fn small_coefficients() {
        let cache = SchurCache::new();
        assert_eq!(
            coeff(snake([1, 0]), snake([1, 0]), t([2, 0]), &cache),
            BigInt::one()
        );
        assert_eq!(
            coeff(snake([1, 0]), snake([1, 0]), t([1, 1]), &cache),
            BigInt::one()
        );
        assert_eq!(
            coeff(snake([1, 0]), snake([1, 0]), t([3, -1]), &cache),
            BigInt::zero()
        );
        let value = coeff(
            snake([2, 1, 0, 0]),
            snake([2, 1, 0, 0]),
            t([2, 2, 1, 1]),
            &cache,
        );
        assert_eq!(value, BigInt::one());
        assert_eq!(
            lr_tableau(&snake([2, 1, 0, 0]), &snake([2, 1, 0, 0]), &t([2, 2, 1, 1])),
            1
        );
        assert_eq!(
            coeff(snake([2, 1, 0]), snake([2, 1, 0]), t([3, 2, 1]), &cache),
            BigInt::from(2)
        );
        assert_eq!(
            lr_tableau(&snake([2, 1, 0]), &snake([2, 1, 0]), &t([3, 2, 1])),
            2
        );
        assert!(LrQuery::new(snake([1, -1]), snake([1, 0]), t([0, 0])).is_err());
        assert!(LrQuery::new(snake([1, 0]), snake([1, 0, 0]), t([0, 0])).is_err());
    }

    #[test]
    fn family_examples() {
        let cache = SchurCache::new();
        let f = lr_family(&snake([1, 0]), &snake([1, 0]), &cache).unwrap();
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"1,1":"1","2,0":"1"}"#
        );
        let f = lr_family(&snake([3, 1, 0]), &snake([0, 0, 0]), &cache).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.get(&t([3, 1, 0])), BigInt::one());

        let nu = snake([2, 1, 0, 0]);
        let f1 = lr_family(&snake([5, 1, 1, 0]), &nu, &cache).unwrap();
        let f2 = lr_family(&snake([5, 4, 4, 0]), &nu, &cache).unwrap();
        assert_eq!(f1.multiset(), f2.multiset());
        for (lambda, _) in f1.iter() {
            assert_eq!(lambda.size(), 10);
        }
    }

    #[test]
    fn alternant_read_off_matches_expansion() {
        let cache = SchurCache::new();
        for n in 1..=3usize {
            let shapes = partitions_bounded(n, 3);
            for mu in &shapes {
                for nu in &shapes {
                    assert_eq!(
                        lr_family_via_alternant(mu, nu, &cache).unwrap(),
                        lr_family(mu, nu, &cache).unwrap(),
                        "mu=({mu}) nu=({nu})"
                    );
                }
            }
        }
    }

    #[test]
    fn expansion_matches_tableau_oracle_and_commutes() {
        let cache = SchurCache::new();
        for n in 1..=3usize {
            let shapes: Vec<Snake> = (0..=4).flat_map(|s| partitions_of(s, n)).collect();
            for mu in &shapes {
                for nu in &shapes {
                    let fam = lr_family(mu, nu, &cache).unwrap();
                    assert_eq!(fam, lr_family(nu, mu, &cache).unwrap());
                    for lambda in partitions_of(mu.size() + nu.size(), n) {
                        assert_eq!(fam.get(&lambda), BigInt::from(lr_tableau(mu, nu, &lambda)));
                    }
                }
            }
        }
    }

    #[test]
    fn r_formula_examples() {
        let params = PhiParams::new(1, 4, snake([2, 1, 0, 0])).unwrap();
        assert_eq!(lr_via_r(&params, &t([5, 2, 3, 0])), 0);
        assert_eq!(lr_via_r(&params, &t([1, 9, 0, 0])), 0);

        let cache = SchurCache::new();
        for mu in partitions_bounded(3, 2) {
            for a in 0..=2 {
                for b in 0..=2 {
                    let params = PhiParams::new(a, b, mu.clone()).unwrap();
                    let fam = lr_family(&params.alpha(), &mu, &cache).unwrap();
                    for lambda in partitions_of(params.alpha().size() + mu.size(), 3) {
                        assert_eq!(BigInt::from(lr_via_r(&params, &lambda)), fam.get(&lambda));
                    }
                    assert!(verify_r_formula(&mu, a, b, &cache).unwrap().pass);
                }
            }
        }
    }

    #[test]
    fn phi_symmetry_reference_instance_and_equal_shapes() {
        let cache = SchurCache::new();
        let params = PhiParams::new(1, 4, snake([2, 1, 0, 0])).unwrap();
        let options = SweepOptions {
            cross_check_r: true,
            ..Default::default()
        };
        let report = verify_phi_symmetry(&params, &options, &cache).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert!(report.multiset_equal && report.phi_injective_on_support);

        let params = PhiParams::new(2, 2, snake([3, 1, 0])).unwrap();
        assert_eq!(params.alpha(), params.beta());
        let report = verify_phi_symmetry(&params, &options, &cache).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn phi_symmetry_small_sweep_both_sources() {
        let cache = SchurCache::new();
        for n in 2..=3usize {
            for mu in partitions_bounded(n, 2) {
                for a in 0..=2 {
                    for b in 0..=2 {
                        let params = PhiParams::new(a, b, mu.clone()).unwrap();
                        for source in [CoefficientSource::Expansion, CoefficientSource::Alternant] {
                            let options = SweepOptions {
                                source,
                                box_bounds: Some((-1, 3)),
                                cross_check_r: true,
                            };
                            let report = verify_phi_symmetry(&params, &options, &cache).unwrap();
                            assert!(report.passed(), "{:?}", report.failures);
                        }
                    }
                }
            }
        }
    }
}
