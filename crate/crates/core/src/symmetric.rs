//! Alternants, Schur Laurent polynomials `s̄_λ = a_{λ+ρ}/a_ρ`, the complete
//! homogeneous polynomials `h_k^±`, expansion in the `s̄` basis, and
//! checkers for the Pieri, `b ⊖ a` and Jacobi-Trudi identities.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::{exponent, Exponents, LaurentPoly};
use crate::report::IdentityCheck;
use crate::tuple::{
    alpha_shape, ominus, pieri_minus_shapes, pieri_plus_shapes, staircase, IntTuple, Snake,
};

/// Sign of the inversion count of `perm`.
fn permutation_sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `a_λ = Σ_{w ∈ S_n} sign(w) x_{w(1)}^{λ_1} ⋯ x_{w(n)}^{λ_n}`.
pub fn alternant(lambda: &IntTuple) -> Result<LaurentPoly> {
    let n = lambda.dim();
    let lam: Vec<i32> = lambda
        .entries()
        .iter()
        .map(|&v| exponent(v))
        .collect::<Result<_>>()?;
    let mut out = LaurentPoly::zero(n);
    for perm in (0..n).permutations(n) {
        let mut exps = vec![0; n];
        for (i, &w) in perm.iter().enumerate() {
            exps[w] = lam[i];
        }
        out.add_term(exps, BigInt::from(permutation_sign(&perm)));
    }
    Ok(out)
}

/// `(x_1 ⋯ x_n)^d`.
pub fn x_pi_power(n: usize, d: i64) -> Result<LaurentPoly> {
    Ok(LaurentPoly::monomial(vec![exponent(d)?; n], 1))
}

/// `s̄_λ = a_{λ+ρ} / a_ρ`, dividing by each `x_i − x_j` in turn.
pub fn schur_laurent(lambda: &Snake) -> Result<LaurentPoly> {
    let n = lambda.dim();
    let rho = staircase(n)?;
    let mut p = alternant(&lambda.add(&rho))?;
    for i in 0..n {
        for j in i + 1..n {
            p = p.divide_by_difference(i, j)?;
        }
    }
    Ok(p)
}

/// Exponent vectors in `N^n` of total degree `k`.
fn weak_compositions(n: usize, k: i32) -> Vec<Exponents> {
    fn go(n: usize, k: i32, prefix: &mut Exponents, out: &mut Vec<Exponents>) {
        if prefix.len() + 1 == n {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=k).rev() {
            prefix.push(first);
            go(n, k - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 && k >= 0 {
        go(n, k, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// `h_k(x_1, ..., x_n)`; zero for `k < 0`.
pub fn h_plus(n: usize, k: i64) -> LaurentPoly {
    let k = match i32::try_from(k) {
        Ok(k) if k >= 0 => k,
        _ => return LaurentPoly::zero(n),
    };
    let mut out = LaurentPoly::zero(n);
    for exps in weak_compositions(n, k) {
        out.add_term(exps, BigInt::one());
    }
    out
}

/// `h_k(x_1^{−1}, ..., x_n^{−1})`; zero for `k < 0`.
pub fn h_minus(n: usize, k: i64) -> LaurentPoly {
    h_plus(n, k).invert_variables()
}

/// Memo of `s̄_λ` keyed by snake, safe for concurrent readers.
#[derive(Default, Debug)]
pub struct SchurCache {
    map: RwLock<HashMap<Snake, Arc<LaurentPoly>>>,
}

impl SchurCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, lambda: &Snake) -> Result<Arc<LaurentPoly>> {
        if let Some(p) = self.map.read().expect("cache lock").get(lambda) {
            return Ok(Arc::clone(p));
        }
        let p = Arc::new(schur_laurent(lambda)?);
        let mut map = self.map.write().expect("cache lock");
        Ok(Arc::clone(map.entry(lambda.clone()).or_insert(p)))
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `Σ c_λ s̄_λ` with nonzero integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    coeffs: BTreeMap<Snake, BigInt>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, lambda: Snake, c: BigInt) {
        let slot = self.coeffs.entry(lambda.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn get(&self, lambda: &Snake) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Snake, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Σ c_λ s̄_λ` as a Laurent polynomial in `n` variables.
    pub fn reconstruct(&self, n: usize, cache: &SchurCache) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(n);
        for (lambda, c) in &self.coeffs {
            out.add_scaled(&*cache.get(lambda)?, c);
        }
        Ok(out)
    }
}

impl FromIterator<(Snake, BigInt)> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = (Snake, BigInt)>>(iter: I) -> Self {
        let mut out = SchurExpansion::new();
        for (lambda, c) in iter {
            out.add(lambda, c);
        }
        out
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(
            self.coeffs
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string())),
        )
    }
}

/// Writes `p` in the `s̄` basis by repeatedly peeling off the lex-leading
/// monomial, which must be a snake.
pub fn expand_in_schur_basis(p: &LaurentPoly, cache: &SchurCache) -> Result<SchurExpansion> {
    let cap = 10 * p.len().max(1);
    let mut rest = p.clone();
    let mut out = SchurExpansion::new();
    let mut steps = 0;
    while let Some((exps, c)) = rest.leading_term() {
        steps += 1;
        if steps > cap {
            return Err(Error::NotInSchurSpan(format!(
                "no convergence after {cap} steps"
            )));
        }
        let entries: Vec<i64> = exps.iter().map(|&e| e as i64).collect();
        let lambda = Snake::new(IntTuple::new(entries)?).map_err(|_| {
            Error::NotInSchurSpan(format!(
                "leading exponent {exps:?} is not weakly decreasing"
            ))
        })?;
        let c = c.clone();
        rest.add_scaled(&*cache.get(&lambda)?, &-c.clone());
        out.add(lambda, c);
    }
    Ok(out)
}

/// Compares two polynomials; both sides are rendered in full only on failure.
pub fn poly_check(
    identity: impl Into<String>,
    instance: impl Into<String>,
    lhs: &LaurentPoly,
    rhs: &LaurentPoly,
) -> IdentityCheck {
    let pass = lhs == rhs;
    let render = |p: &LaurentPoly| {
        if pass {
            format!("{} terms", p.len())
        } else {
            p.to_string()
        }
    };
    IdentityCheck {
        identity: identity.into(),
        instance: instance.into(),
        pass,
        lhs: render(lhs),
        rhs: render(rhs),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PieriSign {
    Plus,
    Minus,
}

impl fmt::Display for PieriSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PieriSign::Plus => "plus",
            PieriSign::Minus => "minus",
        })
    }
}

/// `h_k^± · s̄_λ` against the sum of `s̄_μ` over the interleaving shapes.
pub fn verify_pieri(
    lambda: &Snake,
    k: i64,
    sign: PieriSign,
    cache: &SchurCache,
) -> Result<IdentityCheck> {
    let n = lambda.dim();
    let (h, shapes) = match sign {
        PieriSign::Plus => (h_plus(n, k), pieri_plus_shapes(lambda, k)),
        PieriSign::Minus => (h_minus(n, k), pieri_minus_shapes(lambda, k)),
    };
    let lhs = &h * &*cache.get(lambda)?;
    let mut rhs = LaurentPoly::zero(n);
    for mu in &shapes {
        rhs.add_scaled(&*cache.get(mu)?, &BigInt::one());
    }
    Ok(poly_check(
        format!("pieri-{sign}"),
        format!("lambda=({lambda}) k={k}"),
        &lhs,
        &rhs,
    ))
}

/// `h_a^− h_b^+ − h_{a−1}^− h_{b−1}^+`.
fn ominus_combination(n: usize, a: i64, b: i64) -> LaurentPoly {
    &(&h_minus(n, a) * &h_plus(n, b)) - &(&h_minus(n, a - 1) * &h_plus(n, b - 1))
}

/// The three `b ⊖ a` identities: the expansion of `h_a^− h_b^+`, the
/// determinant form of `s̄_{b⊖a}`, and the shifted form for `s̄_α`.
pub fn ominus_identities(
    n: usize,
    a: i64,
    b: i64,
    cache: &SchurCache,
) -> Result<Vec<IdentityCheck>> {
    if n < 2 || a < 0 || b < 0 {
        return Err(Error::Domain(format!(
            "need n ≥ 2 and a, b ≥ 0, got n = {n}, a = {a}, b = {b}"
        )));
    }
    let instance = format!("n={n} a={a} b={b}");
    let product = &h_minus(n, a) * &h_plus(n, b);
    let mut sum = LaurentPoly::zero(n);
    for k in 0..=a.min(b) {
        sum.add_scaled(&*cache.get(&ominus(b - k, a - k, n)?)?, &BigInt::one());
    }
    let combination = ominus_combination(n, a, b);
    let alpha = alpha_shape(a, b, n)?;
    Ok(vec![
        poly_check("h-product-expansion", &instance, &product, &sum),
        poly_check(
            "ominus-difference",
            &instance,
            &*cache.get(&ominus(b, a, n)?)?,
            &combination,
        ),
        poly_check(
            "alpha-shifted-difference",
            &instance,
            &*cache.get(&alpha)?,
            &(&x_pi_power(n, a)? * &combination),
        ),
    ])
}

/// `a_{λ+d} = x_Π^d a_λ`, `s̄_{λ+d} = x_Π^d s̄_λ` and `s̄_{λ^∨}(x) = s̄_λ(x^{−1})`.
pub fn shift_and_inverse_checks(
    lambda: &Snake,
    d: i64,
    cache: &SchurCache,
) -> Result<Vec<IdentityCheck>> {
    let n = lambda.dim();
    let instance = format!("lambda=({lambda}) d={d}");
    let xd = x_pi_power(n, d)?;
    let s = cache.get(lambda)?;
    Ok(vec![
        poly_check(
            "alternant-shift",
            &instance,
            &alternant(&lambda.as_tuple().shift(d))?,
            &(&xd * &alternant(lambda)?),
        ),
        poly_check(
            "schur-shift",
            &instance,
            &*cache.get(&lambda.shift(d))?,
            &(&xd * &*s),
        ),
        poly_check(
            "schur-dual",
            &instance,
            &*cache.get(&lambda.dual())?,
            &s.invert_variables(),
        ),
    ])
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant(matrix: &[Vec<LaurentPoly>], n: usize) -> LaurentPoly {
    let m = matrix.len();
    if m == 0 {
        return LaurentPoly::one(n);
    }
    if m == 1 {
        return matrix[0][0].clone();
    }
    let mut out = LaurentPoly::zero(n);
    for col in 0..m {
        if matrix[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let sign = if col % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        out.add_scaled(&(&matrix[0][col] * &determinant(&minor, n)), &sign);
    }
    out
}

fn check_partition(v: &[i64], name: &str) -> Result<()> {
    if v.iter().any(|&x| x < 0) || v.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Domain(format!("{name} = {v:?} is not a partition")));
    }
    Ok(())
}

/// The `(p+q) × (p+q)` matrix whose row `i ≤ p` holds `h^−_{a_{p−i+1}+i−j}`
/// and whose row `i > p` holds `h^+_{b_{i−p}−i+j}` (1-based `i, j`).
pub fn jacobi_trudi_matrix(n: usize, a: &[i64], b: &[i64]) -> Result<Vec<Vec<LaurentPoly>>> {
    check_partition(a, "a")?;
    check_partition(b, "b")?;
    let (p, q) = (a.len(), b.len());
    if p + q > n {
        return Err(Error::Domain(format!("p + q = {} exceeds n = {n}", p + q)));
    }
    let m = (p + q) as i64;
    let p = p as i64;
    Ok((1..=m)
        .map(|i| {
            (1..=m)
                .map(|j| {
                    if i <= p {
                        h_minus(n, a[(p - i) as usize] + i - j)
                    } else {
                        h_plus(n, b[(i - p - 1) as usize] - i + j)
                    }
                })
                .collect()
        })
        .collect())
}

pub fn jacobi_trudi(n: usize, a: &[i64], b: &[i64]) -> Result<LaurentPoly> {
    Ok(determinant(&jacobi_trudi_matrix(n, a, b)?, n))
}

/// `b ⊖ a = (b_1, ..., b_q, 0, ..., 0, −a_p, ..., −a_1)`.
pub fn jacobi_trudi_shape(n: usize, a: &[i64], b: &[i64]) -> Result<Snake> {
    if a.len() + b.len() > n {
        return Err(Error::Domain(format!(
            "p + q = {} exceeds n = {n}",
            a.len() + b.len()
        )));
    }
    let mut entries = b.to_vec();
    entries.resize(n - a.len(), 0);
    entries.extend(a.iter().rev().map(|x| -x));
    Snake::new(IntTuple::new(entries)?)
}

pub fn verify_jacobi_trudi(
    n: usize,
    a: &[i64],
    b: &[i64],
    cache: &SchurCache,
) -> Result<IdentityCheck> {
    let shape = jacobi_trudi_shape(n, a, b)?;
    Ok(poly_check(
        "jacobi-trudi",
        format!("n={n} a={a:?} b={b:?}"),
        &jacobi_trudi(n, a, b)?,
        &*cache.get(&shape)?,
    ))
}
