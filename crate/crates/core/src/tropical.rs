//! The piecewise-linear involution `f_μ` on `Z^n`, obtained from `f_u` by
//! reading `+, ·, /` as `min, +, −`, and the bijection `φ` built from it.

use serde::Serialize;

use crate::birational::BirationalContext;
use crate::error::{Error, Result};
use crate::report::IdentityCheck;
use crate::semifield::{tropical_tuple, Semifield, Tropical};
use crate::tuple::{alpha_shape, harpoon, IntTuple, Snake};

/// `f_μ` for a fixed `μ ∈ Z^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalContext {
    mu: IntTuple,
}

impl TropicalContext {
    pub fn new(mu: IntTuple) -> Self {
        TropicalContext { mu }
    }

    pub fn n(&self) -> usize {
        self.mu.dim()
    }

    pub fn mu(&self) -> &IntTuple {
        &self.mu
    }

    fn check_dim(&self, gamma: &IntTuple) -> Result<()> {
        if gamma.dim() != self.n() {
            return Err(Error::Dimension(format!(
                "expected a {}-tuple, got ({gamma})",
                self.n()
            )));
        }
        Ok(())
    }

    /// `τ_{r,j} = min_{0≤k≤r} (γ_{j+1} + ⋯ + γ_{j+k}) + (μ_{j+k+1} + ⋯ + μ_{j+r})`.
    pub fn tau_r(&self, gamma: &IntTuple, r: usize, j: i64) -> i64 {
        let r = r as i64;
        let mut best = i64::MAX;
        // k = 0 term, then trade one μ for one γ at a time.
        let mut acc: i64 = (j + 1..=j + r).map(|i| self.mu.cyclic(i)).sum();
        for k in 0..=r {
            if k > 0 {
                acc += gamma.cyclic(j + k) - self.mu.cyclic(j + k);
            }
            best = best.min(acc);
        }
        best
    }

    /// `τ_j = τ_{n−1,j}`; periodic in `j`.
    pub fn tau(&self, gamma: &IntTuple, j: i64) -> i64 {
        self.tau_r(gamma, self.n() - 1, j)
    }

    /// `f_μ(γ) = η` with `η_i = μ_i + (μ_{i−1} + τ_{i−1}) − (γ_{i+1} + τ_{i+1})`.
    pub fn apply(&self, gamma: &IntTuple) -> Result<IntTuple> {
        self.check_dim(gamma)?;
        let n = self.n() as i64;
        let tau: Vec<i64> = (0..=n + 1).map(|j| self.tau(gamma, j)).collect();
        let mu = &self.mu;
        let eta = (1..=n)
            .map(|i| {
                mu.cyclic(i) + (mu.cyclic(i - 1) + tau[(i - 1) as usize])
                    - (gamma.cyclic(i + 1) + tau[(i + 1) as usize])
            })
            .collect();
        IntTuple::new(eta)
    }

    /// `f_μ(γ)` computed by the semifield-generic `f_u` over [`Tropical`].
    pub fn apply_generic(&self, gamma: &IntTuple) -> Result<IntTuple> {
        self.check_dim(gamma)?;
        let ctx = BirationalContext::new(tropical_tuple(self.mu.entries()))?;
        let y = ctx.apply(&tropical_tuple(gamma.entries()))?;
        IntTuple::new(y.into_iter().map(|t| t.0).collect())
    }

    /// Names of every identity that fails at `γ`. Empty means all of them
    /// hold: involution, the sum rule, the local and global min-identities,
    /// the derived difference forms, and agreement with the generic `f_u`
    /// (both the table-based and the back-formula evaluation).
    pub fn failed_identities(&self, gamma: &IntTuple) -> Result<Vec<&'static str>> {
        let eta = self.apply(gamma)?;
        let mu = &self.mu;
        let n = self.n() as i64;
        let mut failed = Vec::new();

        if self.apply(&eta)? != *gamma {
            failed.push("involution");
        }
        if eta.size() + gamma.size() != 2 * mu.size() {
            failed.push("sum-rule");
        }
        let local = |i: i64, z: &IntTuple| {
            mu.cyclic(i).min(z.cyclic(i)) + (-mu.cyclic(i + 1)).min(-z.cyclic(i + 1))
        };
        if (1..=n).any(|i| local(i, gamma) != local(i, &eta)) {
            failed.push("local-min");
        }
        let lhs: i64 = (1..=n)
            .map(|i| mu.cyclic(i).min(gamma.cyclic(i)) - gamma.cyclic(i))
            .sum();
        let rhs: i64 = (1..=n)
            .map(|i| mu.cyclic(i).min(eta.cyclic(i)) - mu.cyclic(i))
            .sum();
        if lhs != rhs {
            failed.push("global-min");
        }
        if eta.size() - mu.size() != mu.size() - gamma.size() {
            failed.push("size-difference");
        }
        let min_max = (1..n).all(|i| {
            mu.cyclic(i).min(eta.cyclic(i)) - mu.cyclic(i).min(gamma.cyclic(i))
                == mu.cyclic(i + 1).max(eta.cyclic(i + 1))
                    - mu.cyclic(i + 1).max(gamma.cyclic(i + 1))
        });
        if !min_max {
            failed.push("min-max-difference");
        }
        let recovered: i64 = (1..=n)
            .map(|i| {
                mu.cyclic(i) - mu.cyclic(i).min(eta.cyclic(i)) + mu.cyclic(i).min(gamma.cyclic(i))
            })
            .sum();
        if recovered != gamma.size() {
            failed.push("recover-size");
        }

        let ctx = BirationalContext::new(tropical_tuple(mu.entries()))?;
        let x = tropical_tuple(gamma.entries());
        let eta_t = tropical_tuple(eta.entries());
        if ctx.apply(&x)? != eta_t {
            failed.push("generic-agreement");
        }
        if ctx.apply_via_back_formula(&x)? != eta_t {
            failed.push("back-formula-agreement");
        }
        Ok(failed)
    }

    /// The same identities as [`failed_identities`](Self::failed_identities),
    /// rendered with both sides for reporting.
    pub fn identity_checks(&self, gamma: &IntTuple) -> Result<Vec<IdentityCheck>> {
        let eta = self.apply(gamma)?;
        let mu = &self.mu;
        let n = self.n() as i64;
        let instance = format!("mu=({mu}) gamma=({gamma})");
        let mut checks = vec![
            IdentityCheck::compare("involution", &instance, &self.apply(&eta)?, gamma),
            IdentityCheck::compare(
                "sum-rule",
                &instance,
                &(eta.size() + gamma.size()),
                &(2 * mu.size()),
            ),
            IdentityCheck::compare(
                "size-difference",
                &instance,
                &(eta.size() - mu.size()),
                &(mu.size() - gamma.size()),
            ),
            IdentityCheck::compare(
                "generic-agreement",
                &instance,
                &eta,
                &self.apply_generic(gamma)?,
            ),
        ];
        for i in 1..=n {
            let local = |z: &IntTuple| {
                mu.cyclic(i).min(z.cyclic(i)) + (-mu.cyclic(i + 1)).min(-z.cyclic(i + 1))
            };
            checks.push(IdentityCheck::compare(
                format!("local-min[{i}]"),
                &instance,
                &local(gamma),
                &local(&eta),
            ));
        }
        let lhs: i64 = (1..=n)
            .map(|i| mu.cyclic(i).min(gamma.cyclic(i)) - gamma.cyclic(i))
            .sum();
        let rhs: i64 = (1..=n)
            .map(|i| mu.cyclic(i).min(eta.cyclic(i)) - mu.cyclic(i))
            .sum();
        checks.push(IdentityCheck::compare("global-min", &instance, &lhs, &rhs));
        for i in 1..n {
            let lhs = mu.cyclic(i).min(eta.cyclic(i)) - mu.cyclic(i).min(gamma.cyclic(i));
            let rhs =
                mu.cyclic(i + 1).max(eta.cyclic(i + 1)) - mu.cyclic(i + 1).max(gamma.cyclic(i + 1));
            checks.push(IdentityCheck::compare(
                format!("min-max-difference[{i}]"),
                &instance,
                &lhs,
                &rhs,
            ));
        }
        let recovered: i64 = (1..=n)
            .map(|i| {
                mu.cyclic(i) - mu.cyclic(i).min(eta.cyclic(i)) + mu.cyclic(i).min(gamma.cyclic(i))
            })
            .sum();
        checks.push(IdentityCheck::compare(
            "recover-size",
            &instance,
            &recovered,
            &gamma.size(),
        ));
        Ok(checks)
    }

    /// Sends `ν ∈ R_{μ,a,b}(γ)` to `ζ ∈ R_{μ,b,a}(f_μ(γ))` via
    /// `ζ_i = min{μ_i, η_i} − min{μ_i, γ_i} + ν_i`.
    ///
    /// Because `f_μ` is an involution, calling this again with
    /// `(f_μ(γ), ζ, b, a)` returns `ν`.
    pub fn zeta_match(&self, gamma: &IntTuple, nu: &Snake, a: i64, b: i64) -> Result<Snake> {
        self.check_dim(gamma)?;
        self.check_dim(nu)?;
        let mu = &self.mu;
        let member = harpoon(mu, nu)
            && mu.size() - nu.size() == a
            && harpoon(gamma, nu)
            && gamma.size() - nu.size() == b;
        if !member {
            return Err(Error::Domain(format!(
                "({nu}) is not in R_{{({mu}),{a},{b}}}(({gamma}))"
            )));
        }
        let eta = self.apply(gamma)?;
        let zeta: Vec<i64> = (0..self.n())
            .map(|i| {
                let (m, e, g) = (mu.entries()[i], eta.entries()[i], gamma.entries()[i]);
                m.min(e) - m.min(g) + nu.entries()[i]
            })
            .collect();
        Snake::new(IntTuple::new(zeta)?)
    }
}

/// Parameters `(a, b, μ)` of the bijection `φ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiParams {
    pub a: i64,
    pub b: i64,
    pub mu: Snake,
}

impl PhiParams {
    pub fn new(a: i64, b: i64, mu: Snake) -> Result<Self> {
        if mu.dim() < 2 {
            return Err(Error::Dimension(format!("φ needs n ≥ 2, got μ = ({mu})")));
        }
        if a < 0 || b < 0 {
            return Err(Error::Domain(format!(
                "φ needs a, b ≥ 0, got a = {a}, b = {b}"
            )));
        }
        if !mu.is_partition() {
            return Err(Error::Domain(format!("μ = ({mu}) is not a partition")));
        }
        Ok(PhiParams { a, b, mu })
    }

    pub fn n(&self) -> usize {
        self.mu.dim()
    }

    /// `α = (a + b, a^{n−2})`.
    pub fn alpha(&self) -> Snake {
        alpha_shape(self.a, self.b, self.n()).expect("validated parameters")
    }

    /// `β = (a + b, b^{n−2})`.
    pub fn beta(&self) -> Snake {
        alpha_shape(self.b, self.a, self.n()).expect("validated parameters")
    }

    /// The same `μ` with `a` and `b` exchanged.
    pub fn swapped(&self) -> PhiParams {
        PhiParams {
            a: self.b,
            b: self.a,
            mu: self.mu.clone(),
        }
    }

    pub fn context(&self) -> TropicalContext {
        TropicalContext::new(self.mu.as_tuple().clone())
    }
}

/// `φ(ω) = f_μ(ω − a) + b`.
pub fn phi(params: &PhiParams, omega: &IntTuple) -> Result<IntTuple> {
    Ok(params
        .context()
        .apply(&omega.shift(-params.a))?
        .shift(params.b))
}

/// `φ^{−1}(ψ) = f_μ(ψ − b) + a`.
pub fn phi_inverse(params: &PhiParams, image: &IntTuple) -> Result<IntTuple> {
    Ok(params
        .context()
        .apply(&image.shift(-params.b))?
        .shift(params.a))
}

/// Intermediate quantities of one evaluation of `φ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiTrace {
    pub nu: IntTuple,
    /// `τ_1, ..., τ_n`.
    pub tau: Vec<i64>,
    pub eta: IntTuple,
    pub image: IntTuple,
}

/// `φ(ω)` evaluated literally with representatives `i# ∈ {1..n}`, keeping
/// the intermediate `ν`, `τ` and `η`.
pub fn phi_direct(params: &PhiParams, omega: &IntTuple) -> Result<PhiTrace> {
    let n = params.n() as i64;
    if omega.dim() != params.n() {
        return Err(Error::Dimension(format!(
            "expected a {n}-tuple, got ({omega})"
        )));
    }
    let hash = |i: i64| -> usize { ((i - 1).rem_euclid(n) + 1) as usize };
    // 1-based storage; slot 0 unused.
    let mut mu = vec![0; n as usize + 1];
    let mut nu = vec![0; n as usize + 1];
    for i in 1..=n as usize {
        mu[i] = params.mu.entries()[i - 1];
        nu[i] = omega.entries()[i - 1] - params.a;
    }
    let tau_of = |j: i64| -> i64 {
        (0..n)
            .map(|k| {
                let nu_part: i64 = (1..=k).map(|p| nu[hash(j + p)]).sum();
                let mu_part: i64 = (k + 1..=n - 1).map(|p| mu[hash(j + p)]).sum();
                nu_part + mu_part
            })
            .min()
            .expect("n ≥ 1")
    };
    // Slot 0 unused, as above.
    let tau: Vec<i64> = std::iter::once(0).chain((1..=n).map(tau_of)).collect();
    let eta: Vec<i64> = (1..=n)
        .map(|i| {
            mu[hash(i)] + (mu[hash(i - 1)] + tau[hash(i - 1)])
                - (nu[hash(i + 1)] + tau[hash(i + 1)])
        })
        .collect();
    let image: Vec<i64> = eta.iter().map(|e| e + params.b).collect();
    Ok(PhiTrace {
        nu: IntTuple::new(nu[1..].to_vec())?,
        tau: tau[1..].to_vec(),
        eta: IntTuple::new(eta)?,
        image: IntTuple::new(image)?,
    })
}

/// Tropical check of `(u_i + x_i)(1/u_{i+1} + 1/x_{i+1}) = (u_i + y_i)(1/u_{i+1} + 1/y_{i+1})`
/// for every `i`.
pub fn local_equations_hold(u: &[i64], x: &[i64], y: &[i64]) -> bool {
    let (u, x, y) = (tropical_tuple(u), tropical_tuple(x), tropical_tuple(y));
    let n = u.len();
    let side = |z: &[Tropical], i: usize| {
        let j = (i + 1) % n;
        u[i].add(&z[i]).mul(&u[j].inv().add(&z[j].inv()))
    };
    (0..n).all(|i| side(&x, i) == side(&y, i))
}

/// Tropical check of `y_1 ⋯ y_n · x_1 ⋯ x_n = (u_1 ⋯ u_n)^2`.
pub fn product_equation_holds(u: &[i64], x: &[i64], y: &[i64]) -> bool {
    y.iter().sum::<i64>() + x.iter().sum::<i64>() == 2 * u.iter().sum::<i64>()
}

/// All `y ∈ [lo, hi]^n` satisfying the local equations for the given `u`, `x`
/// in the tropical semifield. Exploratory only.
pub fn local_equation_solutions(u: &[i64], x: &[i64], lo: i64, hi: i64) -> Vec<IntTuple> {
    crate::tuple::tuples_in_box(u.len(), lo, hi)
        .into_iter()
        .filter(|y| local_equations_hold(u, x, y.entries()))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyCase {
    pub g: i64,
    pub k: i64,
    pub u: IntTuple,
    pub x: IntTuple,
    pub y: IntTuple,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateCase {
    pub y: IntTuple,
    pub local_pass: bool,
    pub product_pass: bool,
    pub equals_f_u_x: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    /// `n = 3`, `u = (0,0,g)`, `x = (1,2,0)`, `y = (k+1,2,k)` for `0 ≤ k ≤ g ≤ 5`.
    pub family: Vec<FamilyCase>,
    /// `n = 4`, `u = (2,1,1,0)`, `x = (1,1,1,1)`.
    pub n4_u: IntTuple,
    pub n4_x: IntTuple,
    pub n4_f_u_x: IntTuple,
    pub n4_candidates: Vec<CandidateCase>,
    /// The two `n = 4` candidates differ, so at most one can be `f_u(x)`.
    pub n4_distinct: bool,
    pub pass: bool,
}

/// Reproduces the two tropical non-uniqueness examples for `f_u`.
pub fn reproduce_counterexamples() -> CounterexampleReport {
    let mut family = Vec::new();
    for g in 0..=5 {
        for k in 0..=g {
            let (u, x, y) = ([0, 0, g], [1, 2, 0], [k + 1, 2, k]);
            family.push(FamilyCase {
                g,
                k,
                u: IntTuple::from(u),
                x: IntTuple::from(x),
                y: IntTuple::from(y),
                pass: local_equations_hold(&u, &x, &y),
            });
        }
    }

    let (u, x) = ([2, 1, 1, 0], [1, 1, 1, 1]);
    let f_u_x = TropicalContext::new(IntTuple::from(u))
        .apply(&IntTuple::from(x))
        .expect("dimensions match");
    let n4_candidates: Vec<CandidateCase> = [[1, 1, 1, 1], [2, 2, 0, 0]]
        .into_iter()
        .map(|y| CandidateCase {
            y: IntTuple::from(y),
            local_pass: local_equations_hold(&u, &x, &y),
            product_pass: product_equation_holds(&u, &x, &y),
            equals_f_u_x: f_u_x.entries() == y,
        })
        .collect();
    let n4_distinct = n4_candidates[0].y != n4_candidates[1].y;
    let pass = family.iter().all(|c| c.pass)
        && n4_distinct
        && n4_candidates.iter().all(|c| c.local_pass && c.product_pass);
    CounterexampleReport {
        family,
        n4_u: IntTuple::from(u),
        n4_x: IntTuple::from(x),
        n4_f_u_x: f_u_x,
        n4_candidates,
        n4_distinct,
        pass,
    }
}
