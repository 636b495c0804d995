//! The birational involution `f_u` on `K^n` for an arbitrary semifield `K`,
//! its table of partial sums, and the birational R-matrix.
//!
//! All indices are 1-based and read cyclically: `x_{i+n} = x_i`.

use crate::error::{Error, Result};
use crate::report::{join, IdentityCheck};
use crate::semifield::{self, Semifield};
use crate::tuple::cyclic_index;

/// `v_i` under cyclic 1-based indexing.
pub fn cyc<K>(v: &[K], i: i64) -> &K {
    &v[cyclic_index(i, v.len())]
}

/// `v_from · v_{from+1} ⋯ v_to`, cyclically indexed; `1` when `to < from`.
pub fn cyclic_product<K: Semifield>(v: &[K], from: i64, to: i64) -> K {
    (from..=to).fold(K::one(), |acc, i| acc.mul(cyc(v, i)))
}

/// `t_{r,j} = Σ_{k=0}^{r} (x_{j+1}⋯x_{j+k}) · (u_{j+k+1}⋯u_{j+r})`, summed
/// straight from the definition.
pub fn t_entry_by_definition<K: Semifield>(u: &[K], x: &[K], r: usize, j: i64) -> K {
    let r = r as i64;
    let terms: Vec<K> = (0..=r)
        .map(|k| cyclic_product(x, j + 1, j + k).mul(&cyclic_product(u, j + k + 1, j + r)))
        .collect();
    semifield::sum(&terms).expect("k = 0 term is always present")
}

/// The fixed tuple `u` that parametrizes `f_u`.
#[derive(Clone, Debug, PartialEq)]
pub struct BirationalContext<K> {
    u: Vec<K>,
}

/// `t_{r,j}` for `0 ≤ r ≤ n − 1`, periodic in `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct TTable<K> {
    rows: Vec<Vec<K>>,
}

impl<K: Semifield> TTable<K> {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, r: usize, j: i64) -> &K {
        cyc(&self.rows[r], j)
    }

    /// `t_{n−1,j}`, the row that enters `f_u`.
    pub fn top(&self, j: i64) -> &K {
        self.get(self.n() - 1, j)
    }
}

impl<K: Semifield> BirationalContext<K> {
    pub fn new(u: Vec<K>) -> Result<Self> {
        if u.is_empty() {
            return Err(Error::Dimension("u must have at least one entry".into()));
        }
        Ok(BirationalContext { u })
    }

    pub fn n(&self) -> usize {
        self.u.len()
    }

    pub fn u(&self) -> &[K] {
        &self.u
    }

    fn check_dim(&self, x: &[K]) -> Result<()> {
        if x.len() != self.n() {
            return Err(Error::Dimension(format!(
                "expected a {}-tuple, got {} entries",
                self.n(),
                x.len()
            )));
        }
        Ok(())
    }

    /// Builds the table row by row from
    /// `t_{r+1,j} = u_{j+r+1} t_{r,j} + x_{j+1} ⋯ x_{j+r+1}`.
    pub fn t_table(&self, x: &[K]) -> Result<TTable<K>> {
        self.check_dim(x)?;
        let n = self.n();
        let u = &self.u;
        let mut rows = Vec::with_capacity(n);
        rows.push(vec![K::one(); n]);
        // running[j-1] = x_{j+1} ⋯ x_{j+r}
        let mut running = vec![K::one(); n];
        for r in 0..n as i64 - 1 {
            let prev: &Vec<K> = rows.last().unwrap();
            let mut next = Vec::with_capacity(n);
            for j in 1..=n as i64 {
                let idx = (j - 1) as usize;
                running[idx] = running[idx].mul(cyc(x, j + r + 1));
                next.push(cyc(u, j + r + 1).mul(&prev[idx]).add(&running[idx]));
            }
            rows.push(next);
        }
        Ok(TTable { rows })
    }

    /// `f_u(x)`, with `y_i = u_i · (u_{i−1} t_{n−1,i−1}) / (x_{i+1} t_{n−1,i+1})`.
    pub fn apply(&self, x: &[K]) -> Result<Vec<K>> {
        let table = self.t_table(x)?;
        Ok(self.assemble(x, |j| table.top(j).clone()))
    }

    /// `f_u(x)` recomputed with every `t_{n−1,j}` summed from scratch.
    pub fn apply_via_back_formula(&self, x: &[K]) -> Result<Vec<K>> {
        self.check_dim(x)?;
        let r = self.n() - 1;
        Ok(self.assemble(x, |j| t_entry_by_definition(&self.u, x, r, j)))
    }

    fn assemble(&self, x: &[K], top: impl Fn(i64) -> K) -> Vec<K> {
        let u = &self.u;
        (1..=self.n() as i64)
            .map(|i| {
                let num = cyc(u, i - 1).mul(&top(i - 1));
                let den = cyc(x, i + 1).mul(&top(i + 1));
                cyc(u, i).mul(&num.div(&den))
            })
            .collect()
    }

    /// Evaluates the involution property and the three conserved quantities
    /// of `f_u` at `x`.
    pub fn check_all_identities(&self, x: &[K]) -> Result<Vec<IdentityCheck>> {
        let y = self.apply(x)?;
        let u = &self.u;
        let n = self.n() as i64;
        let instance = format!("{} u=({}) x=({})", K::NAME, join(u), join(x));
        let mut checks = Vec::new();

        let back = self.apply(&y)?;
        checks.push(IdentityCheck::compare_tuples(
            "involution",
            &instance,
            &back,
            x,
        ));

        let lhs = semifield::product(&y).mul(&semifield::product(x));
        let rhs = semifield::product(u).pow(2);
        checks.push(IdentityCheck::compare("product", &instance, &lhs, &rhs));

        let local = |i: i64, z: &[K]| {
            cyc(u, i)
                .add(cyc(z, i))
                .mul(&cyc(u, i + 1).inv().add(&cyc(z, i + 1).inv()))
        };
        for i in 1..=n {
            checks.push(IdentityCheck::compare(
                format!("local[{i}]"),
                &instance,
                &local(i, x),
                &local(i, &y),
            ));
        }

        let lhs = semifield::product(
            &(1..=n)
                .map(|i| cyc(u, i).add(cyc(x, i)).div(cyc(x, i)))
                .collect::<Vec<_>>(),
        );
        let rhs = semifield::product(
            &(1..=n)
                .map(|i| cyc(u, i).add(cyc(&y, i)).div(cyc(u, i)))
                .collect::<Vec<_>>(),
        );
        checks.push(IdentityCheck::compare("global", &instance, &lhs, &rhs));
        Ok(checks)
    }

    /// Checks the recurrences satisfied by the `t`-table at `x`, the cyclic
    /// product invariance, and the relation between the tables of `x` and
    /// `y = f_u(x)`.
    pub fn check_t_table_steps(&self, x: &[K]) -> Result<Vec<IdentityCheck>> {
        let table = self.t_table(x)?;
        let y = self.apply(x)?;
        let table_y = self.t_table(&y)?;
        let u = &self.u;
        let n = self.n() as i64;
        let instance = format!("{} u=({}) x=({})", K::NAME, join(u), join(x));
        let mut checks = Vec::new();

        for k in 0..n {
            checks.push(IdentityCheck::compare(
                format!("cyclic-product[{k}]"),
                &instance,
                &cyclic_product(x, k + 1, k + n),
                &semifield::product(x),
            ));
        }
        for r in 0..n as usize {
            for j in 1..=n {
                checks.push(IdentityCheck::compare(
                    format!("t-definition[{r},{j}]"),
                    &instance,
                    table.get(r, j),
                    &t_entry_by_definition(u, x, r, j),
                ));
            }
        }
        for j in 1..=n {
            checks.push(IdentityCheck::compare(
                format!("t-zero-row[{j}]"),
                &instance,
                table.get(0, j),
                &K::one(),
            ));
        }
        for r in 0..(n - 1) as usize {
            let ri = r as i64;
            for j in 1..=n {
                let lhs = cyc(x, j)
                    .mul(table.get(r, j))
                    .add(&cyclic_product(u, j, j + ri));
                checks.push(IdentityCheck::compare(
                    format!("step-c[{r},{j}]"),
                    &instance,
                    &lhs,
                    table.get(r + 1, j - 1),
                ));
                let lhs = cyc(u, j + ri + 1).mul(table.get(r, j)).add(&cyclic_product(
                    x,
                    j + 1,
                    j + ri + 1,
                ));
                checks.push(IdentityCheck::compare(
                    format!("step-d[{r},{j}]"),
                    &instance,
                    &lhs,
                    table.get(r + 1, j),
                ));
            }
        }
        for i in 1..=n {
            let lhs = cyc(x, i + 1)
                .mul(table.top(i + 1))
                .add(&cyc(u, i - 1).mul(table.top(i - 1)));
            let rhs = cyc(x, i).add(cyc(u, i)).mul(table.top(i));
            checks.push(IdentityCheck::compare(
                format!("step-f[{i}]"),
                &instance,
                &lhs,
                &rhs,
            ));
        }
        let (pu, px) = (semifield::product(u), semifield::product(x));
        for j in 1..=n {
            let lhs = table_y.top(j).mul(cyc(u, j)).div(&pu);
            let rhs = table.top(j + 1).mul(cyc(x, j + 1)).div(&px);
            checks.push(IdentityCheck::compare(
                format!("step-j[{j}]"),
                &instance,
                &lhs,
                &rhs,
            ));
        }
        Ok(checks)
    }
}

/// `κ_i(a, b) = Σ_{j=i}^{i+n−1} (b_{i+1} ⋯ b_j) · (a_{j+1} ⋯ a_{i+n−1})`.
pub fn kappa<K: Semifield>(a: &[K], b: &[K], i: i64) -> K {
    let n = a.len() as i64;
    let terms: Vec<K> = (i..i + n)
        .map(|j| cyclic_product(b, i + 1, j).mul(&cyclic_product(a, j + 1, i + n - 1)))
        .collect();
    semifield::sum(&terms).expect("n ≥ 1 terms")
}

/// The birational R-matrix `η(a, b) = (a′, b′)` with
/// `a′_i = a_{i−1} κ_{i−1} / κ_i` and `b′_i = b_{i+1} κ_{i+1} / κ_i`.
pub fn r_matrix<K: Semifield>(a: &[K], b: &[K]) -> Result<(Vec<K>, Vec<K>)> {
    if a.is_empty() || a.len() != b.len() {
        return Err(Error::Dimension(format!(
            "R-matrix needs two tuples of equal positive length, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let n = a.len() as i64;
    // kappas[k] = κ_{k−1} for k = 0..=n+1
    let kappas: Vec<K> = (0..=n + 1).map(|i| kappa(a, b, i)).collect();
    let k = |i: i64| &kappas[i as usize];
    let a_new = (1..=n)
        .map(|i| cyc(a, i - 1).mul(k(i - 1)).div(k(i)))
        .collect();
    let b_new = (1..=n)
        .map(|i| cyc(b, i + 1).mul(k(i + 1)).div(k(i)))
        .collect();
    Ok((a_new, b_new))
}

/// `f_u(x) = u · a′ / b′` where `(a′, b′) = η(u, x)`.
pub fn check_r_matrix_relation<K: Semifield>(u: &[K], x: &[K]) -> Result<IdentityCheck> {
    let ctx = BirationalContext::new(u.to_vec())?;
    let y = ctx.apply(x)?;
    let (a_new, b_new) = r_matrix(u, x)?;
    let via_eta = semifield::tuple_mul(u, &semifield::tuple_div(&a_new, &b_new));
    let instance = format!("{} u=({}) x=({})", K::NAME, join(u), join(x));
    Ok(IdentityCheck::compare_tuples(
        "r-matrix", instance, &y, &via_eta,
    ))
}

/// `f_{gu}(gx) = g · f_u(x)`.
pub fn check_gauge<K: Semifield>(g: &[K], u: &[K], x: &[K]) -> Result<IdentityCheck> {
    let lhs =
        BirationalContext::new(semifield::tuple_mul(g, u))?.apply(&semifield::tuple_mul(g, x))?;
    let rhs = semifield::tuple_mul(g, &BirationalContext::new(u.to_vec())?.apply(x)?);
    let instance = format!(
        "{} g=({}) u=({}) x=({})",
        K::NAME,
        join(g),
        join(u),
        join(x)
    );
    Ok(IdentityCheck::compare_tuples(
        "f-gauge", instance, &lhs, &rhs,
    ))
}

/// `η(ga, gb) = (g a′, g b′)`.
pub fn check_r_matrix_gauge<K: Semifield>(g: &[K], a: &[K], b: &[K]) -> Result<IdentityCheck> {
    let (a_new, b_new) = r_matrix(a, b)?;
    let (ga_new, gb_new) = r_matrix(&semifield::tuple_mul(g, a), &semifield::tuple_mul(g, b))?;
    let mut lhs = ga_new;
    lhs.extend(gb_new);
    let mut rhs = semifield::tuple_mul(g, &a_new);
    rhs.extend(semifield::tuple_mul(g, &b_new));
    let instance = format!(
        "{} g=({}) a=({}) b=({})",
        K::NAME,
        join(g),
        join(a),
        join(b)
    );
    Ok(IdentityCheck::compare_tuples(
        "r-matrix-gauge",
        instance,
        &lhs,
        &rhs,
    ))
}

/// Rescales `x_1` so that `x_1 ⋯ x_n = u_1 ⋯ u_n`.
pub fn rescale_to_equal_product<K: Semifield>(u: &[K], x: &[K]) -> Vec<K> {
    let mut out = x.to_vec();
    let factor = semifield::product(u).div(&semifield::product(x));
    out[0] = out[0].mul(&factor);
    out
}

/// When `x_1 ⋯ x_n = u_1 ⋯ u_n`, the point `x` is fixed by `f_u`.
pub fn check_equal_product_fixed_point<K: Semifield>(u: &[K], x: &[K]) -> Result<IdentityCheck> {
    let x = rescale_to_equal_product(u, x);
    let y = BirationalContext::new(u.to_vec())?.apply(&x)?;
    let instance = format!("{} u=({}) x=({})", K::NAME, join(u), join(&x));
    Ok(IdentityCheck::compare_tuples(
        "equal-product-fixed-point",
        instance,
        &y,
        &x,
    ))
}
