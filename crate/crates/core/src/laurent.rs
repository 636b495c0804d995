//! Sparse Laurent polynomials in `x_1, ..., x_n` with integer coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration order
//! is lexicographic and the last key is the leading monomial. Zero
//! coefficients are never stored.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Exponents = Vec<i32>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

/// Converts a tuple entry to an exponent.
pub fn exponent(value: i64) -> Result<i32> {
    i32::try_from(value).map_err(|_| Error::Domain(format!("exponent {value} out of range")))
}

fn add_exps(a: &[i32], b: &[i32]) -> Exponents {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).expect("exponent overflow"))
        .collect()
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, BigInt::one())
    }

    pub fn constant(n: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(vec![0; n], c)
    }

    /// `c · x^exps`; the dimension is `exps.len()`.
    pub fn monomial(exps: Exponents, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c.into());
        p
    }

    /// The variable `x_{i+1}` (0-based `i`).
    pub fn variable(n: usize, i: usize) -> Self {
        assert!(i < n, "variable index {i} out of range for n = {n}");
        let mut exps = vec![0; n];
        exps[i] = 1;
        Self::monomial(exps, 1)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated exponents.
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Exponents, BigInt)>,
    ) -> Result<Self> {
        let mut p = Self::zero(n);
        for (exps, c) in terms {
            if exps.len() != n {
                return Err(Error::Dimension(format!(
                    "exponent vector of length {} in a polynomial in {n} variables",
                    exps.len()
                )));
            }
            p.add_term(exps, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// The lexicographically greatest term.
    pub fn leading_term(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Adds `c · x^exps` in place.
    pub fn add_term(&mut self, exps: Exponents, c: BigInt) {
        debug_assert_eq!(exps.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &LaurentPoly, c: &BigInt) {
        self.check_same_n(other);
        for (exps, d) in &other.terms {
            self.add_term(exps.clone(), c * d);
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, d)| (e.clone(), c * d)).collect(),
        }
    }

    /// Multiplies by the monomial `x^exps`.
    pub fn shift_exponents(&self, exps: &[i32]) -> LaurentPoly {
        assert_eq!(exps.len(), self.n, "dimension mismatch");
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (add_exps(e, exps), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        (0..e).fold(Self::one(self.n), |acc, _| &acc * self)
    }

    /// `P(x_1^{−1}, ..., x_n^{−1})`.
    pub fn invert_variables(&self) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.iter()
                            .map(|x| x.checked_neg().expect("exponent overflow"))
                            .collect(),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Exchanges `x_{i+1}` and `x_{j+1}` (0-based indices).
    pub fn swap_variables(&self, i: usize, j: usize) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i, j);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.swap_variables(i, i + 1) == *self)
    }

    /// Exact quotient by `x_{i+1} − x_{j+1}` (0-based, `i < j`), by leading
    /// term division in lex order. A nonzero remainder is an error.
    pub fn divide_by_difference(&self, i: usize, j: usize) -> Result<LaurentPoly> {
        assert!(i < j && j < self.n, "need i < j < n");
        let inexact = || Error::InexactDivision {
            divisor: format!("x{} - x{}", i + 1, j + 1),
        };
        let mut rest = self.terms.clone();
        let mut quotient = Self::zero(self.n);
        let Some(floor) = rest.keys().map(|e| e[i]).min() else {
            return Ok(quotient);
        };
        // Every quotient term has x_i exponent ≥ floor, so a leading term
        // with x_i exponent ≤ floor can only be a remainder.
        while let Some((exps, c)) = rest.pop_last() {
            if exps[i] <= floor {
                return Err(inexact());
            }
            let mut q = exps;
            q[i] -= 1;
            let mut spill = q.clone();
            spill[j] = spill[j].checked_add(1).expect("exponent overflow");
            // c·x^q·(x_i − x_j) = c·x^exps − c·x^spill
            match rest.entry(spill) {
                Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
                Entry::Occupied(mut e) => {
                    *e.get_mut() += &c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
            quotient.terms.insert(q, c);
        }
        Ok(quotient)
    }

    fn check_same_n(&self, other: &LaurentPoly) {
        assert_eq!(
            self.n, other.n,
            "polynomials in different numbers of variables"
        );
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::one());
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigInt::one());
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_same_n(rhs);
        let mut out = LaurentPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(add_exps(e1, e2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;

            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending lex order, e.g. `x1^2*x2^-1 - 3*x3 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (exps, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let vars: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{e}", i + 1)
                    }
                })
                .collect();
            let abs = c.abs();
            match (abs.is_one(), vars.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{}", vars.join("*"))?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    exps: Exponents,
    coeff: String,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(exps, c)| TermRecord {
                exps: exps.clone(),
                coeff: c.to_string(),
            })
            .collect();
        records.serialize(serializer)
    }
}

/// The dimension is read from the first term; the empty list has none, so
/// deserialization of `[]` yields the zero polynomial in 0 variables.
impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let n = records.first().map_or(0, |r| r.exps.len());
        let terms = records
            .into_iter()
            .map(|r| {
                r.coeff
                    .parse::<BigInt>()
                    .map(|c| (r.exps, c))
                    .map_err(|_| D::Error::custom(format!("bad coefficient `{}`", r.coeff)))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        LaurentPoly::from_terms(n, terms).map_err(D::Error::custom)
    }
}
