//! Semifields: a commutative additive semigroup and an abelian multiplicative
//! group tied together by distributivity. There is no zero and no
//! subtraction, so an empty sum is an error rather than a value.
//!
//! Two instances are provided: [`QPlus`], the positive rationals, and
//! [`Tropical`], the integers with `min` as addition and `+` as
//! multiplication.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};

pub trait Semifield: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    /// Short tag used in reports.
    const NAME: &'static str;

    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }
}

/// Sum of a nonempty list.
pub fn sum<K: Semifield>(values: &[K]) -> Result<K> {
    let (first, rest) = values.split_first().ok_or(Error::EmptySum)?;
    Ok(rest.iter().fold(first.clone(), |acc, v| acc.add(v)))
}

/// Product of a list; the empty product is `1`.
pub fn product<K: Semifield>(values: &[K]) -> K {
    values.iter().fold(K::one(), |acc, v| acc.mul(v))
}

/// Componentwise product of two tuples.
pub fn tuple_mul<K: Semifield>(a: &[K], b: &[K]) -> Vec<K> {
    a.iter().zip(b).map(|(x, y)| x.mul(y)).collect()
}

/// Componentwise quotient of two tuples.
pub fn tuple_div<K: Semifield>(a: &[K], b: &[K]) -> Vec<K> {
    a.iter().zip(b).map(|(x, y)| x.div(y)).collect()
}

/// A positive rational number, kept in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct QPlus(BigRational);

impl QPlus {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let (numer, denom) = (numer.into(), denom.into());
        if !numer.is_positive() || !denom.is_positive() {
            return Err(Error::Domain(format!(
                "{numer}/{denom} is not a positive rational"
            )));
        }
        Ok(QPlus(BigRational::new(numer, denom)))
    }

    pub fn from_int(value: u64) -> Result<Self> {
        QPlus::new(value, 1u32)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }
}

impl Semifield for QPlus {
    const NAME: &'static str = "Q+";

    fn one() -> Self {
        QPlus(BigRational::one())
    }

    fn add(&self, other: &Self) -> Self {
        QPlus(&self.0 + &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        QPlus(&self.0 * &other.0)
    }

    fn inv(&self) -> Self {
        QPlus(self.0.recip())
    }

    fn div(&self, other: &Self) -> Self {
        QPlus(&self.0 / &other.0)
    }
}

impl fmt::Display for QPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for QPlus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("`{s}` is not of the form p/q"));
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        QPlus::new(p, q)
    }
}

/// Element of the min-tropical semifield over the integers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tropical(pub i64);

impl Semifield for Tropical {
    const NAME: &'static str = "tropical";

    fn one() -> Self {
        Tropical(0)
    }

    fn add(&self, other: &Self) -> Self {
        Tropical(self.0.min(other.0))
    }

    fn mul(&self, other: &Self) -> Self {
        Tropical(self.0 + other.0)
    }

    fn inv(&self) -> Self {
        Tropical(-self.0)
    }

    fn div(&self, other: &Self) -> Self {
        Tropical(self.0 - other.0)
    }

    fn pow(&self, e: u32) -> Self {
        Tropical(self.0 * e as i64)
    }
}

impl fmt::Display for Tropical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Tropical {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .parse()
            .map(Tropical)
            .map_err(|_| Error::Parse(format!("`{s}` is not an integer")))
    }
}

pub fn tropical_tuple(values: &[i64]) -> Vec<Tropical> {
    values.iter().copied().map(Tropical).collect()
}
