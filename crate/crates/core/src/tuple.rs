//! Integer `n`-tuples with cyclic indexing, snakes, the interleaving
//! relation and the enumerations built on top of it.
//!
//! A *snake* is a weakly decreasing tuple of integers; a partition of length
//! at most `n` is a snake whose entries are all nonnegative. Partitions are
//! always stored with their trailing zeros, so every tuple here has a fixed
//! dimension.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A tuple of signed integers, read `n`-periodically by [`IntTuple::cyclic`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IntTuple(Vec<i64>);

impl IntTuple {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Dimension("a tuple needs at least one entry".into()));
        }
        Ok(IntTuple(entries))
    }

    pub fn zeros(n: usize) -> Self {
        IntTuple(vec![0; n])
    }

    /// Constant tuple `(c, c, ..., c)`.
    pub fn constant(n: usize, c: i64) -> Self {
        IntTuple(vec![c; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    /// Entry `i` under cyclic indexing, with `i` 1-based: `cyclic(i) == cyclic(i + n)`
    /// and `cyclic(0) == cyclic(n)`.
    pub fn cyclic(&self, i: i64) -> i64 {
        self.0[cyclic_index(i, self.dim())]
    }

    /// `λ + d`: add `d` to every entry.
    pub fn shift(&self, d: i64) -> IntTuple {
        IntTuple(self.0.iter().map(|&x| x + d).collect())
    }

    /// `λ^∨ = (−λ_n, ..., −λ_1)`.
    pub fn dual(&self) -> IntTuple {
        IntTuple(self.0.iter().rev().map(|&x| -x).collect())
    }

    /// `|λ|`, the sum of the entries.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Componentwise sum. Panics on dimension mismatch.
    pub fn add(&self, other: &IntTuple) -> IntTuple {
        assert_eq!(self.dim(), other.dim(), "tuple dimensions differ");
        IntTuple(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }

    pub fn is_snake(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Membership in `Par[n]`: a snake with nonnegative entries.
    pub fn is_partition(&self) -> bool {
        self.is_snake() && self.0.iter().all(|&x| x >= 0)
    }

    pub fn min_entry(&self) -> i64 {
        *self.0.iter().min().expect("nonempty tuple")
    }

    pub fn max_entry(&self) -> i64 {
        *self.0.iter().max().expect("nonempty tuple")
    }
}

/// Reduce a 1-based cyclic index to a 0-based position in `0..n`.
pub fn cyclic_index(i: i64, n: usize) -> usize {
    (i - 1).rem_euclid(n as i64) as usize
}

impl<const N: usize> From<[i64; N]> for IntTuple {
    fn from(entries: [i64; N]) -> Self {
        assert!(N > 0, "a tuple needs at least one entry");
        IntTuple(entries.to_vec())
    }
}

impl fmt::Display for IntTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for IntTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|part| {
                let part = part.trim();
                part.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("`{part}` is not an integer in tuple `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        IntTuple::new(entries)
    }
}

impl Serialize for IntTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IntTuple {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A weakly decreasing [`IntTuple`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Snake(IntTuple);

impl Snake {
    pub fn new(tuple: IntTuple) -> Result<Self> {
        if tuple.is_snake() {
            Ok(Snake(tuple))
        } else {
            Err(Error::Domain(format!("({tuple}) is not weakly decreasing")))
        }
    }

    /// The all-zero snake, i.e. the empty partition.
    pub fn empty(n: usize) -> Self {
        Snake(IntTuple::zeros(n))
    }

    pub fn as_tuple(&self) -> &IntTuple {
        &self.0
    }

    pub fn into_tuple(self) -> IntTuple {
        self.0
    }

    pub fn shift(&self, d: i64) -> Snake {
        Snake(self.0.shift(d))
    }

    pub fn dual(&self) -> Snake {
        Snake(self.0.dual())
    }

    /// Sum of two snakes, which is again a snake.
    pub fn add(&self, other: &Snake) -> Snake {
        Snake(self.0.add(&other.0))
    }
}

impl Deref for Snake {
    type Target = IntTuple;

    fn deref(&self) -> &IntTuple {
        &self.0
    }
}

impl TryFrom<IntTuple> for Snake {
    type Error = Error;

    fn try_from(tuple: IntTuple) -> Result<Self> {
        Snake::new(tuple)
    }
}

impl<const N: usize> TryFrom<[i64; N]> for Snake {
    type Error = Error;

    fn try_from(entries: [i64; N]) -> Result<Self> {
        Snake::new(IntTuple::from(entries))
    }
}

impl fmt::Display for Snake {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Snake {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Snake::new(s.parse()?)
    }
}

impl Serialize for Snake {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Snake {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `μ ⇀ λ`: the interleaving chain `μ_1 ≥ λ_1 ≥ μ_2 ≥ λ_2 ≥ ... ≥ μ_n ≥ λ_n`.
pub fn harpoon(mu: &IntTuple, lambda: &IntTuple) -> bool {
    if mu.dim() != lambda.dim() {
        return false;
    }
    let (m, l) = (mu.entries(), lambda.entries());
    (0..m.len()).all(|i| m[i] >= l[i] && (i + 1 == m.len() || l[i] >= m[i + 1]))
}

/// `ρ = (n−1, n−2, ..., 1, 0)`.
pub fn staircase(n: usize) -> Result<Snake> {
    if n < 1 {
        return Err(Error::Dimension("the staircase needs n ≥ 1".into()));
    }
    Ok(Snake(IntTuple((0..n as i64).rev().collect())))
}

/// `b ⊖ a = (b, 0, ..., 0, −a)` with `n − 2` interior zeros.
pub fn ominus(b: i64, a: i64, n: usize) -> Result<Snake> {
    if n < 2 {
        return Err(Error::Dimension(format!("b ⊖ a needs n ≥ 2, got n = {n}")));
    }
    if a < 0 || b < 0 {
        return Err(Error::Domain(format!(
            "b ⊖ a needs a, b ≥ 0, got a = {a}, b = {b}"
        )));
    }
    let mut entries = vec![0; n];
    entries[0] = b;
    entries[n - 1] = -a;
    Ok(Snake(IntTuple(entries)))
}

/// `α = (a + b, a^{n−2})` as an `n`-tuple with trailing zero.
pub fn alpha_shape(a: i64, b: i64, n: usize) -> Result<Snake> {
    Ok(ominus(b, a, n)?.shift(a))
}

/// Parameters of the counting set `R_{μ,a,b}(γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSetParams {
    pub mu: IntTuple,
    pub gamma: IntTuple,
    pub a: i64,
    pub b: i64,
}

/// All snakes `ν` with `μ ⇀ ν`, `|μ| − |ν| = a`, `γ ⇀ ν` and `|γ| − |ν| = b`.
///
/// Entries `ν_1..ν_{n−1}` range over the intervals the two chains allow; `ν_n`
/// is then fixed by the first size condition.
pub fn enumerate_r(params: &RSetParams) -> Vec<Snake> {
    let RSetParams { mu, gamma, a, b } = params;
    let n = mu.dim();
    if gamma.dim() != n || mu.size() - gamma.size() != a - b {
        return Vec::new();
    }
    let (m, g) = (mu.entries(), gamma.entries());
    let ranges: Vec<(i64, i64)> = (0..n - 1)
        .map(|i| (m[i + 1].max(g[i + 1]), m[i].min(g[i])))
        .collect();
    let target = mu.size() - a;
    let mut out = Vec::new();
    for_each_in_box(&ranges, |head| {
        let last = target - head.iter().sum::<i64>();
        if last <= m[n - 1].min(g[n - 1]) {
            let mut entries = head.to_vec();
            entries.push(last);
            let nu = IntTuple(entries);
            if gamma.size() - nu.size() == *b {
                out.push(Snake(nu));
            }
        }
    });
    out
}

/// `|R_{μ,a,b}(γ)|`.
pub fn count_r(params: &RSetParams) -> usize {
    enumerate_r(params).len()
}

/// Snakes `μ` with `μ ⇀ λ` and `|μ| − |λ| = k` (the horizontal strips added
/// by `h_k^+`).
pub fn pieri_plus_shapes(lambda: &IntTuple, k: i64) -> Vec<Snake> {
    if k < 0 || !lambda.is_snake() {
        return Vec::new();
    }
    let l = lambda.entries();
    let n = l.len();
    // μ_{i} ∈ [λ_i, λ_{i−1}] for i ≥ 2; μ_1 absorbs the remaining size.
    let ranges: Vec<(i64, i64)> = (1..n).map(|i| (l[i], l[i - 1])).collect();
    let mut out = Vec::new();
    for_each_in_box(&ranges, |tail| {
        let used: i64 = tail.iter().zip(&l[1..]).map(|(x, y)| x - y).sum();
        let first = l[0] + k - used;
        if first >= l[0] {
            let mut entries = Vec::with_capacity(n);
            entries.push(first);
            entries.extend_from_slice(tail);
            out.push(Snake(IntTuple(entries)));
        }
    });
    out
}

/// Snakes `μ` with `λ ⇀ μ` and `|λ| − |μ| = k` (the strips removed by `h_k^−`).
pub fn pieri_minus_shapes(lambda: &IntTuple, k: i64) -> Vec<Snake> {
    if k < 0 || !lambda.is_snake() {
        return Vec::new();
    }
    let l = lambda.entries();
    let n = l.len();
    let ranges: Vec<(i64, i64)> = (0..n - 1).map(|i| (l[i + 1], l[i])).collect();
    let mut out = Vec::new();
    for_each_in_box(&ranges, |head| {
        let removed: i64 = l.iter().zip(head).map(|(x, y)| x - y).sum();
        let last = l[n - 1] - (k - removed);
        if last <= l[n - 1] {
            let mut entries = head.to_vec();
            entries.push(last);
            out.push(Snake(IntTuple(entries)));
        }
    });
    out
}

/// Every snake of dimension `n` with entries in `[lo, hi]`, in lexicographic order.
pub fn snakes_in_box(n: usize, lo: i64, hi: i64) -> Vec<Snake> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn rec(n: usize, lo: i64, hi: i64, current: &mut Vec<i64>, out: &mut Vec<Snake>) {
        if current.len() == n {
            out.push(Snake(IntTuple(current.clone())));
            return;
        }
        let top = current.last().copied().unwrap_or(hi).min(hi);
        for x in (lo..=top).rev() {
            current.push(x);
            rec(n, lo, hi, current, out);
            current.pop();
        }
    }
    if lo <= hi {
        rec(n, lo, hi, &mut current, &mut out);
    }
    out.reverse();
    out
}

/// Every tuple in `[lo, hi]^n`.
pub fn tuples_in_box(n: usize, lo: i64, hi: i64) -> Vec<IntTuple> {
    let ranges = vec![(lo, hi); n];
    let mut out = Vec::new();
    for_each_in_box(&ranges, |t| out.push(IntTuple(t.to_vec())));
    out
}

/// Partitions in `Par[n]` of the given size.
pub fn partitions_of(size: i64, n: usize) -> Vec<Snake> {
    if size < 0 {
        return Vec::new();
    }
    snakes_in_box(n, 0, size)
        .into_iter()
        .filter(|s| s.size() == size)
        .collect()
}

/// Partitions in `Par[n]` whose largest part is at most `max_part`.
pub fn partitions_bounded(n: usize, max_part: i64) -> Vec<Snake> {
    snakes_in_box(n, 0, max_part)
}

/// Calls `f` on every integer vector in the product of the closed intervals.
/// Any empty interval makes the product empty.
pub(crate) fn for_each_in_box(ranges: &[(i64, i64)], mut f: impl FnMut(&[i64])) {
    if ranges.iter().any(|&(lo, hi)| lo > hi) {
        return;
    }
    let mut current: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    loop {
        f(&current);
        let mut k = ranges.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if current[k] < ranges[k].1 {
                current[k] += 1;
                for j in k + 1..ranges.len() {
                    current[j] = ranges[j].0;
                }
                break;
            }
        }
    }
}
