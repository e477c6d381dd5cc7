//! Ordinary and strict partitions, box moves, tableau-chain counts and
//! the parity bookkeeping behind the ε-factors.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sqrt2::Sqrt2Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Ordinary,
    Strict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dir {
    Add,
    Remove,
}

/// A partition stored as its nonincreasing list of positive parts.
///
/// Strictness is a property checked by the operations that need it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Weakly decreasing positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("parts not decreasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Strictly decreasing positive parts.
    pub fn strict(parts: Vec<u32>) -> Result<Self> {
        let p = Partition::new(parts)?;
        if !p.is_strict() {
            return Err(Error::Domain(format!("repeated part in {p}")));
        }
        Ok(p)
    }

    pub fn of_kind(parts: Vec<u32>, kind: Kind) -> Result<Self> {
        match kind {
            Kind::Ordinary => Partition::new(parts),
            Kind::Strict => Partition::strict(parts),
        }
    }

    /// Sorts and drops zeros. Callers guarantee the result is what they want.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts, h(λ).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_kind(&self, kind: Kind) -> bool {
        kind == Kind::Ordinary || self.is_strict()
    }

    /// |λ| - h(λ) is odd.
    pub fn is_odd(&self) -> bool {
        (self.size() as usize - self.len()) % 2 == 1
    }

    pub fn epsilon(&self) -> Sqrt2Scalar {
        eps_of(self.is_odd())
    }

    /// Containment of diagrams (shifted or not, the test is the same).
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    /// Boxes of the shifted diagram, 1-based: row i spans columns i..λ_i+i-1.
    pub fn shifted_boxes(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (r, &l) in self.0.iter().enumerate() {
            let i = r as u32 + 1;
            out.extend((i..i + l).map(|c| (i, c)));
        }
        out
    }

    /// Disjoint union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::from_unsorted(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    /// Comma-separated parts; empty string, `0` or `∅` give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "∅" || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Domain(format!("bad part {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::from_unsorted(parts.to_vec())
    }
}

/// All partitions of `n` of the given kind, descending lexicographic.
pub fn enumerate(n: u32, kind: Kind) -> Vec<Partition> {
    fn go(rem: u32, max: u32, kind: Kind, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for first in (1..=max.min(rem)).rev() {
            cur.push(first);
            let next_max = if kind == Kind::Strict { first - 1 } else { first };
            go(rem - first, next_max, kind, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, kind, &mut Vec::new(), &mut out);
    out
}

/// Partitions whose (shifted, for strict) diagram differs from λ's by one box.
pub fn box_moves(lambda: &Partition, kind: Kind, dir: Dir) -> Vec<Partition> {
    let parts = lambda.parts();
    let mut out = Vec::new();
    match dir {
        Dir::Add => {
            for i in 0..=parts.len() {
                let mut v = parts.to_vec();
                if i == v.len() {
                    v.push(1);
                } else {
                    v[i] += 1;
                }
                let ok = i == 0
                    || match kind {
                        Kind::Ordinary => v[i - 1] >= v[i],
                        Kind::Strict => v[i - 1] > v[i],
                    };
                if ok {
                    out.push(Partition(v));
                }
            }
        }
        Dir::Remove => {
            for i in 0..parts.len() {
                let next = parts.get(i + 1).copied().unwrap_or(0);
                let ok = match kind {
                    Kind::Ordinary => parts[i] > next,
                    Kind::Strict => parts[i] - 1 > next || (next == 0 && parts[i] == 1),
                };
                if ok {
                    let mut v = parts.to_vec();
                    v[i] -= 1;
                    if v[i] == 0 {
                        v.pop();
                    }
                    out.push(Partition(v));
                }
            }
        }
    }
    out
}

type Memo = RwLock<HashMap<(Kind, Vec<u32>), BigUint>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// K_λ (ordinary) or K'_λ (strict): number of box-addition chains from ∅.
pub fn path_count(lambda: &Partition, kind: Kind) -> BigUint {
    debug_assert!(lambda.is_kind(kind));
    if lambda.is_empty() {
        return BigUint::one();
    }
    let key = (kind, lambda.0.clone());
    if let Some(v) = memo().read().unwrap().get(&key) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for mu in box_moves(lambda, kind, Dir::Remove) {
        total += path_count(&mu, kind);
    }
    memo().write().unwrap().insert(key, total.clone());
    total
}

/// Snapshot of the memoized K-values, sorted by key.
pub fn path_count_table() -> Vec<(Kind, Partition, BigUint)> {
    let mut v: Vec<_> =
        memo().read().unwrap().iter().map(|((k, p), n)| (*k, Partition(p.clone()), n.clone())).collect();
    v.sort();
    v
}

/// Seed the memo table, e.g. from an on-disk cache.
pub fn preload_path_counts(entries: impl IntoIterator<Item = (Kind, Partition, BigUint)>) {
    let mut m = memo().write().unwrap();
    for (k, p, n) in entries {
        m.insert((k, p.0), n);
    }
}

pub(crate) fn eps_of(odd: bool) -> Sqrt2Scalar {
    if odd {
        Sqrt2Scalar::sqrt2()
    } else {
        Sqrt2Scalar::int(1)
    }
}

/// Parities of a tuple of partitions; the tuple is odd iff an odd number of entries are.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParityTuple {
    pub parities: Vec<bool>,
}

impl ParityTuple {
    pub fn of(parts: &[&Partition]) -> Self {
        ParityTuple { parities: parts.iter().map(|p| p.is_odd()).collect() }
    }

    pub fn push(&mut self, odd: bool) {
        self.parities.push(odd);
    }

    pub fn is_odd(&self) -> bool {
        self.parities.iter().filter(|&&b| b).count() % 2 == 1
    }

    pub fn epsilon(&self) -> Sqrt2Scalar {
        eps_of(self.is_odd())
    }
}

/// ε of a tuple of partitions.
pub fn epsilon(parts: &[&Partition]) -> Sqrt2Scalar {
    ParityTuple::of(parts).epsilon()
}
