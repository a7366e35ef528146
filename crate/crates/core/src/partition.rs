//! Canonical partition representation and the elementary statistics and
//! arithmetic used throughout the crate.
//!
//! A [`Partition`] stores its parts in weakly decreasing order. A single
//! trailing zero part is permitted; the families of partitions into
//! nonnegative parts need it as an explicit marker.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

/// Summary statistics of a partition.
///
/// Zero counts as an even part. `smallest` and `second_smallest` are `None`
/// when the partition has too few parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stats {
    pub weight: u64,
    pub len: usize,
    pub even_len: usize,
    pub odd_len: usize,
    pub smallest: Option<u32>,
    pub second_smallest: Option<u32>,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from arbitrary-order parts, sorting them into
    /// weakly decreasing order.
    pub fn new<I>(parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = i64>,
    {
        let mut out = Vec::new();
        for p in parts {
            if p < 0 {
                return Err(Error::NegativePart(p));
            }
            out.push(u32::try_from(p).map_err(|_| Error::Invariant(format!("part {p} too large")))?);
        }
        Self::from_parts(out)
    }

    /// Like [`Partition::new`] for parts that are already unsigned.
    pub fn from_parts(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.iter().filter(|&&p| p == 0).count() > 1 {
            return Err(Error::DuplicateZero);
        }
        Ok(Partition(parts))
    }

    /// Wraps parts that the caller guarantees to be weakly decreasing with at
    /// most one trailing zero.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "unsorted parts {parts:?}");
        debug_assert!(parts.iter().filter(|&&p| p == 0).count() <= 1);
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Number of parts, zero part included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based part access; rows past the end read as 0.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn even_len(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 0).count()
    }

    pub fn odd_len(&self) -> usize {
        self.0.len() - self.even_len()
    }

    pub fn has_zero(&self) -> bool {
        self.smallest() == Some(0)
    }

    pub fn is_distinct(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn stats(&self) -> Stats {
        let len = self.0.len();
        Stats {
            weight: self.weight(),
            len,
            even_len: self.even_len(),
            odd_len: self.odd_len(),
            smallest: self.smallest(),
            second_smallest: if len >= 2 { Some(self.0[len - 2]) } else { None },
        }
    }

    /// Componentwise sum, padding the shorter operand with zeros.
    pub fn add(&self, other: &Partition) -> Partition {
        let (long, short) = if self.len() >= other.len() { (self, other) } else { (other, self) };
        let mut parts = long.0.clone();
        for (p, q) in parts.iter_mut().zip(&short.0) {
            *p += q;
        }
        Partition::from_sorted(parts)
    }

    /// Ordinary Young-diagram conjugate.
    pub fn conjugate(&self) -> Result<Partition> {
        if self.has_zero() {
            return Err(Error::ZeroPartPresent(self.to_string()));
        }
        let width = self.largest().unwrap_or(0) as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.0 {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Ok(Partition::from_sorted(cols))
    }

    /// Returns the partition with its zero part (if any) removed.
    pub fn without_zero(&self) -> Partition {
        let mut parts = self.0.clone();
        if parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    /// Appends a zero part. Fails if one is already present.
    pub fn with_zero(&self) -> Result<Partition> {
        if self.has_zero() {
            return Err(Error::DuplicateZero);
        }
        let mut parts = self.0.clone();
        parts.push(0);
        Ok(Partition(parts))
    }
}

/// The triangular partition `(2k-1, 2k-3, ..., 3, 1)` of weight `k^2`.
pub fn triangular(k: usize) -> Partition {
    Partition::from_sorted((0..k as u32).rev().map(|j| 2 * j + 1).collect())
}

/// Returns `Some(k)` when `n = k^2`.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let mut k = (n as f64).sqrt() as u64;
    while k * k > n {
        k -= 1;
    }
    while (k + 1) * (k + 1) <= n {
        k += 1;
    }
    (k * k == n).then_some(k)
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Plus-joined parts, largest first, e.g. `5+3+1+0`; the empty partition
/// prints as `()`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Shorthand for building a partition from literal parts in tests and
/// examples. Panics on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new([$($p as i64),+]).expect("valid partition literal")
    };
}
