//! Integer partitions in canonical form and the bounded enumerator used to
//! search candidate spectra.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A weakly decreasing sequence of positive integers.
///
/// Zero parts are dropped on construction, so two partitions compare equal
/// exactly when their Young diagrams coincide. Call sites that need a
/// fixed-length view (Horn checks over length-`n` spectra) pad explicitly
/// with [`Partition::padded`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds the canonical partition from any multiset of non-negative parts.
    pub fn new(mut parts: Vec<u64>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// `|λ|`, the sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of positive parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of distinct positive part values.
    pub fn distinct_parts(&self) -> usize {
        let mut count = 0;
        let mut last = None;
        for &p in &self.parts {
            if last != Some(p) {
                count += 1;
                last = Some(p);
            }
        }
        count
    }

    /// Part `i` (0-based), reading missing parts as zero.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u64 {
        self.part(0)
    }

    /// Zero-padded copy of length `n`; `None` when the partition is longer.
    pub fn padded(&self, n: usize) -> Option<Vec<u64>> {
        if self.parts.len() > n {
            return None;
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Some(v)
    }

    /// Young-diagram containment: `inner_i <= self_i` for every row.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.parts.len() <= self.parts.len()
            && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }
}

impl From<Vec<u64>> for Partition {
    fn from(parts: Vec<u64>) -> Self {
        Partition::new(parts)
    }
}

impl<const N: usize> From<[u64; N]> for Partition {
    fn from(parts: [u64; N]) -> Self {
        Partition::new(parts.to_vec())
    }
}

impl FromIterator<u64> for Partition {
    fn from_iter<T: IntoIterator<Item = u64>>(iter: T) -> Self {
        Partition::new(iter.into_iter().collect())
    }
}

/// Comma-separated parts, `-` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let p: u64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("invalid partition part {tok:?} in {s:?}")))?;
            if p == 0 {
                return Err(Error::Parse(format!(
                    "partition parts must be positive, got {s:?}"
                )));
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }
}

/// Partitions of `total` into exactly `exact_length` positive parts with the
/// first part at most `max_first_part`, streamed in descending lexicographic
/// order.
pub fn enumerate_partitions(total: u64, exact_length: usize, max_first_part: u64) -> PartitionIter {
    PartitionIter::new(total, exact_length, max_first_part)
}

/// Streaming generator behind [`enumerate_partitions`].
///
/// Keeps the current partition as a vector and advances it in place:
/// find the rightmost position whose part can be lowered while the suffix can
/// still be refilled with parts no larger than it, lower it, and refill the
/// suffix greedily.
#[derive(Clone, Debug)]
pub struct PartitionIter {
    total: u64,
    len: usize,
    current: Option<Vec<u64>>,
}

impl PartitionIter {
    fn new(total: u64, len: usize, max_first: u64) -> Self {
        let current = if len == 0 {
            (total == 0).then(Vec::new)
        } else {
            fill_greedy(total, len, max_first)
        };
        PartitionIter {
            total,
            len,
            current,
        }
    }
}

/// Lexicographically largest sequence of `len` positive parts, each at most
/// `cap`, weakly decreasing and summing to `total`.
fn fill_greedy(total: u64, len: usize, cap: u64) -> Option<Vec<u64>> {
    if len == 0 {
        return (total == 0).then(Vec::new);
    }
    let len64 = len as u64;
    if total < len64 || cap == 0 || cap.checked_mul(len64).is_some_and(|m| m < total) {
        return None;
    }
    let mut out = Vec::with_capacity(len);
    let mut remaining = total;
    let mut cap = cap;
    for slot in 0..len {
        let left_after = (len - slot - 1) as u64;
        let p = cap.min(remaining - left_after);
        out.push(p);
        remaining -= p;
        cap = p;
    }
    debug_assert_eq!(remaining, 0);
    Some(out)
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition { parts: cur.clone() };
        if self.len > 0 {
            // Try positions right to left: lowering parts[i] by one and
            // refilling the tail under the new cap.
            for i in (0..self.len.saturating_sub(1)).rev() {
                let lowered = cur[i] - 1;
                if lowered == 0 {
                    continue;
                }
                let prefix: u64 = cur[..i].iter().sum::<u64>() + lowered;
                if prefix > self.total {
                    continue;
                }
                if let Some(tail) = fill_greedy(self.total - prefix, self.len - i - 1, lowered) {
                    let mut next = cur[..i].to_vec();
                    next.push(lowered);
                    next.extend(tail);
                    self.current = Some(next);
                    break;
                }
            }
        }
        debug_assert_eq!(out.size(), self.total);
        Some(out)
    }
}
