//! Integer partitions with the statistics used throughout the crate.
//!
//! A partition is stored as its weakly decreasing list of positive parts; the
//! empty list is the unique partition of 0. Iteration over all partitions of
//! `n` is in reverse lexicographic order: `(n)` first, `(1^n)` last.

use crate::error::{Error, Result};
use crate::Int;
use num_traits::{One, Zero};
use std::fmt;

/// A partition `λ = (λ_1 ≥ λ_2 ≥ … ≥ λ_r > 0)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

/// The three statistics `a(λ)`, `b(λ)` and `[λ] = n² − 2Σλ_i²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    pub a: u64,
    pub b: u64,
    pub bracket: i64,
}

impl Partition {
    /// Build from a list of parts, which must be positive and weakly
    /// decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidInput(format!(
                    "parts not weakly decreasing: {:?}",
                    parts
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidInput(format!(
                "parts must be positive: {:?}",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single-row partition `(n)`; empty when `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Single-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ| = Σ λ_i`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// First part, read as 0 for the empty partition.
    pub fn first_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part at index `i` (0-based), 0 beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Self::empty();
        }
        let cols = self.parts[0] as usize;
        let mut out = Vec::with_capacity(cols);
        for c in 0..cols {
            out.push(self.parts.iter().filter(|&&p| p as usize > c).count() as u32);
        }
        Partition { parts: out }
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - 1 - j as u32;
                let leg = conj.parts[j] - 1 - i as u32;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// `a(λ) = Σ (i−1)λ_i`, `b(λ) = (n² − Σλ_i²)/2`, `[λ] = n² − 2Σλ_i²`.
    pub fn stats(&self) -> PartitionStats {
        let n = self.size() as i64;
        let mut a = 0u64;
        let mut sq = 0i64;
        for (i, &p) in self.parts.iter().enumerate() {
            a += i as u64 * p as u64;
            sq += (p as i64) * (p as i64);
        }
        let b2 = n * n - sq;
        debug_assert!(b2 % 2 == 0, "n^2 - sum of squares is always even");
        PartitionStats {
            a,
            b: (b2 / 2) as u64,
            bracket: n * n - 2 * sq,
        }
    }

    /// Partition with the first row removed.
    pub fn without_first_row(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Prepend a new first part; `first` must be at least the current first
    /// part, and a zero `first` is the identity.
    pub fn with_prepended_part(&self, first: u32) -> Result<Partition> {
        if first == 0 {
            return Ok(self.clone());
        }
        if first < self.first_part() {
            return Err(Error::InvalidInput(format!(
                "prepended part {} shorter than next part {}",
                first,
                self.first_part()
            )));
        }
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(first);
        parts.extend_from_slice(&self.parts);
        Ok(Partition { parts })
    }

    /// Containment of Young diagrams: `μ_i ≤ λ_i` for all `i`.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

/// Iterator over all partitions of `n` in reverse lexicographic order.
pub struct PartitionIter {
    current: Option<Vec<u32>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let item = Partition { parts: cur.clone() };
        // Successor in reverse lexicographic order: find the last part > 1,
        // decrement it, and redistribute the remainder greedily.
        let mut parts = cur;
        let mut rest = 0u32;
        while let Some(&last) = parts.last() {
            if last == 1 {
                parts.pop();
                rest += 1;
            } else {
                break;
            }
        }
        if parts.is_empty() {
            self.current = None;
            return Some(item);
        }
        let last = parts.len() - 1;
        parts[last] -= 1;
        rest += 1;
        let cap = parts[last];
        while rest > 0 {
            let take = rest.min(cap);
            parts.push(take);
            rest -= take;
        }
        self.current = Some(parts);
        Some(item)
    }
}

/// All partitions of `n`, reverse lexicographic: `(n), (n−1,1), …, (1^n)`.
pub fn partitions_of(n: u32) -> PartitionIter {
    PartitionIter {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// `(p(m), p'(m))`: the number of partitions of `m`, and the number with no
/// part equal to 1.
pub fn partition_counts(m: u32) -> (Int, Int) {
    // Euler recurrence table: t[k][s] = partitions of s with parts ≤ k.
    let m = m as usize;
    let mut with_parts_at_most = vec![vec![Int::zero(); m + 1]; m + 2];
    for k in 0..=m + 1 {
        with_parts_at_most[k][0] = Int::one();
    }
    for k in 1..=m + 1 {
        for s in 1..=m {
            let mut v = with_parts_at_most[k - 1][s].clone();
            if s >= k {
                v += with_parts_at_most[k][s - k].clone();
            }
            with_parts_at_most[k][s] = v;
        }
    }
    let p = with_parts_at_most[m.max(1)][m].clone();
    // No parts of size 1: p'(m) = p(m) - p(m-1).
    let p_no_ones = if m == 0 {
        Int::one()
    } else {
        &p - &with_parts_at_most[m.max(1)][m - 1]
    };
    (p, p_no_ones)
}

/// Exception families for the classification of partitions with small
/// `[λ] = n² − 2Σλ_i²` among `λ ⊢ n` with `2 ≤ λ_1 ≤ n/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketFamily {
    /// `n = 3k = 6` and `λ = (2,2,2)`.
    TripleSquare,
    /// `n = 2k+1` and `λ = (k,k,1)` or `λ ∈ {(3,2,2), (2,1,1,1)}`.
    OddTwoRows,
    /// `n = 2k` and `λ ∈ {(k,k), (k,k−1,1)}` or `λ ∈ {(4,2,2), (3,1,1,1)}`.
    EvenTwoRows,
}

/// Over all `λ ⊢ n` with `2 ≤ λ_1 ≤ n/2`, return the partitions violating
/// `[λ] ≥ 2.4n` (compared exactly as `5·[λ] ≥ 12n`), each matched to its
/// exception family. Every returned partition still has `[λ] ≥ 0`.
pub fn sum1_classify(n: u32) -> Result<Vec<(Partition, BracketFamily)>> {
    if n < 4 {
        return Err(Error::InvalidInput(format!("need n >= 4, got {}", n)));
    }
    let mut out = Vec::new();
    for lam in partitions_of(n) {
        let k = lam.first_part();
        if k < 2 || 2 * k > n {
            continue;
        }
        let st = lam.stats();
        if 5 * st.bracket >= 12 * n as i64 {
            continue;
        }
        if st.bracket < 0 {
            return Err(Error::InvalidInput(format!(
                "bracket negative for {:?}: internal defect",
                lam
            )));
        }
        let parts = lam.parts();
        let family = if n == 6 && parts == [2, 2, 2] {
            BracketFamily::TripleSquare
        } else if n % 2 == 1
            && n == 2 * k + 1
            && (parts == [k, k, 1] || parts == [3, 2, 2] || parts == [2, 1, 1, 1])
        {
            BracketFamily::OddTwoRows
        } else if n % 2 == 0
            && n == 2 * k
            && (parts == [k, k]
                || parts == [k, k - 1, 1]
                || parts == [4, 2, 2]
                || parts == [3, 1, 1, 1])
        {
            BracketFamily::EvenTwoRows
        } else {
            return Err(Error::InvalidInput(format!(
                "partition {:?} of {} violates the bracket bound but matches no exception family",
                lam, n
            )));
        };
        out.push((lam, family));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_of_row_is_column() {
        assert_eq!(Partition::row(5).conjugate(), Partition::column(5));
    }

    #[test]
    fn conjugate_hand_checked() {
        let lam = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(lam.conjugate(), Partition::new(vec![2, 1, 1]).unwrap());
        let sc = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(sc.conjugate(), sc);
    }

    #[test]
    fn stats_match_direct_substitution() {
        let lam = Partition::new(vec![2, 1]).unwrap();
        let st = lam.stats();
        assert_eq!((st.a, st.b, st.bracket), (1, 2, -1));

        let row = Partition::row(7);
        let strow = row.stats();
        assert_eq!((strow.a, strow.b, strow.bracket), (0, 0, -49));

        let col = Partition::column(7);
        let stcol = col.stats();
        assert_eq!((stcol.a, stcol.b), (21, 21));
    }

    #[test]
    fn hook_length_sum_identity() {
        // Σ hook lengths = n + a(λ) + a(λ'): legs sum to a(λ), arms to a(λ').
        for n in 0..=9 {
            for lam in partitions_of(n) {
                let st = lam.stats();
                let stc = lam.conjugate().stats();
                let total: u64 = lam.hook_lengths().iter().map(|&h| h as u64).sum();
                assert_eq!(total, n as u64 + st.a + stc.a, "hook sum for {:?}", lam);
            }
        }
    }

    #[test]
    fn iteration_order_and_count() {
        let all: Vec<Partition> = partitions_of(4).collect();
        let expect = [
            vec![4u32],
            vec![3, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![1, 1, 1, 1],
        ];
        assert_eq!(all.len(), 5);
        for (p, e) in all.iter().zip(expect.iter()) {
            assert_eq!(p.parts(), &e[..]);
        }
        assert_eq!(partitions_of(0).count(), 1);
        assert_eq!(partitions_of(10).count(), 42);
    }

    #[test]
    fn serde_as_bare_array() {
        let lam = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(serde_json::to_string(&lam).unwrap(), "[3,1]");
        assert_eq!(serde_json::from_str::<Partition>("[3,1]").unwrap(), lam);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn partition_counts_small() {
        assert_eq!(partition_counts(0), (Int::from(1), Int::from(1)));
        assert_eq!(partition_counts(1), (Int::from(1), Int::from(0)));
        assert_eq!(partition_counts(4), (Int::from(5), Int::from(2)));
        // Frozen from the enumeration itself.
        let (p7, pn7) = partition_counts(7);
        assert_eq!(p7, Int::from(partitions_of(7).count()));
        let by_hand = partitions_of(7)
            .filter(|l| l.parts().iter().all(|&p| p != 1))
            .count();
        assert_eq!(pn7, Int::from(by_hand));
    }

    #[test]
    fn sum1_exceptions_for_small_n() {
        let six = sum1_classify(6).unwrap();
        assert!(six
            .iter()
            .any(|(l, f)| l.parts() == [2, 2, 2] && *f == BracketFamily::TripleSquare));
        let five = sum1_classify(5).unwrap();
        assert!(five
            .iter()
            .any(|(l, f)| l.parts() == [2, 2, 1] && *f == BracketFamily::OddTwoRows));
        let four = sum1_classify(4).unwrap();
        assert!(four
            .iter()
            .any(|(l, f)| l.parts() == [2, 2] && *f == BracketFamily::EvenTwoRows));
        assert!(sum1_classify(3).is_err());
    }

    #[test]
    fn sum1_scan_to_40() {
        // Exhaustive: every violator of 5[λ] ≥ 12n is classified, and every
        // returned partition has nonnegative bracket.
        for n in 4..=40 {
            let exc = sum1_classify(n).unwrap();
            for (lam, _) in exc {
                assert!(lam.stats().bracket >= 0);
            }
        }
    }

    #[test]
    fn first_row_removal_changes_b_by_k_n_minus_k() {
        for n in 1..=12 {
            for lam in partitions_of(n) {
                let k = lam.first_part() as u64;
                let mu = lam.without_first_row();
                let diff = lam.stats().b - mu.stats().b;
                assert_eq!(diff, k * (n as u64 - k), "b difference for {:?}", lam);
            }
        }
    }
}
