//! Distinct-part partitions grown by jumps that keep the initial term, and
//! the signed trace of smallest parts, which equals the divisor count.
//!
//! A partition with distinct parts is written `a1 a2 ... am` with `a1` the
//! largest part and `a2 < a3 < ... < am` the orders of the jumps that built
//! it, read right to left.

use std::fmt;

use crate::error::{Error, Result};
use crate::jump::format_terms;
use crate::network::{Budget, Edge, NetworkKind, PartitionNetwork};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DistinctPartition {
    first: u64,
    tail: Vec<u64>,
}

impl DistinctPartition {
    pub fn single(a1: u64) -> Self {
        assert!(a1 >= 1, "parts must be positive");
        DistinctPartition {
            first: a1,
            tail: Vec::new(),
        }
    }

    /// Builds from any collection of pairwise distinct positive parts.
    pub fn from_parts(mut parts: Vec<u64>) -> Result<Self> {
        parts.sort_unstable();
        let distinct = parts.windows(2).all(|w| w[0] < w[1]);
        if parts.is_empty() || parts[0] == 0 || !distinct {
            return Err(Error::InvalidPartition(format_terms(&parts)));
        }
        let first = parts.pop().expect("non-empty");
        Ok(DistinctPartition { first, tail: parts })
    }

    pub(crate) fn from_tail_unchecked(first: u64, tail: Vec<u64>) -> Self {
        debug_assert!(tail.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(tail.last().is_none_or(|&t| t < first));
        DistinctPartition { first, tail }
    }

    /// The invariant initial term, which is also the largest part.
    pub fn first(&self) -> u64 {
        self.first
    }

    /// Remaining parts, strictly increasing.
    pub fn tail(&self) -> &[u64] {
        &self.tail
    }

    /// Parts in display order: `a1` followed by the increasing tail.
    pub fn terms(&self) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.tail.len() + 1);
        v.push(self.first);
        v.extend_from_slice(&self.tail);
        v
    }

    pub fn len(&self) -> usize {
        self.tail.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> u64 {
        self.first + self.tail.iter().sum::<u64>()
    }

    /// Smallest part; the order of the last jump, or `a1` when none was made.
    pub fn smallest(&self) -> u64 {
        self.tail.first().copied().unwrap_or(self.first)
    }

    pub fn largest(&self) -> u64 {
        self.first
    }

    /// `+1` for an odd number of parts, `-1` for even.
    pub fn sign(&self) -> i64 {
        if self.len() % 2 == 1 {
            1
        } else {
            -1
        }
    }

    /// Inserts `r` right after `a1`. `r` must be below every part.
    pub fn invariant_jump(&self, r: u64) -> Result<DistinctPartition> {
        if r == 0 || r >= self.smallest() {
            return Err(Error::InvalidInvariantJump {
                partition: self.to_string(),
                order: r,
            });
        }
        let mut tail = Vec::with_capacity(self.tail.len() + 1);
        tail.push(r);
        tail.extend_from_slice(&self.tail);
        Ok(DistinctPartition {
            first: self.first,
            tail,
        })
    }

    /// Undoes the last invariant jump by dropping the second term.
    pub fn invariant_predecessor(&self) -> Option<(DistinctPartition, u64)> {
        let (&r, rest) = self.tail.split_first()?;
        Some((
            DistinctPartition {
                first: self.first,
                tail: rest.to_vec(),
            },
            r,
        ))
    }
}

impl fmt::Display for DistinctPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(&self.terms()))
    }
}

/// A distinct-part partition together with its signed smallest part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedTraceTerm {
    pub partition: DistinctPartition,
    pub smallest: u64,
    pub sign: i64,
}

impl SignedTraceTerm {
    pub fn new(partition: DistinctPartition) -> Self {
        SignedTraceTerm {
            smallest: partition.smallest(),
            sign: partition.sign(),
            partition,
        }
    }

    pub fn value(&self) -> i64 {
        self.sign * self.smallest as i64
    }
}

/// The full descending jump set rooted at `a1`: one partition per subset of
/// `{1, ..., a1 - 1}`, ordered by subset size and then lexicographically.
pub fn enumerate_descending_jump_set(a1: u64) -> DescendingJumpSet {
    assert!(a1 >= 1, "a1 must be positive");
    DescendingJumpSet {
        a1,
        size: 0,
        current: Some(Vec::new()),
    }
}

#[derive(Debug, Clone)]
pub struct DescendingJumpSet {
    a1: u64,
    size: usize,
    current: Option<Vec<u64>>,
}

impl Iterator for DescendingJumpSet {
    type Item = DistinctPartition;

    fn next(&mut self) -> Option<DistinctPartition> {
        let tail = self.current.take()?;
        let out = DistinctPartition::from_tail_unchecked(self.a1, tail.clone());
        self.current = self.advance(tail);
        Some(out)
    }
}

impl DescendingJumpSet {
    /// Next combination of the same size, or the first of the next size.
    fn advance(&mut self, mut comb: Vec<u64>) -> Option<Vec<u64>> {
        let top = self.a1 - 1;
        let k = comb.len();
        // Rightmost position that can still move up.
        let pivot = (0..k).rev().find(|&i| comb[i] < top - (k - 1 - i) as u64);
        match pivot {
            Some(i) => {
                comb[i] += 1;
                for j in i + 1..k {
                    comb[j] = comb[j - 1] + 1;
                }
                Some(comb)
            }
            None => {
                self.size += 1;
                if self.size as u64 > top {
                    None
                } else {
                    Some((1..=self.size as u64).collect())
                }
            }
        }
    }
}

/// Tails drawn from `{1, ..., a1 - 1}` summing to `target`, in
/// lexicographic order of the increasing tail.
#[derive(Debug, Clone)]
struct TailSearch {
    a1: u64,
    target: u64,
    tail: Vec<u64>,
    sum: u64,
    extend: bool,
    started: bool,
}

impl TailSearch {
    fn new(a1: u64, target: u64) -> Self {
        TailSearch {
            a1,
            target,
            tail: Vec::new(),
            sum: 0,
            extend: true,
            started: false,
        }
    }

    /// Could `rest` still be made from distinct values in `lo..a1`?
    fn reachable(&self, lo: u64, rest: u64) -> bool {
        if rest == 0 {
            return true;
        }
        let hi = self.a1 - 1;
        lo <= rest && lo <= hi && (lo + hi) * (hi - lo + 1) / 2 >= rest
    }

    fn place_from(&mut self, lo: u64) -> bool {
        let rest = self.target - self.sum;
        let mut x = lo;
        while x < self.a1 && x <= rest {
            if self.reachable(x + 1, rest - x) {
                self.tail.push(x);
                self.sum += x;
                return true;
            }
            x += 1;
        }
        false
    }

    fn next_tail(&mut self) -> Option<&[u64]> {
        if !self.started {
            self.started = true;
            if self.target == 0 {
                self.extend = false;
                return Some(&self.tail);
            }
            if !self.reachable(1, self.target) {
                return None;
            }
        }
        loop {
            if self.extend {
                let lo = self.tail.last().map_or(1, |&t| t + 1);
                if self.place_from(lo) {
                    if self.sum == self.target {
                        self.extend = false;
                        return Some(&self.tail);
                    }
                } else {
                    self.extend = false;
                }
            } else {
                let y = self.tail.pop()?;
                self.sum -= y;
                if self.place_from(y + 1) {
                    if self.sum == self.target {
                        return Some(&self.tail);
                    }
                    self.extend = true;
                }
            }
        }
    }
}

/// Stream of the distinct-part partitions of `n`, grouped by `a1 = 1..=n`.
#[derive(Debug, Clone)]
pub struct DistinctPartitions {
    n: u64,
    a1: u64,
    search: TailSearch,
    a1_end: u64,
}

impl Iterator for DistinctPartitions {
    type Item = SignedTraceTerm;

    fn next(&mut self) -> Option<SignedTraceTerm> {
        loop {
            if self.a1 > self.a1_end {
                return None;
            }
            if let Some(tail) = self.search.next_tail() {
                let part = DistinctPartition::from_tail_unchecked(self.a1, tail.to_vec());
                return Some(SignedTraceTerm::new(part));
            }
            self.a1 += 1;
            if self.a1 <= self.a1_end {
                self.search = TailSearch::new(self.a1, self.n - self.a1);
            }
        }
    }
}

pub fn enumerate_distinct_partitions(n: u64) -> DistinctPartitions {
    assert!(n >= 1, "n must be positive");
    distinct_partitions_with_first(n, 1, n)
}

/// Distinct-part partitions of `n` whose largest part lies in `lo..=hi`.
pub(crate) fn distinct_partitions_with_first(n: u64, lo: u64, hi: u64) -> DistinctPartitions {
    let hi = hi.min(n);
    DistinctPartitions {
        n,
        a1: lo,
        search: TailSearch::new(lo, n.saturating_sub(lo)),
        a1_end: hi,
    }
}

fn trace_root(n: u64, a1: u64) -> i64 {
    distinct_partitions_with_first(n, a1, a1)
        .map(|t| t.value())
        .sum()
}

/// Signed sum of smallest parts over the distinct-part partitions of `n`.
pub fn trace_sequential(n: u64) -> i64 {
    assert!(n >= 1, "n must be positive");
    enumerate_distinct_partitions(n).map(|t| t.value()).sum()
}

/// Same as [`trace_sequential`], split across the roots `a1 = 1..=n` when
/// the `parallel` feature is on.
pub fn trace(n: u64) -> i64 {
    assert!(n >= 1, "n must be positive");
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (1..=n).into_par_iter().map(|a1| trace_root(n, a1)).sum()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (1..=n).map(|a1| trace_root(n, a1)).sum()
    }
}

/// Network of signed smallest parts for the jump sets rooted at
/// `a1 = 1..=a1_max`. Each partition hangs off its invariant-jump
/// predecessor.
pub fn build_divisor_network(a1_max: u64, budget: Budget) -> Result<PartitionNetwork> {
    assert!(a1_max >= 1, "a1_max must be positive");
    let total = if a1_max >= 127 {
        u128::MAX
    } else {
        (1u128 << a1_max) - 1
    };
    budget.check("divisor network", total)?;

    let mut net = PartitionNetwork::new(NetworkKind::Divisor, a1_max);
    for a1 in 1..=a1_max {
        // Tails are subsets of {1..a1-1}; index ids by their bitmask.
        let mut ids = vec![usize::MAX; 1usize << (a1 - 1)];
        for part in enumerate_descending_jump_set(a1) {
            let mask = part.tail().iter().fold(0usize, |m, &t| m | 1 << (t - 1));
            let term = SignedTraceTerm::new(part);
            let id = net.push_node(term.partition.terms(), Some(term.value()));
            match term.partition.tail().first() {
                None => net.roots.push(id),
                Some(&order) => net.edges.push(Edge {
                    from: ids[mask & (mask - 1)],
                    to: id,
                    order,
                    first_jump: term.partition.len() == 2,
                }),
            }
            ids[mask] = id;
        }
    }
    Ok(net)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles;
    use std::collections::BTreeSet;

    fn dp(parts: &[u64]) -> DistinctPartition {
        DistinctPartition::from_parts(parts.to_vec()).unwrap()
    }

    #[test]
    fn invariant_jump_examples() {
        assert_eq!(dp(&[4, 3]).invariant_jump(2).unwrap().to_string(), "4 2 3");
        assert_eq!(DistinctPartition::single(5).invariant_jump(4).unwrap().to_string(), "5 4");
        assert!(matches!(
            dp(&[4, 2, 3]).invariant_jump(2),
            Err(Error::InvalidInvariantJump { .. })
        ));
        assert!(DistinctPartition::single(3).invariant_jump(3).is_err());
        assert!(DistinctPartition::from_parts(vec![2, 2]).is_err());
    }

    #[test]
    fn jump_set_of_four() {
        let got: Vec<String> = enumerate_descending_jump_set(4).map(|p| p.to_string()).collect();
        assert_eq!(got, ["4", "4 1", "4 2", "4 3", "4 1 2", "4 1 3", "4 2 3", "4 1 2 3"]);
        assert_eq!(enumerate_descending_jump_set(1).count(), 1);
    }

    #[test]
    fn jump_set_sizes() {
        for a1 in 1..=14u64 {
            let all: Vec<DistinctPartition> = enumerate_descending_jump_set(a1).collect();
            assert_eq!(all.len(), 1 << (a1 - 1));
            let set: BTreeSet<_> = all.iter().collect();
            assert_eq!(set.len(), all.len());
            assert!(all.iter().all(|p| p.first() == a1));
        }
    }

    #[test]
    fn distinct_partitions_of_seven() {
        let got: Vec<(Vec<u64>, u64, i64)> = enumerate_distinct_partitions(7)
            .map(|t| {
                let mut parts = t.partition.terms();
                parts.sort_unstable();
                (parts, t.smallest, t.sign)
            })
            .collect();
        assert_eq!(
            got,
            vec![
                (vec![1, 2, 4], 1, 1),
                (vec![3, 4], 3, -1),
                (vec![2, 5], 2, -1),
                (vec![1, 6], 1, -1),
                (vec![7], 7, 1),
            ]
        );
    }

    #[test]
    fn distinct_partitions_match_bruteforce() {
        for n in 1..=40 {
            let ours: BTreeSet<Vec<u64>> = enumerate_distinct_partitions(n)
                .map(|t| {
                    let mut parts = t.partition.terms();
                    parts.sort_unstable();
                    parts
                })
                .collect();
            let count = enumerate_distinct_partitions(n).count();
            let brute = oracles::distinct_partitions_bruteforce(n);
            assert_eq!(count, brute.len(), "n = {n}");
            assert_eq!(ours, brute, "n = {n}");
        }
    }

    #[test]
    fn trace_terms_are_consistent() {
        for t in enumerate_distinct_partitions(25) {
            let parts = t.partition.terms();
            assert_eq!(t.smallest, *parts.iter().min().unwrap());
            assert_eq!(t.sign, if parts.len() % 2 == 1 { 1 } else { -1 });
        }
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace(1), 1);
        assert_eq!(trace(6), 4);
        assert_eq!(trace(7), 2);
        for n in 1..=30 {
            assert_eq!(trace(n), trace_sequential(n));
        }
    }

    #[test]
    fn divisor_network_shape() {
        let net = build_divisor_network(5, Budget::default()).unwrap();
        assert_eq!(net.node_count(), 31);
        assert_eq!(net.roots.len(), 5);
        assert_eq!(net.edge_count(), 26);
        let single = build_divisor_network(1, Budget::default()).unwrap();
        assert_eq!(single.node_count(), 1);
        assert_eq!(single.nodes[0].value, Some(1));
        let six = build_divisor_network(6, Budget::default()).unwrap();
        assert_eq!(six.slice_sum(6), 4);
        assert!(build_divisor_network(25, Budget::new(1000)).is_err());
    }
}
