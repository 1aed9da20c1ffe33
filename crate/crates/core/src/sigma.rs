//! Sum of divisors as a signed sum over distinct-part partitions:
//! `sigma1(n) = -sum_pi (-1)^{#pi} sum_{j=1}^{lambda} (L - lambda + j)`,
//! with `L` the largest and `lambda` the smallest part.

use std::collections::HashMap;

use crate::divisor::{distinct_partitions_with_first, enumerate_distinct_partitions, DistinctPartition};
use crate::error::Result;
use crate::network::{Budget, Edge, NetworkKind, PartitionNetwork};

/// `sum_{j=1}^{lambda} (L - lambda + j) = lambda (L - lambda) + lambda (lambda + 1) / 2`.
pub fn inner_sum(largest: u64, lambda: u64) -> u64 {
    assert!(1 <= lambda && lambda <= largest, "need 1 <= lambda <= L");
    lambda * (largest - lambda) + lambda * (lambda + 1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaTerm {
    pub partition: DistinctPartition,
    pub largest: u64,
    pub lambda: u64,
    pub weight: i64,
}

impl SigmaTerm {
    pub fn new(partition: DistinctPartition) -> Self {
        let largest = partition.largest();
        let lambda = partition.smallest();
        let weight = partition.sign() * inner_sum(largest, lambda) as i64;
        SigmaTerm {
            partition,
            largest,
            lambda,
            weight,
        }
    }
}

fn sigma_root(n: u64, a1: u64) -> i64 {
    distinct_partitions_with_first(n, a1, a1)
        .map(|t| SigmaTerm::new(t.partition).weight)
        .sum()
}

pub fn sigma1_sequential(n: u64) -> u64 {
    assert!(n >= 1, "n must be positive");
    let total: i64 = enumerate_distinct_partitions(n)
        .map(|t| SigmaTerm::new(t.partition).weight)
        .sum();
    total as u64
}

/// Sum of the divisors of `n`.
pub fn sigma1(n: u64) -> u64 {
    assert!(n >= 1, "n must be positive");
    #[cfg(feature = "parallel")]
    let total: i64 = {
        use rayon::prelude::*;
        (1..=n).into_par_iter().map(|a1| sigma_root(n, a1)).sum()
    };
    #[cfg(not(feature = "parallel"))]
    let total: i64 = (1..=n).map(|a1| sigma_root(n, a1)).sum();
    total as u64
}

/// Number of distinct-part partitions of each `0..=n`.
fn distinct_counts(n: u64) -> Vec<u128> {
    let n = n as usize;
    let mut q = vec![0u128; n + 1];
    q[0] = 1;
    for part in 1..=n {
        for total in (part..=n).rev() {
            q[total] = q[total].saturating_add(q[total - part]);
        }
    }
    q
}

/// Network over distinct-part partitions with sum `<= n_max`, weighted by
/// their sigma terms. Each partition hangs off its invariant-jump
/// predecessor; the single-part nodes `[1], [2], ...` form the main branch,
/// linked in sequence by order-0 edges.
pub fn build_sigma_network(n_max: u64, budget: Budget) -> Result<PartitionNetwork> {
    assert!(n_max >= 1, "n_max must be positive");
    let total = distinct_counts(n_max)[1..]
        .iter()
        .fold(0u128, |acc, &q| acc.saturating_add(q));
    budget.check("sigma network", total)?;

    let mut net = PartitionNetwork::new(NetworkKind::Sigma, n_max);
    let mut ids: HashMap<DistinctPartition, usize> = HashMap::new();
    let mut previous_single = None;
    for n in 1..=n_max {
        for t in enumerate_distinct_partitions(n) {
            let term = SigmaTerm::new(t.partition);
            let id = net.push_node(term.partition.terms(), Some(term.weight));
            match term.partition.invariant_predecessor() {
                None => {
                    net.roots.push(id);
                    if let Some(prev) = previous_single {
                        net.edges.push(Edge {
                            from: prev,
                            to: id,
                            order: 0,
                            first_jump: false,
                        });
                    }
                    previous_single = Some(id);
                }
                Some((pred, order)) => {
                    net.edges.push(Edge {
                        from: ids[&pred],
                        to: id,
                        order,
                        first_jump: pred.tail().is_empty(),
                    });
                }
            }
            ids.insert(term.partition, id);
        }
    }
    Ok(net)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evector::triangular;

    #[test]
    fn inner_sum_examples() {
        assert_eq!(inner_sum(3, 3), 6);
        assert_eq!(inner_sum(4, 2), 7);
        for n in 1..50 {
            assert_eq!(inner_sum(n, n), triangular(n));
        }
    }

    #[test]
    fn inner_sum_closed_form_matches_loop() {
        for largest in 1..=200u64 {
            for lambda in 1..=largest {
                let looped: u64 = (1..=lambda).map(|j| largest - lambda + j).sum();
                assert_eq!(inner_sum(largest, lambda), looped);
            }
        }
    }

    #[test]
    fn sigma_examples() {
        let expected = [1, 3, 4, 7, 6, 12, 8];
        for (n, want) in (1..=7).zip(expected) {
            assert_eq!(sigma1(n), want, "n = {n}");
            assert_eq!(sigma1_sequential(n), want, "n = {n}");
        }
    }

    #[test]
    fn weights_of_seven() {
        let mut weights: Vec<i64> = enumerate_distinct_partitions(7)
            .map(|t| SigmaTerm::new(t.partition).weight)
            .collect();
        weights.sort_unstable();
        assert_eq!(weights, vec![-9, -9, -6, 4, 28]);
    }

    #[test]
    fn network_slices() {
        let net = build_sigma_network(7, Budget::default()).unwrap();
        let expected = [1, 3, 4, 7, 6, 12, 8];
        for (n, want) in (1..=7u64).zip(expected) {
            assert_eq!(net.slice_sum(n), want);
        }
        let three = build_sigma_network(3, Budget::default()).unwrap();
        let mut slice: Vec<i64> = three
            .nodes
            .iter()
            .filter(|node| node.sum() == 3)
            .map(|node| node.value.unwrap())
            .collect();
        slice.sort_unstable();
        assert_eq!(slice, vec![-2, 6]);
        let one = build_sigma_network(1, Budget::default()).unwrap();
        assert_eq!(one.node_count(), 1);
        assert_eq!(one.nodes[0].value, Some(1));
    }

    #[test]
    fn main_branch_is_triangular() {
        let net = build_sigma_network(12, Budget::default()).unwrap();
        let branch: Vec<i64> = net.roots.iter().map(|&id| net.nodes[id].value.unwrap()).collect();
        let tri: Vec<i64> = (1..=12).map(|n| triangular(n) as i64).collect();
        assert_eq!(branch, tri);
        assert!(net.nodes.iter().all(|node| node.terms.len() > 1 || node.value.unwrap() > 0));
    }
}
