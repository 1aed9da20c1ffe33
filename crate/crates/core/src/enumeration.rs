//! Every partition of `n`, reached exactly once by non-ascending jump
//! sequences starting from `[n]`.
//!
//! Order is a depth-first preorder: `[n]` first, then the first-jump
//! subtrees for `r = 1, 2, ..., n/2`; below the first jump, children are
//! visited from the largest admissible order down to 1.

use num_traits::ToPrimitive;

use crate::counting;
use crate::error::Result;
use crate::jump::Partition;
use crate::network::{Budget, Edge, NetworkKind, PartitionNetwork};

/// Depth-first stream over the partitions of `n`.
#[derive(Debug, Clone)]
pub struct Partitions {
    stack: Vec<Partition>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.stack.pop()?;
        let orders = admissible_orders(&current);
        if current.len() == 1 {
            // Root fan: increasing order, so push largest first.
            for r in orders.rev() {
                self.stack.push(jump_unchecked(&current, r));
            }
        } else {
            for r in orders {
                self.stack.push(jump_unchecked(&current, r));
            }
        }
        Some(current)
    }
}

pub fn enumerate_partitions(n: u64) -> Partitions {
    assert!(n >= 1, "n must be positive");
    Partitions {
        stack: vec![Partition::single(n)],
    }
}

/// Jump orders valid from `p`: `1..=min(a2, a1 - am)`, or `1..=n/2` for `[n]`.
pub(crate) fn admissible_orders(p: &Partition) -> std::ops::RangeInclusive<u64> {
    let terms = p.terms();
    if terms.len() == 1 {
        1..=terms[0] / 2
    } else {
        1..=terms[1].min(terms[0] - p.last())
    }
}

fn jump_unchecked(p: &Partition, r: u64) -> Partition {
    let terms = p.terms();
    let mut next = Vec::with_capacity(terms.len() + 1);
    next.push(terms[0] - r);
    next.push(r);
    next.extend_from_slice(&terms[1..]);
    Partition::from_terms_unchecked(next)
}

/// Materializes the jump tree of `n`. With `annotate`, each node carries
/// the size of its order-1 jump set.
pub fn build_partition_network(n: u64, annotate: bool, budget: Budget) -> Result<PartitionNetwork> {
    assert!(n >= 1, "n must be positive");
    let count = counting::p(n);
    budget.check("partition network", count.to_u128().unwrap_or(u128::MAX))?;

    let kind = if annotate {
        NetworkKind::PartitionAnnotated
    } else {
        NetworkKind::Partition
    };
    let mut net = PartitionNetwork::new(kind, n);
    let annotation = |p: &Partition| annotate.then(|| p.jump_set_order1_size() as i64);

    // Same preorder as the stream, so node ids follow enumeration order.
    let mut stack: Vec<(Partition, Option<(usize, u64)>)> = vec![(Partition::single(n), None)];
    while let Some((part, parent)) = stack.pop() {
        let id = net.push_node(part.terms().to_vec(), annotation(&part));
        match parent {
            None => net.roots.push(id),
            Some((from, order)) => net.edges.push(Edge {
                from,
                to: id,
                order,
                first_jump: net.roots.contains(&from),
            }),
        }
        let orders = admissible_orders(&part);
        if part.len() == 1 {
            for r in orders.rev() {
                stack.push((jump_unchecked(&part, r), Some((id, r))));
            }
        } else {
            for r in orders {
                stack.push((jump_unchecked(&part, r), Some((id, r))));
            }
        }
    }
    Ok(net)
}
