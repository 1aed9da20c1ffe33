//! Graph container shared by the partition, divisor and sigma networks.

use crate::error::{Error, Result};

/// Default cap on materialized nodes (and E-vector entries).
pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

/// Upper bound on how much a single materialization may allocate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub nodes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            nodes: DEFAULT_NODE_BUDGET,
        }
    }
}

impl Budget {
    pub fn new(nodes: usize) -> Self {
        assert!(nodes > 0, "budget must be positive");
        Budget { nodes }
    }

    pub(crate) fn check(&self, what: &'static str, required: u128) -> Result<()> {
        if required > self.nodes as u128 {
            return Err(Error::LimitExceeded {
                what,
                required: required.to_string(),
                budget: self.nodes,
            });
        }
        Ok(())
    }
}

/// What a network describes; drives labelling and the meaning of `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NetworkKind {
    Partition,
    PartitionAnnotated,
    Divisor,
    Sigma,
}

impl NetworkKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NetworkKind::Partition => "partition",
            NetworkKind::PartitionAnnotated => "partition-annotated",
            NetworkKind::Divisor => "divisor",
            NetworkKind::Sigma => "sigma",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "partition" => NetworkKind::Partition,
            "partition-annotated" => NetworkKind::PartitionAnnotated,
            "divisor" => NetworkKind::Divisor,
            "sigma" => NetworkKind::Sigma,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    /// Terms in the order the network displays them.
    pub terms: Vec<u64>,
    /// Order-1 block size, signed smallest term or sigma weight.
    pub value: Option<i64>,
}

impl Node {
    pub fn sum(&self) -> u64 {
        self.terms.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    /// Jump order; 0 marks a main-branch link between single-term nodes.
    pub order: u64,
    /// Edge leaves a root (the first fan of jumps).
    pub first_jump: bool,
}

/// Directed acyclic graph of partitions connected by jumps. Node ids are
/// indices into `nodes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionNetwork {
    pub kind: NetworkKind,
    /// `n` for partition networks, `a1_max` for divisor, `n_max` for sigma.
    pub parameter: u64,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
    pub roots: Vec<usize>,
}

impl PartitionNetwork {
    pub(crate) fn new(kind: NetworkKind, parameter: u64) -> Self {
        PartitionNetwork {
            kind,
            parameter,
            nodes: Vec::new(),
            edges: Vec::new(),
            roots: Vec::new(),
        }
    }

    pub(crate) fn push_node(&mut self, terms: Vec<u64>, value: Option<i64>) -> usize {
        self.nodes.push(Node { terms, value });
        self.nodes.len() - 1
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sum of node values over the nodes whose terms add up to `n`.
    pub fn slice_sum(&self, n: u64) -> i64 {
        self.nodes
            .iter()
            .filter(|node| node.sum() == n)
            .filter_map(|node| node.value)
            .sum()
    }

    /// Number of incoming edges per node.
    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes.len()];
        for e in &self.edges {
            deg[e.to] += 1;
        }
        deg
    }
}
