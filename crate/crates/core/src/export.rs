//! DOT and JSON serialization of partition networks.
//!
//! JSON documents have a fixed key order (`kind`, the size parameter,
//! `nodes`, `edges`) and nodes sorted by id, so output is byte-stable.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jump::format_terms;
use crate::network::{NetworkKind, PartitionNetwork};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeEntry {
    pub id: usize,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<i64>,
    pub terms: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEntry {
    pub from: usize,
    pub to: usize,
    pub order: u64,
    #[serde(rename = "firstJump")]
    pub first_jump: bool,
}

/// Serializable form of a [`PartitionNetwork`]. Exactly one of the size
/// fields is set, chosen by `kind`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkDocument {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a1_max: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<u64>,
    pub nodes: Vec<NodeEntry>,
    pub edges: Vec<EdgeEntry>,
}

impl NetworkDocument {
    pub fn from_network(net: &PartitionNetwork) -> Self {
        let (mut n, mut a1_max, mut n_max) = (None, None, None);
        match net.kind {
            NetworkKind::Partition | NetworkKind::PartitionAnnotated => n = Some(net.parameter),
            NetworkKind::Divisor => a1_max = Some(net.parameter),
            NetworkKind::Sigma => n_max = Some(net.parameter),
        }
        let nodes = net
            .nodes
            .iter()
            .enumerate()
            .map(|(id, node)| NodeEntry {
                id,
                label: label(net.kind, &node.terms, node.value),
                value: node.value,
                terms: node.terms.clone(),
            })
            .collect();
        let mut edges: Vec<EdgeEntry> = net
            .edges
            .iter()
            .map(|e| EdgeEntry {
                from: e.from,
                to: e.to,
                order: e.order,
                first_jump: e.first_jump,
            })
            .collect();
        edges.sort_by_key(|e| (e.from, e.to));
        NetworkDocument {
            kind: net.kind.as_str().to_string(),
            n,
            a1_max,
            n_max,
            nodes,
            edges,
        }
    }

    pub fn kind(&self) -> Option<NetworkKind> {
        NetworkKind::parse(&self.kind)
    }

    /// Checks id uniqueness, edge endpoints and the presence of values.
    pub fn validate(&self) -> Result<()> {
        let kind = self
            .kind()
            .ok_or_else(|| Error::InvalidPartition(format!("unknown network kind {}", self.kind)))?;
        for (pos, node) in self.nodes.iter().enumerate() {
            if node.id != pos {
                return Err(Error::InvalidPartition(format!("node ids not dense at {pos}")));
            }
            if node.value.is_some() != (kind != NetworkKind::Partition) {
                return Err(Error::InvalidPartition(format!("node {pos} value presence")));
            }
        }
        for e in &self.edges {
            if e.from >= self.nodes.len() || e.to >= self.nodes.len() {
                return Err(Error::InvalidPartition(format!("dangling edge {}->{}", e.from, e.to)));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("network documents always serialize")
    }

    /// Sum of values over nodes whose terms add up to `n`.
    pub fn slice_sum(&self, n: u64) -> i64 {
        self.nodes
            .iter()
            .filter(|node| node.terms.iter().sum::<u64>() == n)
            .filter_map(|node| node.value)
            .sum()
    }
}

fn label(kind: NetworkKind, terms: &[u64], value: Option<i64>) -> String {
    let base = format_terms(terms);
    match (kind, value) {
        (NetworkKind::Partition, _) | (_, None) => base,
        (NetworkKind::PartitionAnnotated, Some(v)) => format!("{base} [{v}]"),
        (_, Some(v)) => format!("{base} ({v})"),
    }
}

pub fn to_json(net: &PartitionNetwork) -> String {
    NetworkDocument::from_network(net).to_json()
}

pub fn from_json(text: &str) -> std::result::Result<NetworkDocument, serde_json::Error> {
    serde_json::from_str(text)
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot(net: &PartitionNetwork) -> String {
    let doc = NetworkDocument::from_network(net);
    let name = doc.kind.replace('-', "_");
    let mut out = String::new();
    let _ = writeln!(out, "digraph {name}_network {{");
    let _ = writeln!(out, "  node [shape=box];");
    for node in &doc.nodes {
        let _ = write!(out, "  n{} [label=\"{}\"", node.id, escape(&node.label));
        if let Some(v) = node.value {
            let _ = write!(out, ", value={v}");
        }
        let _ = writeln!(out, "];");
    }
    for e in &doc.edges {
        let _ = writeln!(
            out,
            "  n{} -> n{} [order={}, firstJump={}];",
            e.from, e.to, e.order, e.first_jump
        );
    }
    out.push_str("}\n");
    out
}

/// One node per line: `id<TAB>label`.
pub fn to_text(net: &PartitionNetwork) -> String {
    let doc = NetworkDocument::from_network(net);
    let mut out = String::new();
    for node in &doc.nodes {
        let _ = writeln!(out, "{}\t{}", node.id, node.label);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::build_divisor_network;
    use crate::enumeration::build_partition_network;
    use crate::network::Budget;
    use crate::sigma::build_sigma_network;

    #[test]
    fn single_node_partition_json() {
        let net = build_partition_network(1, false, Budget::default()).unwrap();
        assert_eq!(
            to_json(&net),
            r#"{"kind":"partition","n":1,"nodes":[{"id":0,"label":"1","terms":[1]}],"edges":[]}"#
        );
        assert_eq!(to_dot(&net), "digraph partition_network {\n  node [shape=box];\n  n0 [label=\"1\"];\n}\n");
    }

    #[test]
    fn divisor_labels() {
        let net = build_divisor_network(2, Budget::default()).unwrap();
        let doc = NetworkDocument::from_network(&net);
        let labels: Vec<&str> = doc.nodes.iter().map(|n| n.label.as_str()).collect();
        assert_eq!(labels, ["1 (1)", "2 (2)", "2 1 (-1)"]);
        assert_eq!(doc.a1_max, Some(2));
        assert!(to_dot(&net).contains("n1 -> n2 [order=1, firstJump=true];"));
    }

    #[test]
    fn round_trip_and_validation() {
        for net in [
            build_partition_network(9, true, Budget::default()).unwrap(),
            build_divisor_network(5, Budget::default()).unwrap(),
            build_sigma_network(8, Budget::default()).unwrap(),
        ] {
            let text = to_json(&net);
            let doc = from_json(&text).unwrap();
            assert_eq!(doc, NetworkDocument::from_network(&net));
            doc.validate().unwrap();
            assert_eq!(serde_json::to_string(&doc).unwrap(), text);
        }
    }

    #[test]
    fn sigma_slices_from_json() {
        let net = build_sigma_network(3, Budget::default()).unwrap();
        let doc = from_json(&to_json(&net)).unwrap();
        assert_eq!([1, 2, 3].map(|n| doc.slice_sum(n)), [1, 3, 4]);
    }
}
