//! Integer partitions through jumps.
//!
//! - [`jump`]: jumps of order `r` on partitions kept in jump form
//! - [`enumeration`]: every partition of `n` exactly once, as a stream or a tree
//! - [`counting`]: exact `p(n)` from the first-jump decomposition
//! - [`divisor`]: distinct-part jump sets and the signed trace equal to `d(n)`
//! - [`evector`]: the E-vector recurrence whose final block lists `d(n), ..., d(1)`
//! - [`sigma`]: `sigma1(n)` as a weighted signed sum over distinct-part partitions
//! - [`oracles`]: classical reference implementations for differential tests
//! - [`export`]: DOT and JSON output of the networks
//! - [`verify`]: differential sweep of every method against the oracles
//!
//! With the default `parallel` feature, traces, closed-form E-vectors and
//! verification sweeps fan out with rayon; without it everything runs on
//! the calling thread.

pub mod counting;
pub mod divisor;
pub mod enumeration;
pub mod error;
pub mod evector;
pub mod export;
pub mod jump;
pub mod network;
pub mod oracles;
pub mod sigma;
pub mod verify;

pub use error::{Error, Result};
pub use jump::{JumpOrder, Partition, Predecessor};
pub use network::{Budget, NetworkKind, PartitionNetwork};
