//! Independent-set algorithms executed under a quantum query cost model.
//!
//! Algorithms run classically against a [`GraphOracle`] that counts every
//! adjacency-matrix or adjacency-list probe, while the searches they perform
//! charge the query cost a Grover-style quantum search would incur. Brute-force
//! oracles in [`brute`] check every result at small scale.

mod bits;
pub mod adversary;
pub mod algorithms;
pub mod bench;
pub mod brute;
pub mod error;
pub mod graph;
pub mod oct;
pub mod oracle;
pub mod quantum;
pub mod rng;
pub mod verify;
mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use oracle::{AccessModel, GraphOracle, QueryLedger};
pub use quantum::CostModelConfig;
pub use vertex_set::VertexSet;
