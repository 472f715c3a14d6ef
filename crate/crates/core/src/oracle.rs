//! Query access to a graph in the adjacency-matrix (**M**) or adjacency-list
//! (**L**) model. Every probe goes through a [`GraphOracle`] and is counted in
//! its [`QueryLedger`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AccessModel {
    /// Probes `A[u][v]`.
    Matrix,
    /// Probes degrees `d(v)` and list entries `f_v(j)`.
    List,
}

impl fmt::Display for AccessModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AccessModel::Matrix => "matrix",
            AccessModel::List => "list",
        })
    }
}

impl FromStr for AccessModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "matrix" | "M" | "m" => Ok(AccessModel::Matrix),
            "list" | "L" | "l" => Ok(AccessModel::List),
            other => Err(Error::InvalidParameter(format!("unknown access model `{other}`"))),
        }
    }
}

/// Per-run probe counters plus the quantum-model cost charged by searches.
///
/// Counters only grow until [`QueryLedger::reset`] is called.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryLedger {
    pub matrix_queries: u64,
    pub list_queries: u64,
    pub degree_queries: u64,
    /// Quantum query charge, in query units.
    pub charged_cost: u64,
}

impl QueryLedger {
    pub fn probes(&self) -> u64 {
        self.matrix_queries + self.list_queries + self.degree_queries
    }

    /// Total query count in the quantum model: search charges plus the degree
    /// probes made outside searches.
    pub fn model_cost(&self) -> u64 {
        self.charged_cost + self.degree_queries
    }

    pub fn reset(&mut self) {
        *self = Self::default();
    }

    /// Counter-wise difference `self - earlier`, for snapshots taken within one run.
    pub fn since(&self, earlier: &QueryLedger) -> QueryLedger {
        QueryLedger {
            matrix_queries: self.matrix_queries - earlier.matrix_queries,
            list_queries: self.list_queries - earlier.list_queries,
            degree_queries: self.degree_queries - earlier.degree_queries,
            charged_cost: self.charged_cost - earlier.charged_cost,
        }
    }

    pub fn merge(&mut self, other: &QueryLedger) {
        self.matrix_queries += other.matrix_queries;
        self.list_queries += other.list_queries;
        self.degree_queries += other.degree_queries;
        self.charged_cost += other.charged_cost;
    }
}

/// Read-only view of a [`Graph`] in one access model, with its own ledger.
#[derive(Debug)]
pub struct GraphOracle<'g> {
    graph: &'g Graph,
    model: AccessModel,
    ledger: QueryLedger,
}

impl<'g> GraphOracle<'g> {
    pub fn new(graph: &'g Graph, model: AccessModel) -> Self {
        Self {
            graph,
            model,
            ledger: QueryLedger::default(),
        }
    }

    pub fn model(&self) -> AccessModel {
        self.model
    }

    /// Vertex count. The input size is known to every algorithm and is not a query.
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn ledger(&self) -> &QueryLedger {
        &self.ledger
    }

    pub fn reset_ledger(&mut self) {
        self.ledger.reset();
    }

    pub(crate) fn charge(&mut self, cost: u64) {
        self.ledger.charged_cost += cost;
    }

    /// `A[u][v]` in the matrix model.
    pub fn matrix_probe(&mut self, u: usize, v: usize) -> Result<bool> {
        self.require(AccessModel::Matrix, "matrix")?;
        self.graph.check_vertex(u)?;
        self.graph.check_vertex(v)?;
        Ok(self.adjacent(u, v))
    }

    /// `f_v(j)`, the `j`-th (1-based) neighbour of `v` in ascending order.
    pub fn list_probe(&mut self, v: usize, j: usize) -> Result<usize> {
        self.require(AccessModel::List, "list")?;
        self.graph.check_vertex(v)?;
        let degree = self.graph.degree(v);
        if j == 0 || j > degree {
            return Err(Error::ListPosition { vertex: v, position: j, degree });
        }
        Ok(self.neighbor_at(v, j))
    }

    /// `d(v)` in the list model.
    pub fn degree_probe(&mut self, v: usize) -> Result<usize> {
        self.require(AccessModel::List, "degree")?;
        self.graph.check_vertex(v)?;
        Ok(self.degree(v))
    }

    fn require(&self, model: AccessModel, probe: &'static str) -> Result<()> {
        if self.model == model {
            Ok(())
        } else {
            Err(Error::ModelMismatch { probe, model: self.model })
        }
    }

    // Unchecked counted probes for algorithms that already respect the model.

    pub(crate) fn adjacent(&mut self, u: usize, v: usize) -> bool {
        debug_assert_eq!(self.model, AccessModel::Matrix);
        self.ledger.matrix_queries += 1;
        self.graph.has_edge(u, v)
    }

    pub(crate) fn neighbor_at(&mut self, v: usize, j: usize) -> usize {
        debug_assert_eq!(self.model, AccessModel::List);
        self.ledger.list_queries += 1;
        self.graph.neighbors(v)[j - 1]
    }

    pub(crate) fn degree(&mut self, v: usize) -> usize {
        debug_assert_eq!(self.model, AccessModel::List);
        self.ledger.degree_queries += 1;
        self.graph.degree(v)
    }
}
