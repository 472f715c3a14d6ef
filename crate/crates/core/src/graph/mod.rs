//! Simple undirected graphs with an adjacency-matrix view and sorted adjacency lists.
//!
//! Vertices are numbered `1..=n`. Both views are built once at construction and
//! never change afterwards, so a [`Graph`] can be shared freely between threads.

mod bipartite;
pub mod catalogue;
mod dimacs;
mod generate;

use std::fmt;

use crate::bits;
use crate::error::{Error, Result};
use crate::VertexSet;

pub use bipartite::{is_bipartite, Bipartition};
pub use dimacs::{load_dimacs, to_dimacs};
pub use generate::{
    gen_complete, gen_cycle, gen_path, gen_random, gen_random_connected, petersen,
};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    words: usize,
    matrix: Vec<u64>,
    lists: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n);
        Self {
            n,
            m: 0,
            words,
            matrix: vec![0; n * words],
            lists: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from 1-based edge pairs. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        g.finish();
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        if !bits::test(self.row(u), v) {
            let w = self.words;
            bits::set(&mut self.matrix[(u - 1) * w..u * w], v);
            bits::set(&mut self.matrix[(v - 1) * w..v * w], u);
            self.m += 1;
        }
    }

    fn finish(&mut self) {
        for v in 1..=self.n {
            self.lists[v - 1] = bits::ones(self.row(v)).collect();
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Matrix entry `A[u][v]`. Panics if either vertex is out of range.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u >= 1 && u <= self.n && v >= 1 && v <= self.n, "vertex out of range");
        bits::test(self.row(u), v)
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.lists[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.lists[v - 1].len()
    }

    pub fn max_degree(&self) -> usize {
        self.lists.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| self.neighbors(u).iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Bitset row of `v` in the adjacency matrix.
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.matrix[(v - 1) * self.words..v * self.words]
    }

    /// The complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut g = Self::empty(self.n);
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if !self.has_edge(u, v) {
                    g.insert_edge(u, v);
                }
            }
        }
        g.finish();
        g
    }

    /// `G_{-S}`: removes `s` and its incident edges, relabelling survivors to
    /// `1..=n-|s|` in increasing original order.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<InducedSubgraph> {
        if let Some(&bad) = s.as_slice().iter().find(|&&v| v == 0 || v > self.n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let keep: Vec<usize> = self.vertices().filter(|v| !s.contains(*v)).collect();
        Ok(self.induced(keep))
    }

    /// The subgraph induced by `keep` (ascending, in range), relabelled contiguously.
    pub(crate) fn induced(&self, keep: Vec<usize>) -> InducedSubgraph {
        let mut index = vec![0usize; self.n + 1];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i + 1;
        }
        let mut g = Self::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for &v in self.neighbors(u) {
                if index[v] > i + 1 {
                    g.insert_edge(i + 1, index[v]);
                }
            }
        }
        g.finish();
        InducedSubgraph { graph: g, original: keep }
    }

    /// Connected components as ascending vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A vertex-deleted (or induced) subgraph together with the map back to the
/// parent's vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the parent label of subgraph vertex `i + 1`.
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    pub fn to_original(&self, v: usize) -> usize {
        self.original[v - 1]
    }

    /// Maps a set of subgraph vertices back to parent labels.
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.to_original(v)).collect()
    }
}
