//! Brute-force reference implementations used only for verification.
//!
//! Nothing here touches the quantum cost model or shares code paths with the
//! algorithms it checks. Exponential work is refused up front when the input
//! exceeds the configured [`OracleBudget`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_bipartite, Graph};
use crate::VertexSet;

/// Maximum vertex counts accepted by each exponential oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBudget {
    pub alpha: usize,
    pub oct: usize,
    pub clique: usize,
    pub enumeration: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            alpha: 25,
            oct: 15,
            clique: 12,
            enumeration: 16,
        }
    }
}

fn guard(what: &'static str, limit: usize, g: &Graph) -> Result<()> {
    if g.n() > limit {
        Err(Error::BudgetExceeded { what, limit, n: g.n() })
    } else {
        Ok(())
    }
}

/// No two members of `s` are adjacent. Members outside `1..=n` make the set invalid.
pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.within(g.n())
        && s.as_slice()
            .iter()
            .enumerate()
            .all(|(i, &u)| s.as_slice()[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

/// Independent, and every vertex outside `s` has a neighbour in `s`.
pub fn is_maximal_is(g: &Graph, s: &VertexSet) -> bool {
    is_independent(g, s)
        && g.vertices()
            .filter(|&v| !s.contains(v))
            .all(|v| g.neighbors(v).iter().any(|&w| s.contains(w)))
}

impl OracleBudget {
    /// Independence number with a witness: include/exclude branching on the
    /// lowest undecided vertex, pruned when even taking every remaining vertex
    /// cannot beat the best set so far.
    pub fn alpha(&self, g: &Graph) -> Result<(usize, VertexSet)> {
        guard("brute_alpha", self.alpha, g)?;
        fn go(g: &Graph, v: usize, chosen: &mut Vec<usize>, best: &mut Vec<usize>) {
            if chosen.len() + (g.n() + 1 - v) <= best.len() {
                return;
            }
            if v > g.n() {
                *best = chosen.clone();
                return;
            }
            if chosen.iter().all(|&u| !g.has_edge(u, v)) {
                chosen.push(v);
                go(g, v + 1, chosen, best);
                chosen.pop();
            }
            go(g, v + 1, chosen, best);
        }
        let mut best = Vec::new();
        go(g, 1, &mut Vec::new(), &mut best);
        Ok((best.len(), VertexSet::from(best)))
    }

    /// Minimum odd cycle transversal: the first subset, by increasing size and
    /// then by bitmask order, whose deletion leaves a bipartite graph.
    pub fn oct(&self, g: &Graph) -> Result<(usize, VertexSet)> {
        guard("brute_oct", self.oct, g)?;
        let n = g.n();
        let mut masks: Vec<u32> = (0u32..1 << n).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        for mask in masks {
            let s: VertexSet = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            let rest = g.delete_vertices(&s)?;
            if is_bipartite(&rest.graph).0 {
                return Ok((s.len(), s));
            }
        }
        unreachable!("deleting every vertex leaves a bipartite graph")
    }

    /// Whether some `k` vertices are pairwise adjacent (backtracking, extending
    /// only by higher-indexed vertices adjacent to everything chosen).
    pub fn has_k_clique(&self, g: &Graph, k: usize) -> Result<bool> {
        guard("brute_has_k_clique", self.clique, g)?;
        fn go(g: &Graph, start: usize, k: usize, chosen: &mut Vec<usize>) -> bool {
            if chosen.len() == k {
                return true;
            }
            for v in start..=g.n() {
                if chosen.iter().all(|&u| g.has_edge(u, v)) {
                    chosen.push(v);
                    if go(g, v + 1, k, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        Ok(go(g, 1, k, &mut Vec::new()))
    }

    /// Clique number by scanning `k` downward.
    pub fn max_clique(&self, g: &Graph) -> Result<usize> {
        guard("brute_max_clique", self.clique, g)?;
        for k in (1..=g.n()).rev() {
            if self.has_k_clique(g, k)? {
                return Ok(k);
            }
        }
        Ok(0)
    }

    /// Every maximal independent set, by filtering all `2^n` subsets.
    pub fn maximal_independent_sets(&self, g: &Graph) -> Result<Vec<VertexSet>> {
        guard("brute maximal-IS filter", self.enumeration, g)?;
        let n = g.n();
        let mut out: Vec<VertexSet> = (0u32..1 << n)
            .map(|mask| (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect::<VertexSet>())
            .filter(|s| is_maximal_is(g, s))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Minimum vertex cover size by scanning subsets in increasing size.
    pub fn min_vertex_cover(&self, g: &Graph) -> Result<usize> {
        guard("brute_min_vertex_cover", self.enumeration, g)?;
        let n = g.n();
        Ok((0u32..1 << n)
            .filter(|&mask| g.edges().all(|(u, v)| (mask >> (u - 1) | mask >> (v - 1)) & 1 == 1))
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap_or(n))
    }
}

pub fn brute_alpha(g: &Graph) -> Result<(usize, VertexSet)> {
    OracleBudget::default().alpha(g)
}

pub fn brute_oct(g: &Graph) -> Result<(usize, VertexSet)> {
    OracleBudget::default().oct(g)
}

pub fn brute_has_k_clique(g: &Graph, k: usize) -> Result<bool> {
    OracleBudget::default().has_k_clique(g, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_cycle, gen_path, gen_random, petersen};

    #[test]
    fn independence_checks() {
        let p3 = gen_path(3).unwrap();
        assert!(is_independent(&p3, &VertexSet::from([1, 3])));
        assert!(is_maximal_is(&p3, &VertexSet::from([1, 3])));
        assert!(is_independent(&p3, &VertexSet::from([1])));
        assert!(!is_maximal_is(&p3, &VertexSet::from([1])));
        let k3 = gen_complete(3).unwrap();
        assert!(!is_independent(&k3, &VertexSet::from([1, 2])));
        assert!(!is_independent(&k3, &VertexSet::from([4])));
        assert!(is_maximal_is(&Graph::empty(0), &VertexSet::new()));
    }

    #[test]
    fn alpha_examples() {
        let (a, w) = brute_alpha(&gen_cycle(5).unwrap()).unwrap();
        assert_eq!(a, 2);
        assert!(is_independent(&gen_cycle(5).unwrap(), &w));
        assert_eq!(brute_alpha(&gen_complete(6).unwrap()).unwrap().0, 1);
        assert_eq!(brute_alpha(&Graph::empty(7)).unwrap().0, 7);
        assert_eq!(brute_alpha(&Graph::empty(0)).unwrap().0, 0);
        assert_eq!(brute_alpha(&petersen()).unwrap().0, 4);
        assert!(brute_alpha(&Graph::empty(26)).is_err());
    }

    #[test]
    fn oct_examples() {
        assert_eq!(brute_oct(&gen_cycle(6).unwrap()).unwrap().0, 0);
        assert_eq!(brute_oct(&gen_cycle(5).unwrap()).unwrap().0, 1);
        let triangles = Graph::from_edges(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        let (size, witness) = brute_oct(&triangles).unwrap();
        assert_eq!(size, 2);
        assert!(is_bipartite(&triangles.delete_vertices(&witness).unwrap().graph).0);
        assert_eq!(brute_oct(&gen_complete(4).unwrap()).unwrap().0, 2);
        assert!(brute_oct(&Graph::empty(16)).is_err());
    }

    #[test]
    fn clique_examples() {
        assert!(brute_has_k_clique(&gen_complete(5).unwrap(), 5).unwrap());
        assert!(!brute_has_k_clique(&gen_cycle(5).unwrap(), 3).unwrap());
        assert!(!brute_has_k_clique(&petersen(), 3).unwrap());
        assert!(brute_has_k_clique(&petersen(), 2).unwrap());
        assert!(brute_has_k_clique(&Graph::empty(3), 0).unwrap());
        assert!(brute_has_k_clique(&Graph::empty(13), 1).is_err());
    }

    #[test]
    fn gallai_and_complement_identities() {
        let b = OracleBudget::default();
        for seed in 0..100 {
            let n = 1 + seed as usize % 12;
            let g = gen_random(n, 0.4, seed).unwrap();
            let alpha = b.alpha(&g).unwrap().0;
            assert_eq!(alpha, n - b.min_vertex_cover(&g).unwrap());
            if n <= 10 {
                assert_eq!(alpha, b.max_clique(&g.complement()).unwrap());
            }
        }
    }

    #[test]
    fn maximal_filter_on_p3() {
        let sets = OracleBudget::default().maximal_independent_sets(&gen_path(3).unwrap()).unwrap();
        assert_eq!(sets, vec![VertexSet::from([1, 3]), VertexSet::from([2])]);
    }
}
