use std::collections::VecDeque;

use super::Graph;
use crate::VertexSet;

/// A proper 2-colouring: every edge has one endpoint on each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

/// BFS 2-colouring. Returns the colouring when `g` has no odd cycle.
/// Each component's smallest vertex goes to `left`.
pub fn is_bipartite(g: &Graph) -> (bool, Option<Bipartition>) {
    match bipartition(g) {
        Some(b) => (true, Some(b)),
        None => (false, None),
    }
}

pub(crate) fn bipartition(g: &Graph) -> Option<Bipartition> {
    let mut side: Vec<Option<bool>> = vec![None; g.n() + 1];
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("queued vertices are coloured");
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let left = g.vertices().filter(|&v| side[v] == Some(false)).collect();
    let right = g.vertices().filter(|&v| side[v] == Some(true)).collect();
    Some(Bipartition { left, right })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_cycle;

    fn check(g: &Graph, b: &Bipartition) {
        for (u, v) in g.edges() {
            assert_ne!(b.left.contains(u), b.left.contains(v));
        }
        assert_eq!(b.left.len() + b.right.len(), g.n());
    }

    #[test]
    fn examples() {
        let c4 = gen_cycle(4).unwrap();
        let (ok, b) = is_bipartite(&c4);
        assert!(ok);
        check(&c4, &b.unwrap());
        assert_eq!(is_bipartite(&gen_cycle(5).unwrap()), (false, None));
        assert!(is_bipartite(&Graph::empty(1)).0);
        assert!(is_bipartite(&Graph::empty(0)).0);
    }

    /// Odd-cycle search by enumerating closed walks is overkill; instead use the
    /// characterisation "some vertex subset induces an odd cycle" via brute force
    /// over 2-colourings, which is independent of the BFS.
    fn brute_two_colourable(g: &Graph) -> bool {
        let n = g.n();
        (0u32..1 << n).any(|mask| g.edges().all(|(u, v)| (mask >> (u - 1) & 1) != (mask >> (v - 1) & 1)))
    }

    #[test]
    fn agrees_with_brute_force_on_all_labelled_graphs_up_to_six() {
        for n in 1..=6usize {
            let pairs: Vec<(usize, usize)> =
                (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
            for code in 0u32..1 << pairs.len() {
                let edges = pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &e)| e);
                let g = Graph::from_edges(n, edges).unwrap();
                let (ok, b) = is_bipartite(&g);
                assert_eq!(ok, brute_two_colourable(&g), "{g:?}");
                if let Some(b) = b {
                    check(&g, &b);
                }
            }
        }
    }
}
