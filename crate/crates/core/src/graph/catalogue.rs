//! Exhaustive catalogues of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are grown from the catalogue on `n - 1` vertices by
//! attaching a new vertex to every neighbour subset, then deduplicated by a
//! canonical code (colour refinement plus individualisation, minimum adjacency
//! string over all leaves of the search tree).

use std::collections::BTreeMap;
use std::sync::Mutex;

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count the catalogue will generate.
pub const MAX_CATALOGUE_N: usize = 9;

type Adj = [u16; MAX_CATALOGUE_N];

static LEVELS: Mutex<Vec<Vec<Adj>>> = Mutex::new(Vec::new());

/// Every graph on `n` vertices, one representative per isomorphism class,
/// ordered by canonical code.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CATALOGUE_N {
        return Err(Error::BudgetExceeded {
            what: "graph catalogue",
            limit: MAX_CATALOGUE_N,
            n,
        });
    }
    let mut levels = LEVELS.lock().unwrap_or_else(|e| e.into_inner());
    if levels.is_empty() {
        levels.push(vec![[0; MAX_CATALOGUE_N]]);
    }
    while levels.len() <= n {
        let k = levels.len();
        let next = extend(&levels[k - 1], k - 1);
        levels.push(next);
    }
    Ok(levels[n].iter().map(|adj| to_graph(adj, n)).collect())
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}

fn to_graph(adj: &Adj, n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u + 1, v + 1)));
    Graph::from_edges(n, edges).expect("catalogue adjacency is simple")
}

fn extend(prev: &[Adj], n_prev: usize) -> Vec<Adj> {
    let n = n_prev + 1;
    let mut seen: BTreeMap<u64, Adj> = BTreeMap::new();
    for base in prev {
        for subset in 0u16..1 << n_prev {
            let mut adj = *base;
            adj[n_prev] = subset;
            for u in 0..n_prev {
                if subset >> u & 1 == 1 {
                    adj[u] |= 1 << n_prev;
                }
            }
            let (code, order) = canonical(&adj, n);
            seen.entry(code).or_insert_with(|| relabel(&adj, &order));
        }
    }
    seen.into_values().collect()
}

/// Applies `order` (new position -> old vertex) so the stored representative is
/// itself in canonical labelling.
fn relabel(adj: &Adj, order: &[usize]) -> Adj {
    let mut out = [0u16; MAX_CATALOGUE_N];
    for (i, &v) in order.iter().enumerate() {
        for (j, &w) in order.iter().enumerate() {
            if adj[v] >> w & 1 == 1 {
                out[i] |= 1 << j;
            }
        }
    }
    out
}

/// Canonical code of the graph and the vertex order that realises it.
pub(crate) fn canonical(adj: &Adj, n: usize) -> (u64, Vec<usize>) {
    let colors = refine(adj, n, vec![0; n]);
    let mut best: Option<(u64, Vec<usize>)> = None;
    search(adj, n, colors, &mut best);
    best.unwrap_or((0, Vec::new()))
}

fn search(adj: &Adj, n: usize, colors: Vec<u32>, best: &mut Option<(u64, Vec<usize>)>) {
    // First non-singleton cell in colour order.
    let mut counts = vec![0usize; n];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let target = counts.iter().position(|&k| k > 1);
    let Some(target) = target else {
        let mut order = vec![0usize; n];
        for (v, &c) in colors.iter().enumerate() {
            order[c as usize] = v;
        }
        let code = code_of(adj, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    for x in 0..n {
        if colors[x] as usize != target {
            continue;
        }
        let split: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(v, &c)| 2 * c + u32::from(v != x))
            .collect();
        let next = refine(adj, n, renumber(split));
        search(adj, n, next, best);
    }
}

/// Iterated colour refinement to an equitable partition. Colours are ranks of
/// sorted signatures, so the result is isomorphism-invariant.
fn refine(adj: &Adj, n: usize, mut colors: Vec<u32>) -> Vec<u32> {
    colors = renumber(colors);
    loop {
        let classes = colors.iter().max().map_or(0, |&c| c + 1);
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colors[w]).collect();
                nc.sort_unstable();
                (colors[v], nc)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| sorted.binary_search(s).expect("present") as u32)
            .collect();
        if sorted.len() as u32 == classes {
            return next;
        }
        colors = next;
    }
}

fn renumber(colors: Vec<u32>) -> Vec<u32> {
    let mut uniq = colors.clone();
    uniq.sort_unstable();
    uniq.dedup();
    colors
        .iter()
        .map(|c| uniq.binary_search(c).expect("present") as u32)
        .collect()
}

fn code_of(adj: &Adj, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | u64::from(adj[order[i]] >> order[j] & 1);
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequences() {
        // Graphs and connected graphs on n unlabelled vertices, n = 0..=7.
        let all = [1, 1, 2, 4, 11, 34, 156, 1044];
        let connected = [1, 1, 1, 2, 6, 21, 112, 853];
        for n in 0..=7 {
            assert_eq!(all_graphs(n).unwrap().len(), all[n], "n = {n}");
            assert_eq!(connected_graphs(n).unwrap().len(), connected[n], "n = {n}");
        }
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let g = crate::graph::gen_random(8, 0.4, 9).unwrap();
        let mut adj = [0u16; MAX_CATALOGUE_N];
        for (u, v) in g.edges() {
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        }
        let perm = [3usize, 7, 0, 5, 1, 6, 2, 4];
        let mut permuted = [0u16; MAX_CATALOGUE_N];
        for u in 0..8 {
            for v in 0..8 {
                if adj[u] >> v & 1 == 1 {
                    permuted[perm[u]] |= 1 << perm[v];
                }
            }
        }
        assert_eq!(canonical(&adj, 8).0, canonical(&permuted, 8).0);
    }

    #[test]
    fn guard() {
        assert!(all_graphs(MAX_CATALOGUE_N + 1).is_err());
    }
}
