use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::oracle::{AccessModel, GraphOracle, QueryLedger};
use crate::quantum::{search_all, CostModelConfig};
use crate::VertexSet;

/// How the next vertex is chosen among the survivors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PivotRule {
    #[default]
    LowestIndex,
    Random,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MaximalIsResult {
    pub set: VertexSet,
    /// Probes and charge accumulated by this run.
    pub ledger: QueryLedger,
    /// Vertices in the order they were added.
    pub order: Vec<usize>,
    /// Neighbour searches that still failed after every permitted repeat.
    pub failed_searches: usize,
}

/// Greedy maximal independent set: take a surviving vertex, find all of its
/// surviving neighbours with one all-solutions search, delete them together
/// with the vertex, repeat until nothing survives.
pub fn maximal_is<R: Rng + ?Sized>(oracle: &mut GraphOracle<'_>, cfg: &CostModelConfig, rng: &mut R) -> Result<MaximalIsResult> {
    maximal_is_with(oracle, cfg, PivotRule::LowestIndex, rng)
}

pub fn maximal_is_with<R: Rng + ?Sized>(
    oracle: &mut GraphOracle<'_>,
    cfg: &CostModelConfig,
    pivot: PivotRule,
    rng: &mut R,
) -> Result<MaximalIsResult> {
    cfg.validate()?;
    let start = *oracle.ledger();
    let mut alive = vec![true; oracle.n() + 1];
    alive[0] = false;
    let round = run_on(oracle, &mut alive, cfg, pivot, rng);
    Ok(MaximalIsResult {
        set: VertexSet::from_vertices(round.order.iter().copied()),
        ledger: oracle.ledger().since(&start),
        order: round.order,
        failed_searches: round.failed_searches,
    })
}

pub(crate) struct Round {
    pub order: Vec<usize>,
    pub failed_searches: usize,
}

/// Runs the algorithm on the subgraph induced by `alive` (indexed by vertex,
/// slot 0 unused), clearing every vertex it deletes.
pub(crate) fn run_on<R: Rng + ?Sized>(
    oracle: &mut GraphOracle<'_>,
    alive: &mut [bool],
    cfg: &CostModelConfig,
    pivot: PivotRule,
    rng: &mut R,
) -> Round {
    let mut order = Vec::new();
    let mut failed_searches = 0;
    while let Some(v) = choose(alive, pivot, rng) {
        order.push(v);
        let found = surviving_neighbors(oracle, v, alive, cfg, rng);
        if found.is_none() {
            failed_searches += 1;
        }
        alive[v] = false;
        for w in found.unwrap_or_default() {
            alive[w] = false;
        }
    }
    Round { order, failed_searches }
}

fn choose<R: Rng + ?Sized>(alive: &[bool], pivot: PivotRule, rng: &mut R) -> Option<usize> {
    match pivot {
        PivotRule::LowestIndex => alive.iter().position(|&a| a),
        PivotRule::Random => {
            let survivors: Vec<usize> = (1..alive.len()).filter(|&v| alive[v]).collect();
            (!survivors.is_empty()).then(|| survivors[rng.random_range(0..survivors.len())])
        }
    }
}

/// All-solutions search for the surviving neighbours of `v`, repeated up to
/// `cfg.confidence_repeats` times on failure. `None` when every attempt failed.
fn surviving_neighbors<R: Rng + ?Sized>(
    oracle: &mut GraphOracle<'_>,
    v: usize,
    alive: &[bool],
    cfg: &CostModelConfig,
    rng: &mut R,
) -> Option<Vec<usize>> {
    match oracle.model() {
        AccessModel::Matrix => {
            // Search space: the other surviving vertices.
            let items: Vec<usize> = (1..alive.len()).filter(|&u| alive[u] && u != v).collect();
            if items.is_empty() {
                return Some(Vec::new());
            }
            for _ in 0..cfg.confidence_repeats {
                let report = search_all(|i| oracle.adjacent(v, items[i - 1]), items.len(), cfg, rng);
                oracle.charge(report.charged_cost);
                if !report.failed {
                    return Some(report.found.into_iter().map(|i| items[i - 1]).collect());
                }
            }
            None
        }
        AccessModel::List => {
            // Search space: positions of v's adjacency list.
            let degree = oracle.degree(v);
            if degree == 0 {
                return Some(Vec::new());
            }
            let mut at = vec![0usize; degree];
            for _ in 0..cfg.confidence_repeats {
                let report = search_all(
                    |j| {
                        let u = oracle.neighbor_at(v, j);
                        at[j - 1] = u;
                        alive[u]
                    },
                    degree,
                    cfg,
                    rng,
                );
                oracle.charge(report.charged_cost);
                if !report.failed {
                    return Some(report.found.into_iter().map(|j| at[j - 1]).collect());
                }
            }
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute::{is_independent, is_maximal_is};
    use crate::graph::{gen_complete, gen_path, gen_random, Graph};
    use crate::rng::seeded;

    fn run(g: &Graph, model: AccessModel) -> MaximalIsResult {
        let mut o = GraphOracle::new(g, model);
        maximal_is(&mut o, &CostModelConfig::default(), &mut seeded(7)).unwrap()
    }

    #[test]
    fn examples() {
        for model in [AccessModel::Matrix, AccessModel::List] {
            let r = run(&gen_path(3).unwrap(), model);
            assert_eq!(r.set, VertexSet::from([1, 3]));
            assert_eq!(r.order, vec![1, 3]);
            assert_eq!(run(&Graph::empty(3), model).set, VertexSet::from([1, 2, 3]));
            assert_eq!(run(&gen_complete(3).unwrap(), model).set, VertexSet::from([1]));
        }
    }

    /// Hand trace on the 4-vertex graph 1-2, 1-3, 3-4 with c = π/4.
    ///
    /// Matrix model: v=1 searches {2,3,4} (3 probes), finds {2,3}:
    /// ⌈c√3⌉ + ⌈c√1.5⌉ + ⌈c√3⌉ = 2 + 1 + 2. Then v=4 has an empty search space.
    /// List model: v=1 probes d(1)=2 and both list entries, finds 2 of 2:
    /// ⌈c√2⌉ + ⌈c√1⌉ + ⌈c√2⌉ = 2 + 1 + 2. Then v=4 probes d(4)=1 and one entry,
    /// finds none alive: ⌈c√1⌉ = 1.
    #[test]
    fn ledger_matches_hand_trace() {
        let g = Graph::from_edges(4, [(1, 2), (1, 3), (3, 4)]).unwrap();
        let m = run(&g, AccessModel::Matrix);
        assert_eq!(m.set, VertexSet::from([1, 4]));
        assert_eq!(
            m.ledger,
            QueryLedger { matrix_queries: 3, list_queries: 0, degree_queries: 0, charged_cost: 5 }
        );
        let l = run(&g, AccessModel::List);
        assert_eq!(l.set, VertexSet::from([1, 4]));
        assert_eq!(
            l.ledger,
            QueryLedger { matrix_queries: 0, list_queries: 3, degree_queries: 2, charged_cost: 6 }
        );
    }

    #[test]
    fn random_graphs_give_maximal_sets() {
        let cfg = CostModelConfig::default();
        let mut rng = seeded(1);
        for seed in 0..300u64 {
            let n = 1 + (seed as usize * 7) % 40;
            let g = gen_random(n, [0.1, 0.5, 0.9][seed as usize % 3], seed).unwrap();
            for model in [AccessModel::Matrix, AccessModel::List] {
                for pivot in [PivotRule::LowestIndex, PivotRule::Random] {
                    let mut o = GraphOracle::new(&g, model);
                    let r = maximal_is_with(&mut o, &cfg, pivot, &mut rng).unwrap();
                    assert!(is_maximal_is(&g, &r.set), "{g:?} {model} {pivot:?}");
                    assert_eq!(r.failed_searches, 0);
                }
            }
        }
    }

    #[test]
    fn failures_are_counted_and_repeats_recover() {
        let g = gen_random(30, 0.3, 5).unwrap();
        let flaky = CostModelConfig { failure_probability: 0.5, ..CostModelConfig::default() };
        let mut rng = seeded(3);
        let mut total_failed = 0;
        for _ in 0..20 {
            let mut o = GraphOracle::new(&g, AccessModel::Matrix);
            let r = maximal_is(&mut o, &flaky, &mut rng).unwrap();
            total_failed += r.failed_searches;
            if r.failed_searches == 0 {
                assert!(is_maximal_is(&g, &r.set));
            }
        }
        assert!(total_failed > 0);

        let repeated = CostModelConfig { confidence_repeats: 40, ..flaky };
        for _ in 0..20 {
            let mut o = GraphOracle::new(&g, AccessModel::List);
            let r = maximal_is(&mut o, &repeated, &mut rng).unwrap();
            assert_eq!(r.failed_searches, 0);
            assert!(is_independent(&g, &r.set));
            assert!(is_maximal_is(&g, &r.set));
        }
    }
}
