use rand::Rng;
use serde::{Deserialize, Serialize};

use super::maximal::{run_on, PivotRule};
use crate::error::Result;
use crate::graph::Graph;
use crate::oracle::{GraphOracle, QueryLedger};
use crate::quantum::CostModelConfig;
use crate::VertexSet;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Coloring {
    /// `colors[v - 1]` is the colour (1-based) of vertex `v`.
    pub colors: Vec<usize>,
    /// Number of colours used.
    pub k: usize,
    /// Colour classes in colour order.
    pub classes: Vec<VertexSet>,
    /// Charged cost of each round's maximal independent set.
    pub round_costs: Vec<u64>,
    pub ledger: QueryLedger,
    pub failed_searches: usize,
}

impl Coloring {
    pub fn color_of(&self, v: usize) -> usize {
        self.colors[v - 1]
    }

    /// Endpoints of every edge differ in colour.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && g.edges().all(|(u, v)| self.color_of(u) != self.color_of(v))
    }
}

/// Colours the graph by peeling off maximal independent sets: round `i` colours
/// a maximal independent set of the uncoloured vertices with colour `i`.
pub fn greedy_coloring<R: Rng + ?Sized>(oracle: &mut GraphOracle<'_>, cfg: &CostModelConfig, rng: &mut R) -> Result<Coloring> {
    cfg.validate()?;
    let n = oracle.n();
    let start = *oracle.ledger();
    let mut uncolored = vec![true; n + 1];
    uncolored[0] = false;
    let mut colors = vec![0usize; n];
    let mut classes = Vec::new();
    let mut round_costs = Vec::new();
    let mut failed_searches = 0;

    while uncolored.iter().any(|&u| u) {
        let before = oracle.ledger().charged_cost;
        let mut alive = uncolored.clone();
        let round = run_on(oracle, &mut alive, cfg, PivotRule::LowestIndex, rng);
        round_costs.push(oracle.ledger().charged_cost - before);
        failed_searches += round.failed_searches;
        let color = classes.len() + 1;
        for &v in &round.order {
            colors[v - 1] = color;
            uncolored[v] = false;
        }
        classes.push(VertexSet::from(round.order));
    }

    Ok(Coloring {
        colors,
        k: classes.len(),
        classes,
        round_costs,
        ledger: oracle.ledger().since(&start),
        failed_searches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_path, gen_random};
    use crate::oracle::AccessModel;
    use crate::rng::seeded;

    fn color(g: &Graph, model: AccessModel) -> Coloring {
        let mut o = GraphOracle::new(g, model);
        greedy_coloring(&mut o, &CostModelConfig::default(), &mut seeded(0)).unwrap()
    }

    #[test]
    fn examples() {
        let c = color(&gen_path(3).unwrap(), AccessModel::Matrix);
        assert_eq!(c.k, 2);
        assert_eq!(c.classes, vec![VertexSet::from([1, 3]), VertexSet::from([2])]);
        assert_eq!(c.colors, vec![1, 2, 1]);
        assert_eq!(color(&gen_complete(3).unwrap(), AccessModel::List).k, 3);
        assert_eq!(color(&Graph::empty(5), AccessModel::Matrix).k, 1);
        assert_eq!(color(&Graph::empty(0), AccessModel::Matrix).k, 0);
    }

    #[test]
    fn proper_and_bounded_by_max_degree() {
        for seed in 0..200 {
            let g = gen_random(2 + seed as usize % 40, [0.1, 0.5, 0.9][seed as usize % 3], seed).unwrap();
            for model in [AccessModel::Matrix, AccessModel::List] {
                let c = color(&g, model);
                assert!(c.is_proper(&g));
                assert!(c.k <= g.max_degree() + 1);
                assert_eq!(c.round_costs.iter().sum::<u64>(), c.ledger.charged_cost);
            }
        }
    }
}
