//! Maximum independent set by a randomized branching trial boosted with
//! amplitude amplification.
//!
//! A trial repeatedly takes a maximum-degree vertex `v` and flips a fair coin:
//! tails discards `v`, heads keeps it and discards its closed neighbourhood.
//! Once the remaining graph has maximum degree at most two it is a disjoint
//! union of paths and cycles, which are solved exactly.

use std::collections::HashMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bits;
use crate::brute::OracleBudget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::quantum::{amplify_best, CostModelConfig};
use crate::VertexSet;

/// Largest graph [`exact_success_prob`] accepts.
pub const EXACT_SUCCESS_MAX_N: usize = 16;

/// Maximum independent set of the path `1..=n`: the odd positions.
pub fn mis_path(n: usize) -> Result<(usize, VertexSet)> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let s: VertexSet = (1..=n).step_by(2).collect();
    Ok((s.len(), s))
}

/// Maximum independent set of the cycle `1..=n`: odd positions up to `n - 1`,
/// so `1` and `n` are never both taken.
pub fn mis_cycle(n: usize) -> Result<(usize, VertexSet)> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let s: VertexSet = (1..n).step_by(2).collect();
    Ok((s.len(), s))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Path,
    Cycle,
}

/// A component of a max-degree-2 graph, listed in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub kind: ComponentKind,
    pub vertices: Vec<usize>,
}

impl Component {
    /// Maximum independent set of this component in the parent's labels.
    pub fn mis(&self) -> VertexSet {
        let positions = match self.kind {
            ComponentKind::Path => mis_path(self.vertices.len()),
            ComponentKind::Cycle => mis_cycle(self.vertices.len()),
        }
        .expect("components are non-empty and cycles have length >= 3")
        .1;
        positions.iter().map(|p| self.vertices[p - 1]).collect()
    }
}

/// Splits a graph with maximum degree at most 2 into paths and cycles, ordered
/// by smallest vertex. Paths start at their lower-indexed endpoint; cycles start
/// at their smallest vertex and step to its smaller neighbour first. Isolated
/// vertices are one-vertex paths.
pub fn decompose_deg2(g: &Graph) -> Result<Vec<Component>> {
    let delta = g.max_degree();
    if delta > 2 {
        return Err(Error::DegreeTooLarge(delta));
    }
    Ok(decompose_masked(g, &bits::full(g.n())))
}

fn decompose_masked(g: &Graph, alive: &[u64]) -> Vec<Component> {
    let live_neighbors = |v: usize| -> Vec<usize> {
        let row: Vec<u64> = g.row(v).iter().zip(alive).map(|(a, b)| a & b).collect();
        bits::ones(&row).collect()
    };
    let mut visited = vec![false; g.n() + 1];
    let mut out = Vec::new();

    let walk = |start: usize, first: Option<usize>, visited: &mut Vec<bool>| -> Vec<usize> {
        let mut seq = vec![start];
        visited[start] = true;
        let mut next = first;
        while let Some(cur) = next {
            if visited[cur] {
                break;
            }
            visited[cur] = true;
            seq.push(cur);
            next = live_neighbors(cur).into_iter().find(|&w| !visited[w]);
        }
        seq
    };

    for v in bits::ones(alive) {
        let nb = live_neighbors(v);
        if !visited[v] && nb.len() <= 1 {
            let seq = walk(v, nb.first().copied(), &mut visited);
            out.push(Component { kind: ComponentKind::Path, vertices: seq });
        }
    }
    for v in bits::ones(alive) {
        if !visited[v] {
            let first = live_neighbors(v).first().copied();
            let seq = walk(v, first, &mut visited);
            out.push(Component { kind: ComponentKind::Cycle, vertices: seq });
        }
    }
    out.sort_by_key(|c| c.vertices.iter().copied().min());
    out
}

/// One run of the randomized branching procedure with fair coins drawn from `rng`.
pub fn max_is_trial<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> VertexSet {
    match TrialKernel::new(g) {
        Some(k) => k.set(k.run(rng.random())),
        None => max_is_trial_with_coins(g, || rng.random::<bool>()),
    }
}

/// The branching procedure on graphs with at most 64 vertices, one machine word
/// per adjacency row. Coin `i` is bit `i` of the `coins` word.
#[derive(Clone, Debug)]
pub struct TrialKernel {
    adj: Vec<u64>,
}

impl TrialKernel {
    pub fn new(g: &Graph) -> Option<Self> {
        (g.n() <= 64).then(|| Self { adj: g.vertices().map(|v| g.row(v).first().copied().unwrap_or(0)).collect() })
    }

    fn all(&self) -> u64 {
        match self.adj.len() {
            0 => 0,
            n => u64::MAX >> (64 - n),
        }
    }

    /// Chosen vertices as a bitmask (bit `v − 1` for vertex `v`).
    pub fn run(&self, coins: u64) -> u64 {
        let mut alive = self.all();
        let mut chosen = 0u64;
        let mut flip = 0;
        loop {
            let mut best = (2, usize::MAX);
            let mut rest = alive;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let d = (self.adj[b] & alive).count_ones();
                if d > best.0 {
                    best = (d, b);
                }
            }
            if best.1 == usize::MAX {
                return chosen | self.low_degree_mis(alive);
            }
            let b = best.1;
            if coins >> flip & 1 == 1 {
                chosen |= 1 << b;
                alive &= !self.adj[b];
            }
            alive &= !(1 << b);
            flip += 1;
        }
    }

    /// Size of the set [`TrialKernel::run`] returns.
    pub fn run_size(&self, coins: u64) -> usize {
        self.run(coins).count_ones() as usize
    }

    pub fn set(&self, mask: u64) -> VertexSet {
        (0..self.adj.len()).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
    }

    /// Same traversal as [`decompose_deg2`]: odd positions of each path from its
    /// lower endpoint, and of each cycle from its lowest vertex towards the
    /// smaller neighbour, skipping the last position of the cycle.
    fn low_degree_mis(&self, alive: u64) -> u64 {
        let mut out = 0u64;
        let mut seen = 0u64;
        let walk = |start: usize, seen: &mut u64| -> (u64, usize, usize) {
            let (mut picked, mut len, mut last) = (0u64, 0usize, start);
            let mut cur = Some(start);
            while let Some(b) = cur {
                *seen |= 1 << b;
                if len % 2 == 0 {
                    picked |= 1 << b;
                }
                len += 1;
                last = b;
                let next = self.adj[b] & alive & !*seen;
                cur = (next != 0).then(|| next.trailing_zeros() as usize);
            }
            (picked, len, last)
        };
        let mut rest = alive;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if seen >> b & 1 == 0 && (self.adj[b] & alive).count_ones() <= 1 {
                out |= walk(b, &mut seen).0;
            }
        }
        let mut rest = alive & !seen;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if seen >> b & 1 == 0 {
                let (picked, len, last) = walk(b, &mut seen);
                out |= if len % 2 == 1 { picked & !(1 << last) } else { picked };
            }
        }
        out
    }
}

/// One run of the branching procedure; `coin()` returning `true` keeps the
/// pivot (heads), `false` discards it.
pub fn max_is_trial_with_coins<C: FnMut() -> bool>(g: &Graph, mut coin: C) -> VertexSet {
    let mut alive = bits::full(g.n());
    let mut chosen = Vec::new();
    while !bits::is_empty(&alive) {
        let Some(v) = pivot(g, &alive) else {
            chosen.extend(decompose_masked(g, &alive).iter().flat_map(|c| c.mis().into_vec()));
            break;
        };
        if coin() {
            chosen.push(v);
            for (a, r) in alive.iter_mut().zip(g.row(v)) {
                *a &= !r;
            }
        }
        bits::clear(&mut alive, v);
    }
    VertexSet::from(chosen)
}

/// Lowest-indexed vertex of maximum degree in the subgraph induced by `alive`,
/// or `None` when that maximum degree is at most 2.
fn pivot(g: &Graph, alive: &[u64]) -> Option<usize> {
    let mut best = (2, None);
    for v in bits::ones(alive) {
        let d = bits::count_and(g.row(v), alive);
        if d > best.0 {
            best = (d, Some(v));
        }
    }
    best.1
}

/// Exact probability that [`max_is_trial`] returns a maximum independent set.
///
/// With `v` the pivot the trial would pick in `F`,
/// `s(F) = ½·[α(F−v) = α(F)]·s(F−v) + ½·[α(F−N[v]) + 1 = α(F)]·s(F−N[v])`,
/// and `s(F) = 1` once `Δ(F) ≤ 2`. Independence numbers come from the
/// brute-force oracle; both `s` and `α` are memoized by surviving-vertex mask.
pub fn exact_success_prob(g: &Graph) -> Result<f64> {
    if g.n() > EXACT_SUCCESS_MAX_N {
        return Err(Error::BudgetExceeded { what: "exact_success_prob", limit: EXACT_SUCCESS_MAX_N, n: g.n() });
    }
    let mut memo = SuccessMemo { g, budget: OracleBudget::default(), alpha: HashMap::new(), success: HashMap::new() };
    memo.success(bits::full(g.n()))
}

struct SuccessMemo<'g> {
    g: &'g Graph,
    budget: OracleBudget,
    alpha: HashMap<Vec<u64>, usize>,
    success: HashMap<Vec<u64>, f64>,
}

impl SuccessMemo<'_> {
    fn alpha(&mut self, alive: &[u64]) -> Result<usize> {
        if let Some(&a) = self.alpha.get(alive) {
            return Ok(a);
        }
        let sub = self.g.induced(bits::ones(alive).collect());
        let a = self.budget.alpha(&sub.graph)?.0;
        self.alpha.insert(alive.to_vec(), a);
        Ok(a)
    }

    fn success(&mut self, alive: Vec<u64>) -> Result<f64> {
        if let Some(&s) = self.success.get(&alive) {
            return Ok(s);
        }
        let s = match pivot(self.g, &alive) {
            None => 1.0,
            Some(v) => {
                let whole = self.alpha(&alive)?;
                let mut without = alive.clone();
                bits::clear(&mut without, v);
                let mut with = alive.clone();
                for (a, r) in with.iter_mut().zip(self.g.row(v)) {
                    *a &= !r;
                }
                bits::clear(&mut with, v);

                let mut s = 0.0;
                if self.alpha(&without)? == whole {
                    s += 0.5 * self.success(without)?;
                }
                if self.alpha(&with)? + 1 == whole {
                    s += 0.5 * self.success(with)?;
                }
                s
            }
        };
        self.success.insert(alive, s);
        Ok(s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MaximumIsResult {
    pub set: VertexSet,
    pub trials: u64,
    pub charged_cost: u64,
    /// Whether `set` attains the independence number; only known after
    /// [`MaximumIsResult::check_optimality`].
    pub optimal: Option<bool>,
}

impl MaximumIsResult {
    pub fn check_optimality(&mut self, g: &Graph) -> Result<bool> {
        let ok = OracleBudget::default().alpha(g)?.0 == self.set.len();
        self.optimal = Some(ok);
        Ok(ok)
    }
}

/// Boosts [`max_is_trial`] (success probability at least `ε = 2^{-2n/5}`) with a
/// budget of `⌈c_a/√ε⌉` trials, keeping the largest set found. The charge is the
/// number of trials.
pub fn maximum_is<R: Rng + ?Sized>(g: &Graph, cfg: &CostModelConfig, rng: &mut R) -> Result<MaximumIsResult> {
    cfg.validate()?;
    let epsilon = 0.5f64.powf(2.0 * g.n() as f64 / 5.0);
    let out = amplify_best(|r: &mut R| max_is_trial(g, r), VertexSet::len, epsilon, cfg, rng)?;
    Ok(MaximumIsResult {
        set: out.result.unwrap_or_default(),
        trials: out.trials,
        charged_cost: out.trials,
        optimal: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute::{brute_alpha, is_independent};
    use crate::graph::{gen_complete, gen_cycle, gen_path, gen_random, petersen};
    use crate::rng::seeded;

    fn star3() -> Graph {
        Graph::from_edges(4, [(1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn path_and_cycle_sets() {
        assert_eq!(mis_path(5).unwrap(), (3, VertexSet::from([1, 3, 5])));
        assert_eq!(mis_path(1).unwrap(), (1, VertexSet::from([1])));
        assert_eq!(mis_cycle(6).unwrap(), (3, VertexSet::from([1, 3, 5])));
        assert_eq!(mis_cycle(5).unwrap(), (2, VertexSet::from([1, 3])));
        assert!(mis_cycle(2).is_err());
        assert!(mis_path(0).is_err());
        for n in 1..=12 {
            let (k, s) = mis_path(n).unwrap();
            assert_eq!(k, n.div_ceil(2));
            assert!(is_independent(&gen_path(n).unwrap(), &s));
            if n >= 3 {
                let (k, s) = mis_cycle(n).unwrap();
                assert_eq!(k, n / 2);
                assert!(is_independent(&gen_cycle(n).unwrap(), &s));
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let c6 = decompose_deg2(&gen_cycle(6).unwrap()).unwrap();
        assert_eq!(c6, vec![Component { kind: ComponentKind::Cycle, vertices: vec![1, 2, 3, 4, 5, 6] }]);

        let g = Graph::from_edges(6, [(1, 2), (2, 3), (3, 4), (5, 6)]).unwrap();
        let comps = decompose_deg2(&g).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.kind == ComponentKind::Path));
        assert_eq!(comps[0].vertices, vec![1, 2, 3, 4]);

        let iso = decompose_deg2(&Graph::empty(3)).unwrap();
        assert_eq!(iso.len(), 3);
        assert!(iso.iter().all(|c| c.kind == ComponentKind::Path && c.vertices.len() == 1));

        assert_eq!(decompose_deg2(&star3()), Err(Error::DegreeTooLarge(3)));

        // Cycle traversal starts at the smallest vertex and goes to its smaller neighbour.
        let tri = Graph::from_edges(5, [(2, 5), (5, 4), (4, 2)]).unwrap();
        let comps = decompose_deg2(&tri).unwrap();
        assert_eq!(comps[1], Component { kind: ComponentKind::Cycle, vertices: vec![2, 4, 5] });
    }

    #[test]
    fn low_degree_graphs_need_no_coins() {
        for seed in 0..200 {
            let g = gen_random(12, 0.12, seed).unwrap();
            if g.max_degree() > 2 {
                continue;
            }
            let s = max_is_trial_with_coins(&g, || panic!("no coin flips below degree 3"));
            assert!(is_independent(&g, &s));
            let expected: usize = decompose_deg2(&g)
                .unwrap()
                .iter()
                .map(|c| match c.kind {
                    ComponentKind::Path => c.vertices.len().div_ceil(2),
                    ComponentKind::Cycle => c.vertices.len() / 2,
                })
                .sum();
            assert_eq!(s.len(), expected);
            assert_eq!(s.len(), brute_alpha(&g).unwrap().0);
        }
    }

    #[test]
    fn trial_hand_traces() {
        let k4 = gen_complete(4).unwrap();
        assert_eq!(max_is_trial_with_coins(&k4, || true).len(), 1);
        assert_eq!(max_is_trial_with_coins(&k4, || false).len(), 1);
        assert_eq!(max_is_trial_with_coins(&star3(), || false), VertexSet::from([2, 3, 4]));
        assert_eq!(max_is_trial_with_coins(&star3(), || true), VertexSet::from([1]));
    }

    #[test]
    fn kernel_matches_general_procedure() {
        for seed in 0..300u64 {
            let g = gen_random(1 + seed as usize % 40, [0.05, 0.15, 0.4][seed as usize % 3], seed).unwrap();
            let k = TrialKernel::new(&g).unwrap();
            for coins in [0u64, u64::MAX, seed.wrapping_mul(0x9e37_79b9_7f4a_7c15), !seed] {
                let mut i = 0;
                let general = max_is_trial_with_coins(&g, || {
                    i += 1;
                    coins >> (i - 1) & 1 == 1
                });
                assert_eq!(k.set(k.run(coins)), general, "seed {seed}");
            }
        }
        assert!(TrialKernel::new(&Graph::empty(65)).is_none());
        assert_eq!(TrialKernel::new(&Graph::empty(0)).unwrap().run(0), 0);
    }

    #[test]
    fn trials_are_independent_sets() {
        let mut rng = seeded(2);
        for seed in 0..200 {
            let g = gen_random(5 + seed as usize % 60, 0.3, seed).unwrap();
            assert!(is_independent(&g, &max_is_trial(&g, &mut rng)));
        }
    }

    #[test]
    fn exact_success_examples() {
        assert_eq!(exact_success_prob(&gen_cycle(7).unwrap()).unwrap(), 1.0);
        assert_eq!(exact_success_prob(&gen_complete(4).unwrap()).unwrap(), 1.0);
        assert_eq!(exact_success_prob(&star3()).unwrap(), 0.5);
        assert!(exact_success_prob(&Graph::empty(EXACT_SUCCESS_MAX_N + 1)).is_err());
    }

    #[test]
    fn maximum_examples() {
        let cfg = CostModelConfig::default();
        let mut rng = seeded(5);
        assert_eq!(maximum_is(&gen_cycle(5).unwrap(), &cfg, &mut rng).unwrap().set.len(), 2);
        assert_eq!(maximum_is(&gen_path(7).unwrap(), &cfg, &mut rng).unwrap().set.len(), 4);
        let mut r = maximum_is(&petersen(), &cfg, &mut rng).unwrap();
        assert_eq!(r.trials, 4);
        assert_eq!(r.charged_cost, 4);
        assert!(is_independent(&petersen(), &r.set));
        assert_eq!(r.check_optimality(&petersen()).unwrap(), r.set.len() == 4);
    }
}
