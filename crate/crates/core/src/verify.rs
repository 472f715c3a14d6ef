//! Oracle-equivalence and invariant suites, each reporting counterexamples
//! rather than failing fast.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::adversary::{audit_flips, Family};
use crate::algorithms::{exact_success_prob, greedy_coloring, k_independent_set, maximal_is, TrialKernel};
use crate::brute::{is_maximal_is, OracleBudget};
use crate::error::{Error, Result};
use crate::graph::catalogue::{all_graphs, connected_graphs};
use crate::graph::{gen_random, gen_random_connected, is_bipartite, load_dimacs, to_dimacs, Graph};
use crate::oct::{enumerate_maximal_is, eppstein_bound, min_oct, InnerSolver};
use crate::oracle::{AccessModel, GraphOracle};
use crate::quantum::{closed_form_success_prob, first_peak, optimal_iterations, AmplitudeState, CostModelConfig};
use crate::rng::{derive_seed, seeded};

const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    Graph,
    SuccessProb,
    Oct,
    Gadgets,
    Eppstein,
    Grover,
}

impl Scope {
    pub const ALL: [Scope; 6] = [Scope::Graph, Scope::SuccessProb, Scope::Oct, Scope::Gadgets, Scope::Eppstein, Scope::Grover];

    pub fn name(self) -> &'static str {
        match self {
            Scope::Graph => "graph",
            Scope::SuccessProb => "success-prob",
            Scope::Oct => "oct",
            Scope::Gadgets => "gadgets",
            Scope::Eppstein => "eppstein",
            Scope::Grover => "grover",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scope::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown scope `{s}`")))
    }
}

/// Size knobs. `None` picks the scope's default.
///
/// | scope        | `nmax` (exhaustive / largest n) | `random_nmax` | `samples` |
/// |--------------|---------------------------------|---------------|-----------|
/// | graph        | 12 (catalogue up to 6)          | –             | 200       |
/// | success-prob | 8 (connected catalogue)         | 14            | 200       |
/// | oct          | 8 (connected catalogue)         | 12            | 500       |
/// | gadgets      | 3                               | –             | –         |
/// | eppstein     | 16                              | –             | 1000      |
/// | grover       | –                               | –             | 200       |
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub nmax: Option<usize>,
    pub random_nmax: Option<usize>,
    pub samples: Option<usize>,
    /// Monte Carlo trials per instance for `success-prob`.
    pub mc_trials: u64,
    /// Largest search space for `grover`.
    pub big_n_max: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { nmax: None, random_nmax: None, samples: None, mc_trials: 10_000, big_n_max: 1024, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub scope: Scope,
    pub cases: u64,
    pub failures: u64,
    /// The first few failing cases.
    pub counterexamples: Vec<String>,
    /// Scope-specific summary statistics.
    pub metrics: BTreeMap<String, f64>,
}

impl CheckReport {
    fn new(scope: Scope) -> Self {
        Self { scope, cases: 0, failures: 0, counterexamples: Vec::new(), metrics: BTreeMap::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, outcome: std::result::Result<(), String>) {
        self.cases += 1;
        if let Err(msg) = outcome {
            self.failures += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(msg);
            }
        }
    }

    fn metric_max(&mut self, key: &str, value: f64) {
        let e = self.metrics.entry(key.to_string()).or_insert(f64::NEG_INFINITY);
        *e = e.max(value);
    }

    fn metric_min(&mut self, key: &str, value: f64) {
        let e = self.metrics.entry(key.to_string()).or_insert(f64::INFINITY);
        *e = e.min(value);
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }
}

pub fn verify_suite(scopes: &[Scope], opts: &VerifyOptions) -> Result<VerifyReport> {
    let checks = scopes
        .iter()
        .map(|&s| match s {
            Scope::Graph => verify_graph(opts),
            Scope::SuccessProb => verify_success_prob(opts),
            Scope::Oct => verify_oct(opts),
            Scope::Gadgets => verify_gadgets(opts),
            Scope::Eppstein => verify_eppstein(opts),
            Scope::Grover => verify_grover(opts),
        })
        .collect::<Result<_>>()?;
    Ok(VerifyReport { checks })
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} edges=[{}]", g.n(), edges.join(","))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Labelled random graphs with `n` in `lo..=hi` and a density cycling through
/// `{0.2, 0.5, 0.8}`, seeded by `(base, tag, i)`.
fn random_instances(base: u64, tag: u64, count: usize, lo: usize, hi: usize) -> Result<Vec<Graph>> {
    (0..count)
        .map(|i| {
            let s = derive_seed(base, &[tag, i as u64]);
            let n = seeded(s).random_range(lo..=hi);
            gen_random(n, [0.2, 0.5, 0.8][i % 3], s)
        })
        .collect()
}

/// Structural agreement between the fast routines and the brute-force oracles.
pub fn verify_graph(opts: &VerifyOptions) -> Result<CheckReport> {
    let nmax = opts.nmax.unwrap_or(12);
    let budget = OracleBudget::default();
    let cfg = CostModelConfig::default();
    let mut graphs = Vec::new();
    for n in 0..=nmax.min(6) {
        graphs.extend(all_graphs(n)?);
    }
    graphs.extend(random_instances(opts.seed, 0, opts.samples.unwrap_or(200), 1, nmax.max(1))?);

    let outcomes: Vec<std::result::Result<(), String>> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| -> Result<std::result::Result<(), String>> {
            let d = || describe(g);
            let check = || -> Result<std::result::Result<(), String>> {
                let h = g.complement();
                if h.complement() != *g || h.m() + g.m() != g.n() * g.n().saturating_sub(1) / 2 {
                    return Ok(Err(format!("complement mismatch on {}", d())));
                }
                if load_dimacs(&to_dimacs(g))? != *g {
                    return Ok(Err(format!("DIMACS round trip changed {}", d())));
                }
                if g.n() <= budget.oct && is_bipartite(g).0 != (budget.oct(g)?.0 == 0) {
                    return Ok(Err(format!("bipartiteness disagrees with brute force on {}", d())));
                }
                for model in [AccessModel::Matrix, AccessModel::List] {
                    let mut rng = seeded(derive_seed(opts.seed, &[1, i as u64]));
                    let mut o = GraphOracle::new(g, model);
                    let r = maximal_is(&mut o, &cfg, &mut rng)?;
                    if !is_maximal_is(g, &r.set) {
                        return Ok(Err(format!("{model} maximal_is returned {} on {}", r.set, d())));
                    }
                    let mut o = GraphOracle::new(g, model);
                    let c = greedy_coloring(&mut o, &cfg, &mut rng)?;
                    if !c.is_proper(g) || c.k > g.max_degree() + 1 {
                        return Ok(Err(format!("{model} coloring with {} colours invalid on {}", c.k, d())));
                    }
                }
                if g.n() <= budget.enumeration && enumerate_maximal_is(g, None)? != budget.maximal_independent_sets(g)? {
                    return Ok(Err(format!("maximal IS enumeration disagrees on {}", d())));
                }
                if g.n() <= budget.clique {
                    for k in 1..=g.n() {
                        let fast = k_independent_set(g, k)?.set.is_some();
                        if fast != budget.has_k_clique(&h, k)? {
                            return Ok(Err(format!("k-IS presence wrong for k={k} on {}", d())));
                        }
                    }
                }
                Ok(Ok(()))
            };
            check()
        })
        .collect::<Result<_>>()?;

    let mut report = CheckReport::new(Scope::Graph);
    outcomes.into_iter().for_each(|o| report.record(o));
    Ok(report)
}

/// Exact success probability of one branching trial against Monte Carlo.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuccessSample {
    pub n: usize,
    pub alpha: usize,
    pub exact: f64,
    pub estimate: f64,
    pub sigma: f64,
}

impl SuccessSample {
    /// `|estimate − exact| ≤ 4σ` (exact equality when `σ = 0`).
    pub fn agrees(&self) -> bool {
        (self.estimate - self.exact).abs() <= 4.0 * self.sigma + 1e-12
    }

    /// `s(g)·2^(2n/5)`.
    pub fn scaled(&self) -> f64 {
        self.exact * 2f64.powf(2.0 * self.n as f64 / 5.0)
    }
}

/// Estimates the success probability of `trials` independent branching trials.
pub fn success_sample(g: &Graph, trials: u64, seed: u64) -> Result<SuccessSample> {
    let exact = exact_success_prob(g)?;
    let alpha = OracleBudget::default().alpha(g)?.0;
    let kernel = TrialKernel::new(g).ok_or(Error::BudgetExceeded { what: "trial kernel", limit: 64, n: g.n() })?;
    let mut rng = seeded(seed);
    let hits = (0..trials).filter(|_| kernel.run_size(rng.random()) == alpha).count();
    let estimate = hits as f64 / trials as f64;
    let sigma = (exact * (1.0 - exact) / trials as f64).sqrt();
    Ok(SuccessSample { n: g.n(), alpha, exact, estimate, sigma })
}

pub fn verify_success_prob(opts: &VerifyOptions) -> Result<CheckReport> {
    let nmax = opts.nmax.unwrap_or(8);
    let mut graphs = Vec::new();
    for n in 1..=nmax {
        graphs.extend(connected_graphs(n)?);
    }
    let catalogued = graphs.len();
    let hi = opts.random_nmax.unwrap_or(14);
    graphs.extend(random_instances(opts.seed, 2, opts.samples.unwrap_or(200), 1, hi)?);

    let samples: Vec<SuccessSample> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| success_sample(g, opts.mc_trials, derive_seed(opts.seed, &[3, i as u64])))
        .collect::<Result<_>>()?;

    let mut report = CheckReport::new(Scope::SuccessProb);
    for (g, s) in graphs.iter().zip(&samples) {
        report.record(ensure(s.agrees(), || {
            format!("exact {} vs estimate {} (sigma {:.3e}) on {}", s.exact, s.estimate, s.sigma, describe(g))
        }));
        report.metric_min("min_scaled_success", s.scaled());
        report.metric_min("min_success", s.exact);
        report.metric_max("max_abs_z", if s.sigma > 0.0 { (s.estimate - s.exact).abs() / s.sigma } else { 0.0 });
    }
    // Two-sided normal tail beyond 4σ, for judging how many disagreements chance alone explains.
    let nondegenerate = samples.iter().filter(|s| s.sigma > 0.0).count();
    report.metrics.insert("nondegenerate_instances".into(), nondegenerate as f64);
    report.metrics.insert("expected_chance_failures".into(), nondegenerate as f64 * 6.334e-5);
    report.metrics.insert("catalogue_graphs".into(), catalogued as f64);
    report.metrics.insert("mc_trials".into(), opts.mc_trials as f64);
    Ok(report)
}

pub fn verify_oct(opts: &VerifyOptions) -> Result<CheckReport> {
    let nmax = opts.nmax.unwrap_or(8);
    let mut graphs = Vec::new();
    for n in 1..=nmax {
        graphs.extend(connected_graphs(n)?);
    }
    let hi = opts.random_nmax.unwrap_or(12).max(2);
    for i in 0..opts.samples.unwrap_or(500) {
        let s = derive_seed(opts.seed, &[4, i as u64]);
        let n = seeded(s).random_range(2..=hi);
        graphs.push(gen_random_connected(n, [0.3, 0.5, 0.7][i % 3], s)?);
    }
    let cfg = CostModelConfig::default();
    let outcomes: Vec<(std::result::Result<(), String>, u64)> = graphs
        .par_iter()
        .map(|g| {
            let r = min_oct(g, InnerSolver::Exact, &cfg, &mut seeded(0))?;
            let brute = OracleBudget::default().oct(g)?.0;
            let valid = is_bipartite(&g.delete_vertices(&r.transversal)?.graph).0;
            let outcome = ensure(r.size() == brute && r.invalid_candidates == 0 && valid, || {
                format!(
                    "min_oct size {} (invalid candidates {}) vs brute {} on {}",
                    r.size(),
                    r.invalid_candidates,
                    brute,
                    describe(g)
                )
            });
            Ok((outcome, r.candidates))
        })
        .collect::<Result<_>>()?;
    let mut report = CheckReport::new(Scope::Oct);
    let mut candidates = 0;
    for (o, c) in outcomes {
        report.record(o);
        candidates += c;
    }
    report.metrics.insert("candidates_checked".into(), candidates as f64);
    Ok(report)
}

pub fn verify_gadgets(opts: &VerifyOptions) -> Result<CheckReport> {
    let mut report = CheckReport::new(Scope::Gadgets);
    for n in 1..=opts.nmax.unwrap_or(3) {
        for family in [Family::A, Family::B] {
            let a = audit_flips(family, n)?;
            report.record(ensure(a.consistent(), || format!("{a:?}")));
        }
    }
    Ok(report)
}

pub fn verify_eppstein(opts: &VerifyOptions) -> Result<CheckReport> {
    let nmax = opts.nmax.unwrap_or(16);
    let graphs = random_instances(opts.seed, 5, opts.samples.unwrap_or(1000), 1, nmax.max(1))?;
    let per_graph: Vec<(std::result::Result<(), String>, f64)> = graphs
        .par_iter()
        .map(|g| {
            let sets = enumerate_maximal_is(g, None)?;
            let mut worst = 0.0f64;
            let mut outcome = Ok(());
            for k in 1..=g.n() {
                let count = sets.iter().filter(|s| s.len() <= k).count();
                let bound = eppstein_bound(g.n(), k)?;
                worst = worst.max(count as f64 / bound.to_f64());
                if num_bigint::BigUint::from(count) > bound.ceil() && outcome.is_ok() {
                    outcome = Err(format!("{count} maximal sets of size <= {k} exceed M(k) = {bound} on {}", describe(g)));
                }
            }
            Ok((outcome, worst))
        })
        .collect::<Result<_>>()?;
    let mut report = CheckReport::new(Scope::Eppstein);
    for (o, worst) in per_graph {
        report.record(o);
        report.metric_max("max_count_over_bound", worst);
    }
    Ok(report)
}

pub fn verify_grover(opts: &VerifyOptions) -> Result<CheckReport> {
    let cfg = CostModelConfig::default();
    let mut report = CheckReport::new(Scope::Grover);
    let mut rng = seeded(derive_seed(opts.seed, &[6]));
    let pairs: Vec<(usize, usize)> = (0..opts.samples.unwrap_or(200))
        .map(|_| {
            let n = rng.random_range(1..=opts.big_n_max.max(1));
            // log-uniform k so that small marked fractions are well represented
            let k = ((n as f64).powf(rng.random::<f64>()).round() as usize).clamp(1, n);
            (n, k)
        })
        .collect();
    let results: Vec<(std::result::Result<(), String>, f64)> = pairs
        .par_iter()
        .map(|&(n, k)| {
            let mut state = AmplitudeState::new(n, k)?;
            let mut dev = 0.0f64;
            for t in 0..=(2.0 * (n as f64).sqrt()).floor() as u64 {
                dev = dev.max((state.marked_mass() - closed_form_success_prob(n, k, t)).abs());
                state.step();
            }
            let (peak, _) = first_peak(n, k)?;
            let model = optimal_iterations(&cfg, n, k);
            let outcome = ensure(dev < 1e-9 && peak.abs_diff(model) <= 1, || {
                format!("N={n} k={k}: deviation {dev:.3e}, peak t={peak}, cost model t={model}")
            });
            Ok((outcome, dev))
        })
        .collect::<Result<_>>()?;
    for (o, dev) in results {
        report.record(o);
        report.metric_max("max_deviation", dev);
    }
    Ok(report)
}
