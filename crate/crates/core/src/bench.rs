//! Scaling sweeps and power-law fitting.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algorithms::maximal_is;
use crate::error::{Error, Result};
use crate::graph::gen_random;
use crate::oracle::{AccessModel, GraphOracle, QueryLedger};
use crate::quantum::CostModelConfig;
use crate::rng::{derive_seed, seeded};

/// Least-squares line through `(ln n, ln cost)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowerFit {
    pub exponent: f64,
    pub intercept: f64,
    /// Largest absolute residual in log space.
    pub max_residual: f64,
}

pub fn fit_exponent(points: &[(f64, f64)]) -> Result<PowerFit> {
    if points.len() < 3 {
        return Err(Error::InvalidParameter(format!("need at least 3 points, got {}", points.len())));
    }
    if let Some(&(x, y)) = points.iter().find(|&&(x, y)| !(x > 0.0 && y > 0.0)) {
        return Err(Error::InvalidParameter(format!("points must be positive, got ({x}, {y})")));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidParameter("all sizes are equal".into()));
    }
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let exponent = sxy / sxx;
    let intercept = my - exponent * mx;
    let max_residual = logs
        .iter()
        .map(|p| (p.1 - intercept - exponent * p.0).abs())
        .fold(0.0, f64::max);
    Ok(PowerFit { exponent, intercept, max_residual })
}

/// One maximal independent set run in a scaling sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub rep: usize,
    /// Seed of the generated instance; the run's own randomness uses `seed + 1`.
    pub seed: u64,
    pub m: usize,
    pub set_size: usize,
    pub ledger: QueryLedger,
}

/// Runs the maximal independent set algorithm on `reps` random graphs
/// `G(n, density)` per size. Rows come back in `(size, rep)` order; instance
/// `(n, rep)` is seeded with `derive_seed(seed, [n, rep])`.
pub fn maximal_is_sweep(
    sizes: &[usize],
    density: f64,
    reps: usize,
    model: AccessModel,
    cfg: &CostModelConfig,
    seed: u64,
) -> Result<Vec<SweepRow>> {
    cfg.validate()?;
    let jobs: Vec<(usize, usize)> = sizes.iter().flat_map(|&n| (0..reps).map(move |r| (n, r))).collect();
    jobs.par_iter()
        .map(|&(n, rep)| {
            let s = derive_seed(seed, &[n as u64, rep as u64]);
            let g = gen_random(n, density, s)?;
            let mut oracle = GraphOracle::new(&g, model);
            let r = maximal_is(&mut oracle, cfg, &mut seeded(s.wrapping_add(1)))?;
            Ok(SweepRow { n, rep, seed: s, m: g.m(), set_size: r.set.len(), ledger: r.ledger })
        })
        .collect()
}

/// Mean of `metric` per size, in the order sizes first appear.
pub fn mean_by_size<F: Fn(&SweepRow) -> f64>(rows: &[SweepRow], metric: F) -> Vec<(f64, f64)> {
    let mut sizes: Vec<usize> = Vec::new();
    for r in rows {
        if !sizes.contains(&r.n) {
            sizes.push(r.n);
        }
    }
    sizes
        .into_iter()
        .map(|n| {
            let vals: Vec<f64> = rows.iter().filter(|r| r.n == n).map(&metric).collect();
            (n as f64, vals.iter().sum::<f64>() / vals.len() as f64)
        })
        .collect()
}
