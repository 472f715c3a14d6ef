use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::VertexSet;

/// Quantum query cost of finding a `k`-clique (equivalently a `k`-independent
/// set in the complement) on `n` vertices: `n^((5k−2)/(2k+4))` for `k ≤ 5`,
/// `n^(2k/(k+1))` beyond.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KisCost {
    pub exponent: Ratio<u64>,
    pub value: f64,
}

pub fn kis_cost_formula(n: usize, k: usize) -> Result<KisCost> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidParameter(format!("need n >= 1 and k >= 1, got n={n}, k={k}")));
    }
    let k = k as u64;
    let exponent = if k <= 5 { Ratio::new(5 * k - 2, 2 * k + 4) } else { Ratio::new(2 * k, k + 1) };
    let e = *exponent.numer() as f64 / *exponent.denom() as f64;
    Ok(KisCost { exponent, value: (n as f64).powf(e) })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KisResult {
    pub set: Option<VertexSet>,
    /// Model cost annotation; the clique search itself runs classically.
    pub cost: KisCost,
}

/// An independent set of size `k`, found as a `k`-clique of the complement by
/// backtracking over candidate bitsets; `None` when none exists.
pub fn k_independent_set(g: &Graph, k: usize) -> Result<KisResult> {
    if k == 0 || k > g.n() {
        return Err(Error::InvalidParameter(format!("k must lie in 1..={}, got {k}", g.n())));
    }
    let cost = kis_cost_formula(g.n(), k)?;
    let h = g.complement();
    let mut chosen = Vec::with_capacity(k);
    let found = extend_clique(&h, k, &mut chosen, bits::full(h.n()));
    Ok(KisResult { set: found.then(|| VertexSet::from(chosen)), cost })
}

/// Extends `chosen` to a `k`-clique using vertices from `candidates`, each of
/// which is adjacent to everything already chosen.
fn extend_clique(h: &Graph, k: usize, chosen: &mut Vec<usize>, candidates: Vec<u64>) -> bool {
    if chosen.len() == k {
        return true;
    }
    let mut rest = candidates;
    while chosen.len() + bits::count(&rest) >= k {
        let Some(v) = bits::ones(&rest).next() else { break };
        bits::clear(&mut rest, v);
        let next: Vec<u64> = rest.iter().zip(h.row(v)).map(|(a, b)| a & b).collect();
        chosen.push(v);
        if extend_clique(h, k, chosen, next) {
            return true;
        }
        chosen.pop();
    }
    false
}
