//! Minimum odd cycle transversal through the maximal/maximum independent set
//! decomposition, plus enumeration of maximal independent sets and the
//! Eppstein bound on how many there are of bounded size.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algorithms::maximum_is;
use crate::brute::OracleBudget;
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, Graph};
use crate::quantum::{ceil_units, CostModelConfig};
use crate::VertexSet;

/// Largest graph [`enumerate_maximal_is`] accepts.
pub const ENUMERATION_MAX_N: usize = 40;

/// Every maximal independent set of `g`, restricted to sets of size at most
/// `cap` when given, in lexicographic order.
///
/// Branches on the lowest undecided vertex. A vertex that was left out must end
/// up dominated, so a branch dies as soon as some excluded vertex has no
/// undecided neighbour left.
pub fn enumerate_maximal_is(g: &Graph, cap: Option<usize>) -> Result<Vec<VertexSet>> {
    if g.n() > ENUMERATION_MAX_N {
        return Err(Error::BudgetExceeded { what: "enumerate_maximal_is", limit: ENUMERATION_MAX_N, n: g.n() });
    }
    let n = g.n();
    let adj: Vec<u64> = (1..=n).map(|v| g.row(v).first().copied().unwrap_or(0)).collect();
    let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut out = Vec::new();
    let mut e = Enumerator { adj: &adj, cap: cap.unwrap_or(n), out: &mut out };
    e.go(0, all, 0, 0);
    out.sort();
    Ok(out)
}

struct Enumerator<'a> {
    adj: &'a [u64],
    cap: usize,
    out: &'a mut Vec<VertexSet>,
}

impl Enumerator<'_> {
    /// `chosen`: the set so far; `open`: undecided vertices with no chosen
    /// neighbour; `excluded`: vertices left out that no chosen vertex dominates.
    fn go(&mut self, chosen: u64, open: u64, excluded: u64, size: usize) {
        if size > self.cap {
            return;
        }
        if open == 0 {
            if excluded == 0 {
                self.out.push((0..64).filter(|b| chosen >> b & 1 == 1).map(|b| b + 1).collect());
            }
            return;
        }
        let mut x = excluded;
        while x != 0 {
            let b = x.trailing_zeros() as usize;
            if self.adj[b] & open == 0 {
                return;
            }
            x &= x - 1;
        }
        let b = open.trailing_zeros() as usize;
        let bit = 1u64 << b;
        let nb = self.adj[b];
        self.go(chosen | bit, open & !nb & !bit, excluded & !nb, size + 1);
        self.go(chosen, open & !bit, excluded | bit, size);
    }
}

/// Eppstein's bound `M(k)` on the number of maximal independent sets of size at
/// most `k` in an `n`-vertex graph: `3^(4k−n)·4^(n−3k)` when `k ≤ ⌊n/3⌋`,
/// otherwise `3^(n/3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EppsteinBound {
    /// First branch, exactly.
    Rational(BigRational),
    /// Second branch, `3^(n/3)` stored as its exponent numerator `n`.
    CubeRootOfPowerOf3(u32),
}

impl EppsteinBound {
    pub fn ceil(&self) -> BigUint {
        match self {
            EppsteinBound::Rational(r) => r.ceil().to_integer().to_biguint().expect("M(k) is positive"),
            EppsteinBound::CubeRootOfPowerOf3(n) => {
                let cube = BigUint::from(3u32).pow(*n);
                let root = cube.cbrt();
                if &root * &root * &root == cube {
                    root
                } else {
                    root + 1u32
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            EppsteinBound::Rational(r) => r.to_f64().unwrap_or(f64::INFINITY),
            EppsteinBound::CubeRootOfPowerOf3(n) => 3f64.powf(*n as f64 / 3.0),
        }
    }
}

impl fmt::Display for EppsteinBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EppsteinBound::Rational(r) => write!(f, "{r}"),
            EppsteinBound::CubeRootOfPowerOf3(n) if n % 3 == 0 => write!(f, "{}", BigUint::from(3u32).pow(n / 3)),
            EppsteinBound::CubeRootOfPowerOf3(n) => write!(f, "3^({n}/3)"),
        }
    }
}

pub fn eppstein_bound(n: usize, k: usize) -> Result<EppsteinBound> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    let (n, k) = (n as i64, k as i64);
    if k <= n / 3 {
        let pow = |base: u32, e: i64| -> BigRational {
            let p = BigInt::from(base).pow(e.unsigned_abs() as u32);
            if e >= 0 {
                BigRational::from_integer(p)
            } else {
                BigRational::new(BigInt::one(), p)
            }
        };
        Ok(EppsteinBound::Rational(pow(3, 4 * k - n) * pow(4, n - 3 * k)))
    } else {
        Ok(EppsteinBound::CubeRootOfPowerOf3(n as u32))
    }
}

/// How the maximum independent set of `G − V₁` is found for each candidate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InnerSolver {
    /// Brute-force independence number; deterministic.
    #[default]
    Exact,
    /// The amplified randomized maximum independent set algorithm.
    Amplified,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OctResult {
    pub transversal: VertexSet,
    /// Maximal independent sets `V₁` tried.
    pub candidates: u64,
    /// Candidates whose deletion did not leave a bipartite graph. Always zero
    /// with the exact inner solver.
    pub invalid_candidates: u64,
    /// `Σ ⌈c_a·2^((n−|V₁|)/5)⌉` over candidates with the exact solver, or the
    /// trials actually spent with the amplified one.
    pub charged_cost: u64,
    /// The input was disconnected and was solved one component at a time.
    pub per_component: bool,
}

impl OctResult {
    pub fn size(&self) -> usize {
        self.transversal.len()
    }
}

/// For every maximal independent set `V₁` take a maximum independent set `V₂` of
/// `G − V₁`; `V \ (V₁ ∪ V₂)` is a transversal, and the smallest one found is
/// returned. Disconnected graphs are solved per component.
pub fn min_oct<R: Rng + ?Sized>(g: &Graph, inner: InnerSolver, cfg: &CostModelConfig, rng: &mut R) -> Result<OctResult> {
    cfg.validate()?;
    let components = g.components();
    if components.len() <= 1 {
        return min_oct_connected(g, inner, cfg, rng);
    }
    let mut total = OctResult {
        transversal: VertexSet::new(),
        candidates: 0,
        invalid_candidates: 0,
        charged_cost: 0,
        per_component: true,
    };
    for comp in components {
        let sub = g.induced(comp);
        let r = min_oct_connected(&sub.graph, inner, cfg, rng)?;
        total.transversal = total.transversal.union(&sub.lift(&r.transversal));
        total.candidates += r.candidates;
        total.invalid_candidates += r.invalid_candidates;
        total.charged_cost += r.charged_cost;
    }
    Ok(total)
}

fn min_oct_connected<R: Rng + ?Sized>(g: &Graph, inner: InnerSolver, cfg: &CostModelConfig, rng: &mut R) -> Result<OctResult> {
    let n = g.n();
    let budget = OracleBudget::default();
    let mut best = VertexSet::full(n);
    let mut out = OctResult {
        transversal: VertexSet::new(),
        candidates: 0,
        invalid_candidates: 0,
        charged_cost: 0,
        per_component: false,
    };
    for v1 in enumerate_maximal_is(g, None)? {
        out.candidates += 1;
        let rest = g.delete_vertices(&v1)?;
        let v2 = match inner {
            InnerSolver::Exact => {
                out.charged_cost += ceil_units(cfg.amplification_constant * 2f64.powf((n - v1.len()) as f64 / 5.0));
                budget.alpha(&rest.graph)?.1
            }
            InnerSolver::Amplified => {
                let r = maximum_is(&rest.graph, cfg, rng)?;
                out.charged_cost += r.charged_cost;
                r.set
            }
        };
        let kept = v1.union(&rest.lift(&v2));
        let candidate = VertexSet::full(n).difference(&kept);
        if !is_bipartite(&g.delete_vertices(&candidate)?.graph).0 {
            out.invalid_candidates += 1;
            continue;
        }
        if candidate.len() < best.len() {
            best = candidate;
        }
    }
    out.transversal = best;
    Ok(out)
}
