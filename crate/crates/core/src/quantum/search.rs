use std::f64::consts::FRAC_PI_4;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::ceil_units;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CostModelConfig {
    /// Constant `c` in the Grover charge `⌈c·√(N/k)⌉`.
    pub iteration_constant: f64,
    /// Probability that one search invocation fails and returns nothing.
    pub failure_probability: f64,
    /// Attempts per search before a failure is accepted.
    pub confidence_repeats: u32,
    /// Constant `c_a` in the amplification budget `⌈c_a/√ε⌉`.
    pub amplification_constant: f64,
}

impl Default for CostModelConfig {
    fn default() -> Self {
        Self {
            iteration_constant: FRAC_PI_4,
            failure_probability: 0.0,
            confidence_repeats: 1,
            amplification_constant: 1.0,
        }
    }
}

impl CostModelConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.iteration_constant > 0.0 && self.iteration_constant.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "iteration constant must be positive, got {}",
                self.iteration_constant
            )));
        }
        if !(0.0..1.0).contains(&self.failure_probability) {
            return Err(Error::InvalidParameter(format!(
                "failure probability must lie in [0, 1), got {}",
                self.failure_probability
            )));
        }
        if self.confidence_repeats == 0 {
            return Err(Error::InvalidParameter("confidence repeats must be >= 1".into()));
        }
        if !(self.amplification_constant > 0.0 && self.amplification_constant.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "amplification constant must be positive, got {}",
                self.amplification_constant
            )));
        }
        Ok(())
    }

    fn draw_failure<R: Rng + ?Sized>(&self, rng: &mut R) -> bool {
        self.failure_probability > 0.0 && rng.random_bool(self.failure_probability)
    }
}

/// Outcome of one cost-model search.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    /// Items of `1..=N` returned by the search; empty when `failed`.
    pub found: Vec<usize>,
    /// Classical predicate evaluations performed to execute the search.
    pub classical_probes: u64,
    /// Quantum query charge.
    pub charged_cost: u64,
    pub failed: bool,
}

/// Charge for finding one of `k` marked items among `n`: `⌈c·√(n/max(k,1))⌉`.
/// With `k = 0` this is the `⌈c·√n⌉` emptiness test.
pub fn search_cost(cfg: &CostModelConfig, n: usize, k: usize) -> u64 {
    ceil_units(cfg.iteration_constant * (n as f64 / k.max(1) as f64).sqrt())
}

/// Charge of the find-and-exclude schedule for all `k` solutions:
/// `Σ_{i=1..k} ⌈c·√(n/i)⌉ + ⌈c·√n⌉`.
pub fn search_all_cost(cfg: &CostModelConfig, n: usize, k: usize) -> u64 {
    (1..=k).map(|i| search_cost(cfg, n, i)).sum::<u64>() + search_cost(cfg, n, 0)
}

/// Finds one item of `1..=n` satisfying `predicate`, charging the Grover cost.
///
/// `k_hint` overrides the solution count used for charging; without it the true
/// count is used. A returned item is uniform among the solutions.
pub fn search_one<P, R>(mut predicate: P, n: usize, k_hint: Option<usize>, cfg: &CostModelConfig, rng: &mut R) -> SearchReport
where
    P: FnMut(usize) -> bool,
    R: Rng + ?Sized,
{
    let solutions: Vec<usize> = (1..=n).filter(|&x| predicate(x)).collect();
    let charged_cost = if solutions.is_empty() {
        search_cost(cfg, n, 0)
    } else {
        search_cost(cfg, n, k_hint.unwrap_or(solutions.len()))
    };
    let failed = cfg.draw_failure(rng);
    let found = if failed || solutions.is_empty() {
        Vec::new()
    } else {
        vec![solutions[rng.random_range(0..solutions.len())]]
    };
    SearchReport {
        found,
        classical_probes: n as u64,
        charged_cost,
        failed,
    }
}

/// Finds every item of `1..=n` satisfying `predicate` (ascending), charging
/// [`search_all_cost`].
pub fn search_all<P, R>(mut predicate: P, n: usize, cfg: &CostModelConfig, rng: &mut R) -> SearchReport
where
    P: FnMut(usize) -> bool,
    R: Rng + ?Sized,
{
    let solutions: Vec<usize> = (1..=n).filter(|&x| predicate(x)).collect();
    let charged_cost = search_all_cost(cfg, n, solutions.len());
    let failed = cfg.draw_failure(rng);
    SearchReport {
        found: if failed { Vec::new() } else { solutions },
        classical_probes: n as u64,
        charged_cost,
        failed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;

    fn cfg() -> CostModelConfig {
        CostModelConfig::default()
    }

    #[test]
    fn search_one_examples() {
        let mut rng = seeded(1);
        let r = search_one(|x| x == 37, 100, None, &cfg(), &mut rng);
        assert_eq!(r.found, vec![37]);
        assert_eq!(r.charged_cost, 8);
        assert_eq!(r.classical_probes, 100);

        let r = search_one(|_| true, 50, None, &cfg(), &mut rng);
        assert_eq!(r.charged_cost, 1);
        assert_eq!(r.found.len(), 1);

        let r = search_one(|_| false, 16, None, &cfg(), &mut rng);
        assert!(r.found.is_empty());
        assert!(!r.failed);
        assert_eq!(r.charged_cost, 4);

        // A hint of k = 4 among 100 charges ⌈(π/4)·5⌉ = 4.
        let r = search_one(|x| x <= 2, 100, Some(4), &cfg(), &mut rng);
        assert_eq!(r.charged_cost, 4);
    }

    #[test]
    fn search_all_examples() {
        let mut rng = seeded(2);
        let r = search_all(|_| false, 100, &cfg(), &mut rng);
        assert!(r.found.is_empty());
        assert_eq!(r.charged_cost, 8);

        // ⌈c·2⌉ + ⌈c·√2⌉ + ⌈c·2/√3⌉ + ⌈c·1⌉ + ⌈c·2⌉ = 2 + 2 + 1 + 1 + 2.
        let r = search_all(|_| true, 4, &cfg(), &mut rng);
        assert_eq!(r.found, vec![1, 2, 3, 4]);
        assert_eq!(r.charged_cost, 8);

        let r = search_all(|_| true, 1, &cfg(), &mut rng);
        assert_eq!(r.found, vec![1]);
        assert_eq!(r.charged_cost, 2);
    }

    /// `(2c+1)·√(kN) + √N`, plus one unit for the ceiling on the emptiness check.
    #[test]
    fn search_all_charge_is_within_grover_order() {
        let c = cfg();
        for n in 1..=300usize {
            for k in 0..=n {
                let cost = search_all_cost(&c, n, k) as f64;
                let bound = (2.0 * c.iteration_constant + 1.0) * ((k * n) as f64).sqrt() + (n as f64).sqrt() + 1.0;
                assert!(cost <= bound, "n={n} k={k} cost={cost} bound={bound}");
            }
        }
    }

    #[test]
    fn exact_with_zero_failure_probability() {
        let mut rng = seeded(3);
        for n in 1..=200usize {
            let pred = |x: usize| x % 7 == n % 7 || x * 3 % 11 == 1;
            let expected: Vec<usize> = (1..=n).filter(|&x| pred(x)).collect();
            let all = search_all(pred, n, &cfg(), &mut rng);
            assert_eq!(all.found, expected);
            let one = search_one(pred, n, None, &cfg(), &mut rng);
            match expected.is_empty() {
                true => assert!(one.found.is_empty()),
                false => assert!(pred(one.found[0])),
            }
        }
    }

    #[test]
    fn charge_monotone_in_k() {
        let c = cfg();
        for n in [1usize, 7, 64, 200] {
            let costs: Vec<u64> = (0..=n).map(|k| search_all_cost(&c, n, k)).collect();
            assert!(costs.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn failure_injection() {
        let c = CostModelConfig { failure_probability: 0.5, ..cfg() };
        let mut rng = seeded(4);
        let mut failures = 0;
        for _ in 0..2000 {
            let r = search_all(|x| x < 3, 10, &c, &mut rng);
            if r.failed {
                failures += 1;
                assert!(r.found.is_empty());
                assert!(r.charged_cost > 0);
            } else {
                assert_eq!(r.found, vec![1, 2]);
            }
        }
        assert!((850..1150).contains(&failures), "{failures}");
    }

    #[test]
    fn config_validation() {
        assert!(cfg().validate().is_ok());
        assert!(CostModelConfig { iteration_constant: 0.0, ..cfg() }.validate().is_err());
        assert!(CostModelConfig { failure_probability: 1.0, ..cfg() }.validate().is_err());
        assert!(CostModelConfig { confidence_repeats: 0, ..cfg() }.validate().is_err());
        assert!(CostModelConfig { amplification_constant: -1.0, ..cfg() }.validate().is_err());
    }
}
