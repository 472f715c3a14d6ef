use rand::Rng;

use super::{ceil_units, CostModelConfig};
use crate::error::{Error, Result};

/// Result of running a randomized trial under an amplification budget.
#[derive(Clone, Debug, PartialEq)]
pub struct Amplified<T> {
    pub result: Option<T>,
    /// Invocations actually made; this is the charge.
    pub trials: u64,
    pub budget: u64,
}

/// Number of invocations `⌈c_a/√ε⌉` that boost a success-`ε` trial to constant
/// success probability.
pub fn amplification_budget(epsilon: f64, cfg: &CostModelConfig) -> Result<u64> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(Error::InvalidParameter(format!("success probability must lie in (0, 1], got {epsilon}")));
    }
    Ok(ceil_units(cfg.amplification_constant / epsilon.sqrt()).max(1))
}

/// Runs `trial` until `success` holds or the budget is spent; returns the first
/// success.
pub fn amplify_first<T, R, F, S>(mut trial: F, success: S, epsilon: f64, cfg: &CostModelConfig, rng: &mut R) -> Result<Amplified<T>>
where
    R: Rng + ?Sized,
    F: FnMut(&mut R) -> T,
    S: Fn(&T) -> bool,
{
    let budget = amplification_budget(epsilon, cfg)?;
    for t in 1..=budget {
        let out = trial(rng);
        if success(&out) {
            return Ok(Amplified { result: Some(out), trials: t, budget });
        }
    }
    Ok(Amplified { result: None, trials: budget, budget })
}

/// Runs `trial` for the whole budget and keeps the first output with the
/// largest `key`, the classical stand-in for quantum maximum finding.
pub fn amplify_best<T, K, R, F, G>(mut trial: F, key: G, epsilon: f64, cfg: &CostModelConfig, rng: &mut R) -> Result<Amplified<T>>
where
    K: Ord,
    R: Rng + ?Sized,
    F: FnMut(&mut R) -> T,
    G: Fn(&T) -> K,
{
    let budget = amplification_budget(epsilon, cfg)?;
    let mut best: Option<(K, T)> = None;
    for _ in 0..budget {
        let out = trial(rng);
        let k = key(&out);
        if best.as_ref().is_none_or(|(bk, _)| k > *bk) {
            best = Some((k, out));
        }
    }
    Ok(Amplified { result: best.map(|(_, t)| t), trials: budget, budget })
}

/// Outcome of [`repeat_to_confidence`].
#[derive(Clone, Debug, PartialEq)]
pub struct Repeated<T> {
    pub result: Option<T>,
    pub attempts: u32,
    pub repetitions: u32,
}

/// Smallest `l` with `p^l <= target_error`.
pub fn repetitions_for(p: f64, target_error: f64) -> Result<u32> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidParameter(format!("error probability must lie in (0, 1), got {p}")));
    }
    if !(target_error > 0.0 && target_error < 1.0) {
        return Err(Error::InvalidParameter(format!("target error must lie in (0, 1), got {target_error}")));
    }
    Ok(ceil_units(target_error.ln() / p.ln()).max(1) as u32)
}

/// Repeats a one-sided subroutine with error probability `p` up to
/// [`repetitions_for`] times, returning the first success.
pub fn repeat_to_confidence<T, F>(mut subroutine: F, p: f64, target_error: f64) -> Result<Repeated<T>>
where
    F: FnMut() -> Option<T>,
{
    let repetitions = repetitions_for(p, target_error)?;
    for attempt in 1..=repetitions {
        if let Some(out) = subroutine() {
            return Ok(Repeated { result: Some(out), attempts: attempt, repetitions });
        }
    }
    Ok(Repeated { result: None, attempts: repetitions, repetitions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;

    #[test]
    fn budgets() {
        let cfg = CostModelConfig::default();
        assert_eq!(amplification_budget(1.0, &cfg).unwrap(), 1);
        assert_eq!(amplification_budget(0.25, &cfg).unwrap(), 2);
        let n = 10.0;
        assert_eq!(amplification_budget(0.5f64.powf(2.0 * n / 5.0), &cfg).unwrap(), 4);
        assert!(amplification_budget(0.0, &cfg).is_err());
        assert!(amplification_budget(-0.5, &cfg).is_err());
        let scaled = CostModelConfig { amplification_constant: 3.0, ..cfg };
        assert_eq!(amplification_budget(0.25, &scaled).unwrap(), 6);
    }

    #[test]
    fn first_success_stops_early() {
        let cfg = CostModelConfig::default();
        let mut rng = seeded(0);
        let mut calls = 0;
        let out = amplify_first(
            |_| {
                calls += 1;
                calls
            },
            |&c| c == 3,
            1.0 / 64.0,
            &cfg,
            &mut rng,
        )
        .unwrap();
        assert_eq!(out, Amplified { result: Some(3), trials: 3, budget: 8 });

        let none = amplify_first(|_| 0, |_| false, 0.25, &cfg, &mut rng).unwrap();
        assert_eq!(none, Amplified { result: None, trials: 2, budget: 2 });
    }

    #[test]
    fn best_keeps_first_maximum() {
        let cfg = CostModelConfig::default();
        let mut rng = seeded(0);
        let seq = [(1, 'a'), (5, 'b'), (5, 'c'), (2, 'd')];
        let mut i = 0;
        let out = amplify_best(
            |_| {
                i += 1;
                seq[i - 1]
            },
            |&(k, _)| k,
            1.0 / 16.0,
            &cfg,
            &mut rng,
        )
        .unwrap();
        assert_eq!(out.result, Some((5, 'b')));
        assert_eq!(out.trials, 4);
    }

    #[test]
    fn repetition_counts() {
        assert_eq!(repetitions_for(1.0 / 3.0, 1.0 / 9.0).unwrap(), 2);
        assert_eq!(repetitions_for(1.0 / 3.0, 1.0 / 8.0).unwrap(), 2);
        assert_eq!(repetitions_for(0.5, 1.0 / 1024.0).unwrap(), 10);
        assert_eq!(repetitions_for(0.5, 0.9).unwrap(), 1);
        assert!(repetitions_for(0.0, 0.1).is_err());
        assert!(repetitions_for(0.5, 1.0).is_err());
    }

    #[test]
    fn repeat_returns_first_success() {
        let mut calls = 0;
        let r = repeat_to_confidence(
            || {
                calls += 1;
                (calls == 2).then_some("ok")
            },
            0.5,
            1.0 / 16.0,
        )
        .unwrap();
        assert_eq!(r, Repeated { result: Some("ok"), attempts: 2, repetitions: 4 });
    }

    #[test]
    fn empirical_error_within_target() {
        let mut rng = seeded(77);
        let (p, target) = (1.0 / 3.0, 1.0 / 20.0);
        let runs = 20_000;
        let mut errors = 0;
        for _ in 0..runs {
            let r = repeat_to_confidence(|| (!rng.random_bool(p)).then_some(()), p, target).unwrap();
            if r.result.is_none() {
                errors += 1;
            }
        }
        let rate = errors as f64 / runs as f64;
        let sigma = (target * (1.0 - target) / runs as f64).sqrt();
        assert!(rate <= target + 3.0 * sigma, "rate {rate}");
    }
}
