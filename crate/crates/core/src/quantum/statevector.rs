//! Exact Grover dynamics on a real amplitude vector.
//!
//! Starting from the uniform state, each iteration flips the sign of the marked
//! amplitudes and then reflects every amplitude about the mean. Amplitudes stay
//! real throughout, so `f64` storage suffices.

use super::CostModelConfig;
use crate::error::{Error, Result};

/// Largest search space the simulator accepts.
pub const MAX_SEARCH_SPACE: usize = 1 << 14;

#[derive(Clone, Debug)]
pub struct AmplitudeState {
    marked: usize,
    amplitudes: Vec<f64>,
    iterations: u64,
}

impl AmplitudeState {
    /// Uniform state over `n` items, the first `k` of which are marked.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || n > MAX_SEARCH_SPACE {
            return Err(Error::BudgetExceeded { what: "statevector search space", limit: MAX_SEARCH_SPACE, n });
        }
        if k == 0 || k > n {
            return Err(Error::InvalidParameter(format!("marked count must lie in 1..={n}, got {k}")));
        }
        Ok(Self {
            marked: k,
            amplitudes: vec![1.0 / (n as f64).sqrt(); n],
            iterations: 0,
        })
    }

    /// One Grover iteration: oracle phase flip, then inversion about the mean.
    pub fn step(&mut self) {
        for a in &mut self.amplitudes[..self.marked] {
            *a = -*a;
        }
        let mean = self.amplitudes.iter().sum::<f64>() / self.amplitudes.len() as f64;
        for a in &mut self.amplitudes {
            *a = 2.0 * mean - *a;
        }
        self.iterations += 1;
    }

    pub fn iterations(&self) -> u64 {
        self.iterations
    }

    /// Probability of measuring a marked item.
    pub fn marked_mass(&self) -> f64 {
        self.amplitudes[..self.marked].iter().map(|a| a * a).sum()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a * a).sum::<f64>().sqrt()
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }
}

/// Marked-item probability after `t` simulated Grover iterations.
pub fn sv_success_prob(n: usize, k: usize, t: u64) -> Result<f64> {
    let mut state = AmplitudeState::new(n, k)?;
    for _ in 0..t {
        state.step();
    }
    Ok(state.marked_mass())
}

/// `sin²((2t+1)·arcsin √(k/n))`.
pub fn closed_form_success_prob(n: usize, k: usize, t: u64) -> f64 {
    let theta = (k as f64 / n as f64).sqrt().asin();
    ((2 * t + 1) as f64 * theta).sin().powi(2)
}

/// Iteration count the cost model assumes: `round(c·√(n/k) − 1/2)`, floored at 0.
pub fn optimal_iterations(cfg: &CostModelConfig, n: usize, k: usize) -> u64 {
    let t = (cfg.iteration_constant * (n as f64 / k as f64).sqrt() - 0.5).round();
    t.max(0.0) as u64
}

/// Simulated success curve over the first rotation lobe,
/// `t = 0..=⌊π/(2θ) − 1/2⌋`, together with its first (near-)maximising `t`.
pub fn first_peak(n: usize, k: usize) -> Result<(u64, Vec<f64>)> {
    let theta = (k as f64 / n as f64).sqrt().asin();
    let last = (std::f64::consts::FRAC_PI_2 / theta - 0.5).floor().max(0.0) as u64;
    let mut state = AmplitudeState::new(n, k)?;
    let mut curve = vec![state.marked_mass()];
    for _ in 0..last {
        state.step();
        curve.push(state.marked_mass());
    }
    let max = curve.iter().copied().fold(f64::MIN, f64::max);
    let peak = curve.iter().position(|&p| p >= max - 1e-9).unwrap_or(0) as u64;
    Ok((peak, curve))
}
