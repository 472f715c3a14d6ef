//! Quantum execution layer.
//!
//! Searches are executed classically while the quantum query cost they would
//! incur is charged to a ledger ([`search`]). A small exact amplitude simulator
//! ([`statevector`]) checks the constants that the cost model relies on.

mod amplify;
mod search;
pub mod statevector;

pub use amplify::{amplification_budget, amplify_best, amplify_first, repeat_to_confidence, repetitions_for, Amplified, Repeated};
pub use search::{search_all, search_all_cost, search_cost, search_one, CostModelConfig, SearchReport};
pub use statevector::{closed_form_success_prob, first_peak, optimal_iterations, sv_success_prob, AmplitudeState, MAX_SEARCH_SPACE};

/// Ceiling that ignores floating-point noise just above an integer.
pub(crate) fn ceil_units(x: f64) -> u64 {
    let c = (x - 1e-9 * x.abs().max(1.0)).ceil();
    if c <= 0.0 {
        0
    } else {
        c as u64
    }
}

#[cfg(test)]
mod tests {
    use super::ceil_units;

    #[test]
    fn ceil_units_tolerates_noise() {
        assert_eq!(ceil_units(4.0), 4);
        assert_eq!(ceil_units(4.000_000_000_001), 4);
        assert_eq!(ceil_units(7.853), 8);
        assert_eq!(ceil_units(0.2), 1);
        assert_eq!(ceil_units(0.0), 0);
    }
}
