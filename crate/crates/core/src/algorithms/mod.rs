//! Independent-set algorithms under the cost model.

mod coloring;
mod kis;
mod maximal;
mod maximum;

pub use coloring::{greedy_coloring, Coloring};
pub use kis::{k_independent_set, kis_cost_formula, KisCost, KisResult};
pub use maximal::{maximal_is, maximal_is_with, MaximalIsResult, PivotRule};
pub use maximum::{
    decompose_deg2, exact_success_prob, max_is_trial, max_is_trial_with_coins, maximum_is, mis_cycle, mis_path,
    Component, ComponentKind, MaximumIsResult, TrialKernel, EXACT_SUCCESS_MAX_N,
};
