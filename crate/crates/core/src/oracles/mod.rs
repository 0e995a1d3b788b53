//! Brute-force oracles and the theoretical instance families.
//!
//! The enumeration oracles visit all `n!` allocations and refuse instances
//! with more than [`DEFAULT_ENUMERATION_BOUND`](crate::dynamics::DEFAULT_ENUMERATION_BOUND)
//! agents.

mod construct;
mod enumerate;
mod suites;

pub use construct::{maximality_instance, poa_ark_instance, poa_mrk_instance, PoaConstruction};
pub use enumerate::{
    all_allocations, empirical_poa, is_pareto_optimal_brute, pareto_optimal_set, reachable_by_swaps,
    replay_improving, stable_set, Objective, Ratio,
};
pub use suites::{run_suite, Failure, Suite, SuiteParams, SuiteReport};
