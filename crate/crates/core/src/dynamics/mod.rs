//! Decentralized improving-deal dynamics.
//!
//! Starting from the endowment, one improving deal is selected and applied
//! until none is left. Every applied deal raises the sum of ranks by at
//! least its size, so a run performs at most (n² − n)/2 swaps.

mod heuristics;
mod reachable;

use std::fmt;
use std::str::FromStr;

pub use heuristics::round_robin_pair_sequence;
pub use reachable::{reachable_outcomes, reachable_outcomes_bounded, DEFAULT_ENUMERATION_BOUND};

use crate::error::{invalid, MarketError, Result};
use crate::market::{Allocation, DealTrace, Instance};

/// Rule choosing which improving deal to apply next.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Heuristic {
    /// Uniformly random improving deal.
    Uniform,
    /// First improving swap in (a1,a2), (a1,a3), …, (a1,an), (a2,a3), …
    RoundRobinAgents,
    /// First improving swap in the interleaved pair sequence of
    /// [`round_robin_pair_sequence`].
    RoundRobinPairs,
    /// Uniform among swaps of pairs that never traded, else among all swaps.
    PriorityNew,
    /// Agents sorted by increasing current rank; first improving swap.
    PriorityWorst,
}

impl Heuristic {
    pub fn code(self) -> &'static str {
        match self {
            Heuristic::Uniform => "u",
            Heuristic::RoundRobinAgents => "rra",
            Heuristic::RoundRobinPairs => "rrp",
            Heuristic::PriorityNew => "pn",
            Heuristic::PriorityWorst => "pw",
        }
    }

    pub fn is_stochastic(self) -> bool {
        matches!(self, Heuristic::Uniform | Heuristic::PriorityNew)
    }
}

impl fmt::Display for Heuristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Heuristic {
    type Err = MarketError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "u" => Heuristic::Uniform,
            "rra" => Heuristic::RoundRobinAgents,
            "rrp" => Heuristic::RoundRobinPairs,
            "pn" => Heuristic::PriorityNew,
            "pw" => Heuristic::PriorityWorst,
            other => return invalid(format!("unknown heuristic `{other}`")),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DynamicsConfig {
    /// Largest deal size considered, 2 or 3.
    pub k_max: usize,
    pub heuristic: Heuristic,
    /// Seed for the stochastic heuristics; ignored by the others.
    pub seed: u64,
    /// Safety cap on applied deals; `None` means n².
    pub max_steps: Option<usize>,
}

impl DynamicsConfig {
    pub fn swaps(heuristic: Heuristic, seed: u64) -> Self {
        Self { k_max: 2, heuristic, seed, max_steps: None }
    }

    pub fn uniform(k_max: usize, seed: u64) -> Self {
        Self { k_max, heuristic: Heuristic::Uniform, seed, max_steps: None }
    }

    pub fn validate(&self) -> Result<()> {
        if !(2..=3).contains(&self.k_max) {
            return invalid(format!("k_max must be 2 or 3, got {}", self.k_max));
        }
        if self.k_max == 3 && self.heuristic != Heuristic::Uniform {
            return invalid("deals of size 3 are only supported with uniform selection");
        }
        Ok(())
    }
}

/// Runs the dynamics to a stable allocation.
///
/// Scan-based heuristics restart from the beginning of their sequence after
/// each applied deal.
pub fn run_dynamics(instance: &Instance, config: &DynamicsConfig) -> Result<(Allocation, DealTrace)> {
    config.validate()?;
    let n = instance.n();
    let max_steps = config.max_steps.unwrap_or((n * n).max(1));
    let mut selector = heuristics::Selector::new(instance, config);
    let mut current = instance.endowment().clone();
    let mut trace = DealTrace::new(current.clone());
    loop {
        let Some(deal) = selector.next_deal(&current) else {
            return Ok((current, trace));
        };
        if trace.num_deals() == max_steps {
            return Err(MarketError::StepLimit(max_steps));
        }
        debug_assert!(crate::market::is_improving(instance, &current, &deal));
        current.apply_in_place(&deal);
        selector.record(&deal);
        trace.push(deal, current.clone());
    }
}
