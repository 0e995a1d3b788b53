use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer};

use crate::central::{crawler, ttc};
use crate::dynamics::{run_dynamics, DynamicsConfig, Heuristic};
use crate::error::{MarketError, Result};
use crate::market::{Allocation, DealTrace, Instance};
use crate::optimize::{max_ark, max_mrk};

/// Allocation procedures known to the harness and the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Procedure {
    Ttc,
    Crawler,
    Swaps(Heuristic),
    C3Uniform,
    MaxArkIr,
    MaxMrkIr,
}

impl Procedure {
    pub const ALL: [Procedure; 10] = [
        Procedure::Ttc,
        Procedure::Crawler,
        Procedure::Swaps(Heuristic::Uniform),
        Procedure::Swaps(Heuristic::RoundRobinAgents),
        Procedure::Swaps(Heuristic::RoundRobinPairs),
        Procedure::Swaps(Heuristic::PriorityNew),
        Procedure::Swaps(Heuristic::PriorityWorst),
        Procedure::C3Uniform,
        Procedure::MaxArkIr,
        Procedure::MaxMrkIr,
    ];

    pub fn name(self) -> String {
        match self {
            Procedure::Ttc => "ttc".into(),
            Procedure::Crawler => "crawler".into(),
            Procedure::Swaps(h) => format!("c2-{}", h.code()),
            Procedure::C3Uniform => "c3-u".into(),
            Procedure::MaxArkIr => "max-ark-ir".into(),
            Procedure::MaxMrkIr => "max-mrk-ir".into(),
        }
    }

    /// Whether the procedure is one of the improving-deal dynamics.
    pub fn is_dynamics(self) -> bool {
        matches!(self, Procedure::Swaps(_) | Procedure::C3Uniform)
    }

    fn stream(self) -> u64 {
        Procedure::ALL.iter().position(|&p| p == self).expect("registered") as u64
    }

    /// Runs the procedure from the instance's endowment. Stochastic
    /// procedures draw from a stream derived from `seed` and the procedure,
    /// so that procedures sharing a seed do not share random numbers.
    ///
    /// For the optimizers the trace is the decomposition of the exchange
    /// into disjoint cycles.
    pub fn run(self, instance: &Instance, seed: u64) -> Result<(Allocation, DealTrace)> {
        let stream_seed = crate::sp::splitmix64(seed ^ self.stream().rotate_left(48));
        match self {
            Procedure::Ttc => Ok(ttc(instance)),
            Procedure::Crawler => crawler(instance),
            Procedure::Swaps(h) => run_dynamics(instance, &DynamicsConfig::swaps(h, stream_seed)),
            Procedure::C3Uniform => run_dynamics(instance, &DynamicsConfig::uniform(3, stream_seed)),
            Procedure::MaxArkIr => Ok(cycle_trace(instance.endowment(), max_ark(instance, true).0)),
            Procedure::MaxMrkIr => Ok(cycle_trace(instance.endowment(), max_mrk(instance, true).0)),
        }
    }
}

fn cycle_trace(start: &Allocation, target: Allocation) -> (Allocation, DealTrace) {
    let mut trace = DealTrace::new(start.clone());
    let mut current = start.clone();
    for deal in start.cycles_to(&target) {
        current.apply_in_place(&deal);
        trace.push(deal, current.clone());
    }
    debug_assert_eq!(current, target);
    (target, trace)
}

impl fmt::Display for Procedure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Procedure {
    type Err = MarketError;

    fn from_str(s: &str) -> Result<Self> {
        Procedure::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| {
            let known: Vec<String> = Procedure::ALL.iter().map(|p| p.name()).collect();
            MarketError::InvalidArgument(format!("unknown procedure `{s}` (known: {})", known.join(", ")))
        })
    }
}

impl<'de> Deserialize<'de> for Procedure {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let name = String::deserialize(deserializer)?;
        name.parse().map_err(serde::de::Error::custom)
    }
}
