use std::fmt;

use super::{fmt_labels, from_labels, Agent, Allocation};
use crate::error::{invalid, Result};

/// An exchange cycle ⟨a1, …, ak⟩: agent `a_j` gives her resource to
/// `a_{j+1}` and `a_k` gives hers to `a_1`.
///
/// Deals are stored in canonical rotation (smallest agent first), so two
/// deals are equal exactly when they describe the same exchange. A deal of
/// size 1 is a pick.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Deal(Vec<Agent>);

impl Deal {
    pub fn new(mut cycle: Vec<Agent>) -> Result<Self> {
        if cycle.is_empty() {
            return invalid("a deal needs at least one agent");
        }
        let mut sorted = cycle.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return invalid("deal agents must be pairwise distinct");
        }
        let min_at = cycle
            .iter()
            .enumerate()
            .min_by_key(|&(_, &a)| a)
            .map(|(i, _)| i)
            .unwrap_or(0);
        cycle.rotate_left(min_at);
        Ok(Self(cycle))
    }

    /// Builds a deal from 1-based agent labels.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if labels.contains(&0) {
            return invalid("agent labels are 1-based");
        }
        Self::new(from_labels(labels))
    }

    pub fn pick(agent: Agent) -> Self {
        Self(vec![agent])
    }

    /// Panics if `a == b`.
    pub fn swap(a: Agent, b: Agent) -> Self {
        assert_ne!(a, b, "a swap needs two distinct agents");
        Self(vec![a.min(b), a.max(b)])
    }

    pub fn agents(&self) -> &[Agent] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_pick(&self) -> bool {
        self.0.len() == 1
    }
}

impl fmt::Display for Deal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_labels(f, 'a', &self.0)
    }
}

/// The sequence of deals a procedure performed, each with the allocation it
/// produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DealTrace {
    initial: Allocation,
    steps: Vec<(Deal, Allocation)>,
}

impl DealTrace {
    pub fn new(initial: Allocation) -> Self {
        Self { initial, steps: Vec::new() }
    }

    pub(crate) fn push(&mut self, deal: Deal, after: Allocation) {
        self.steps.push((deal, after));
    }

    pub fn initial(&self) -> &Allocation {
        &self.initial
    }

    pub fn steps(&self) -> &[(Deal, Allocation)] {
        &self.steps
    }

    pub fn deals(&self) -> impl Iterator<Item = &Deal> {
        self.steps.iter().map(|(d, _)| d)
    }

    pub fn final_allocation(&self) -> &Allocation {
        self.steps.last().map(|(_, a)| a).unwrap_or(&self.initial)
    }

    pub fn num_deals(&self) -> usize {
        self.steps.len()
    }

    /// Deals of size at least 2 (picks excluded).
    pub fn num_exchanges(&self) -> usize {
        self.deals().filter(|d| d.len() >= 2).count()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.deals().map(Deal::len).collect()
    }

    pub fn max_size(&self) -> usize {
        self.deals().map(Deal::len).max().unwrap_or(0)
    }

    pub fn mean_size(&self) -> f64 {
        if self.steps.is_empty() {
            0.0
        } else {
            self.deals().map(Deal::len).sum::<usize>() as f64 / self.steps.len() as f64
        }
    }

    /// Replays every deal from the initial allocation and compares with the
    /// recorded allocations.
    pub fn replays(&self) -> bool {
        let mut cur = self.initial.clone();
        for (deal, after) in &self.steps {
            match cur.apply_deal(deal) {
                Ok(next) if &next == after => cur = next,
                _ => return false,
            }
        }
        true
    }
}
