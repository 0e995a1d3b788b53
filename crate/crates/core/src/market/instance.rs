use super::{Agent, Allocation, LinearOrder, Resource};
use crate::error::{invalid, MarketError, Result};
use crate::sp::Axis;

/// A house market: `n` agents with strict preferences over `n` resources, an
/// initial endowment, and optionally the single-peaked axis the profile is
/// known to respect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    profile: Vec<LinearOrder>,
    endowment: Allocation,
    axis: Option<Axis>,
    // ranks[a * n + r]
    ranks: Vec<u32>,
}

impl Instance {
    /// Validates sizes and, when an axis is given, single-peakedness of every
    /// order with respect to it.
    pub fn new(profile: Vec<LinearOrder>, endowment: Allocation, axis: Option<Axis>) -> Result<Self> {
        let n = profile.len();
        if n == 0 {
            return invalid("an instance needs at least one agent");
        }
        if let Some((i, _)) = profile.iter().enumerate().find(|(_, o)| o.len() != n) {
            return invalid(format!("order of agent a{} does not rank exactly {n} resources", i + 1));
        }
        if endowment.len() != n {
            return invalid(format!("endowment has {} entries, expected {n}", endowment.len()));
        }
        if let Some(axis) = &axis {
            if axis.len() != n {
                return invalid(format!("axis has {} resources, expected {n}", axis.len()));
            }
            for (i, o) in profile.iter().enumerate() {
                if !crate::sp::is_single_peaked(o, axis)? {
                    return Err(MarketError::Domain(format!(
                        "order of agent a{} is not single-peaked on the axis",
                        i + 1
                    )));
                }
            }
        }
        let mut ranks = vec![0u32; n * n];
        for (a, o) in profile.iter().enumerate() {
            for r in 0..n {
                ranks[a * n + r] = o.rank(r) as u32;
            }
        }
        Ok(Self { profile, endowment, axis, ranks })
    }

    pub fn n(&self) -> usize {
        self.profile.len()
    }

    pub fn profile(&self) -> &[LinearOrder] {
        &self.profile
    }

    pub fn order(&self, agent: Agent) -> &LinearOrder {
        &self.profile[agent]
    }

    pub fn endowment(&self) -> &Allocation {
        &self.endowment
    }

    pub fn axis(&self) -> Option<&Axis> {
        self.axis.as_ref()
    }

    /// Same preferences with a different initial allocation.
    pub fn with_endowment(&self, endowment: Allocation) -> Result<Self> {
        Self::new(self.profile.clone(), endowment, self.axis.clone())
    }

    /// Same preferences and endowment, without the axis annotation.
    pub fn without_axis(&self) -> Self {
        Self { axis: None, ..self.clone() }
    }

    /// Borda rank of `resource` for `agent`. Panics on out-of-range indices;
    /// see [`Instance::try_rank`].
    #[inline]
    pub fn rank(&self, agent: Agent, resource: Resource) -> usize {
        let n = self.n();
        assert!(agent < n && resource < n, "index out of range");
        self.ranks[agent * n + resource] as usize
    }

    pub fn try_rank(&self, agent: Agent, resource: Resource) -> Result<usize> {
        let n = self.n();
        if agent >= n || resource >= n {
            return invalid(format!(
                "rank query (a{}, r{}) out of range for n = {n}",
                agent + 1,
                resource + 1
            ));
        }
        Ok(self.rank(agent, resource))
    }

    /// Strict preference of `agent` for `a` over `b`.
    #[inline]
    pub fn prefers(&self, agent: Agent, a: Resource, b: Resource) -> bool {
        self.rank(agent, a) > self.rank(agent, b)
    }

    /// Ranks of the resources held in `allocation`, agent by agent.
    pub fn ranks_of(&self, allocation: &Allocation) -> Vec<usize> {
        allocation
            .holdings()
            .iter()
            .enumerate()
            .map(|(a, &r)| self.rank(a, r))
            .collect()
    }

    /// Sum of ranks (the "average rank" objective, kept unnormalised).
    pub fn ark(&self, allocation: &Allocation) -> u64 {
        self.ranks_of(allocation).iter().map(|&r| r as u64).sum()
    }

    /// Minimum rank over agents.
    pub fn mrk(&self, allocation: &Allocation) -> usize {
        self.ranks_of(allocation).into_iter().min().unwrap_or(0)
    }

    /// Whether every agent's top resource is distinct and held by her.
    pub fn everyone_holds_top(&self) -> bool {
        (0..self.n()).all(|a| self.endowment.get(a) == self.profile[a].top())
    }
}
