use std::fmt;

use super::{check_permutation, fmt_labels, from_labels, Agent, Deal, Resource};
use crate::error::{invalid, Result};

/// A bijection from agents to resources: `holdings()[i]` is agent `i`'s
/// resource.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Allocation(Vec<Resource>);

impl Allocation {
    pub fn new(holdings: Vec<Resource>) -> Result<Self> {
        if let Err(e) = check_permutation(&holdings) {
            return invalid(format!("allocation is not a permutation: {e}"));
        }
        Ok(Self(holdings))
    }

    /// Builds an allocation from 1-based resource labels.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        Self::new(from_labels(labels))
    }

    /// Agent `i` holds resource `i`.
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn holdings(&self) -> &[Resource] {
        &self.0
    }

    pub fn into_holdings(self) -> Vec<Resource> {
        self.0
    }

    pub fn get(&self, agent: Agent) -> Resource {
        self.0[agent]
    }

    /// `owners()[r]` is the agent holding `r`.
    pub fn owners(&self) -> Vec<Agent> {
        let mut owners = vec![0; self.0.len()];
        for (a, &r) in self.0.iter().enumerate() {
            owners[r] = a;
        }
        owners
    }

    /// Applies `deal`: each agent of the cycle receives the resource of her
    /// predecessor, the first agent receiving the last agent's resource.
    pub fn apply_deal(&self, deal: &Deal) -> Result<Allocation> {
        if let Some(&a) = deal.agents().iter().find(|&&a| a >= self.len()) {
            return invalid(format!("deal agent a{} out of range for {} agents", a + 1, self.len()));
        }
        let mut next = self.clone();
        next.apply_in_place(deal);
        Ok(next)
    }

    /// In-place [`Allocation::apply_deal`]. Panics if an agent is out of range.
    pub fn apply_in_place(&mut self, deal: &Deal) {
        let agents = deal.agents();
        let k = agents.len();
        if k < 2 {
            return;
        }
        let last = self.0[agents[k - 1]];
        for j in (1..k).rev() {
            self.0[agents[j]] = self.0[agents[j - 1]];
        }
        self.0[agents[0]] = last;
    }

    /// Swaps the resources of two agents.
    pub fn swap(&mut self, a: Agent, b: Agent) {
        self.0.swap(a, b);
    }

    /// Decomposes the reallocation `self → target` into disjoint cycle deals
    /// of size at least 2, in order of their smallest agent.
    pub fn cycles_to(&self, target: &Allocation) -> Vec<Deal> {
        let owners = self.owners();
        let n = self.len();
        let mut seen = vec![false; n];
        let mut deals = Vec::new();
        for start in 0..n {
            if seen[start] || self.0[start] == target.0[start] {
                seen[start] = true;
                continue;
            }
            // Each agent receives from the current owner of her target
            // resource; walking "receives from" links backwards yields the
            // giving order.
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = owners[target.0[start]];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = owners[target.0[cur]];
            }
            cycle.reverse();
            deals.push(Deal::new(cycle).expect("cycle agents are distinct"));
        }
        deals
    }
}

impl fmt::Display for Allocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_labels(f, 'r', &self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_deal_exchanges_resources() {
        let pi = Allocation::from_labels(&[3, 2, 1]).unwrap();
        let next = pi.apply_deal(&Deal::from_labels(&[1, 3]).unwrap()).unwrap();
        assert_eq!(next, Allocation::from_labels(&[1, 2, 3]).unwrap());
    }

    #[test]
    fn pick_leaves_allocation_unchanged() {
        let pi = Allocation::from_labels(&[2, 3, 1]).unwrap();
        assert_eq!(pi.apply_deal(&Deal::pick(0)).unwrap(), pi);
    }

    #[test]
    fn three_cycle_has_order_three() {
        let pi = Allocation::from_labels(&[1, 2, 3, 4]).unwrap();
        let deal = Deal::from_labels(&[1, 3, 4]).unwrap();
        let once = pi.apply_deal(&deal).unwrap();
        // a3 receives a1's resource, a4 receives a3's, a1 receives a4's.
        assert_eq!(once, Allocation::from_labels(&[4, 2, 1, 3]).unwrap());
        let thrice = once.apply_deal(&deal).unwrap().apply_deal(&deal).unwrap();
        assert_eq!(thrice, pi);
    }

    #[test]
    fn out_of_range_deal_is_rejected() {
        let pi = Allocation::identity(3);
        assert!(pi.apply_deal(&Deal::swap(0, 5)).is_err());
    }

    #[test]
    fn cycles_to_reproduces_target() {
        let from = Allocation::from_labels(&[1, 2, 3, 4, 5]).unwrap();
        let to = Allocation::from_labels(&[2, 5, 4, 3, 1]).unwrap();
        let mut cur = from.clone();
        for d in from.cycles_to(&to) {
            cur.apply_in_place(&d);
        }
        assert_eq!(cur, to);
    }
}
