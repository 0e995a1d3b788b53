use std::collections::{HashMap, VecDeque};

use crate::dynamics::DEFAULT_ENUMERATION_BOUND;
use crate::error::{MarketError, Result};
use crate::market::{improving_swaps, is_individually_rational, is_stable, Allocation, Deal, Instance};

fn guard(n: usize) -> Result<()> {
    if n > DEFAULT_ENUMERATION_BOUND {
        return Err(MarketError::TooLarge { n, bound: DEFAULT_ENUMERATION_BOUND });
    }
    Ok(())
}

/// Lexicographic successor of a permutation, in place.
fn next_permutation(items: &mut [usize]) -> bool {
    let Some(i) = items.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = items.iter().rposition(|&x| x > items[i]).expect("a larger element follows");
    items.swap(i, j);
    items[i + 1..].reverse();
    true
}

/// All `n!` allocations in lexicographic order of holdings.
pub fn all_allocations(n: usize) -> Result<Vec<Allocation>> {
    guard(n)?;
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Allocation::new(current.clone())?);
        if !next_permutation(&mut current) {
            return Ok(out);
        }
    }
}

/// Every allocation admitting no improving deal of size at most `k`.
pub fn stable_set(instance: &Instance, k: usize) -> Result<Vec<Allocation>> {
    let mut out = Vec::new();
    for allocation in all_allocations(instance.n())? {
        if is_stable(instance, &allocation, k)? {
            out.push(allocation);
        }
    }
    Ok(out)
}

/// Pareto-optimality by search: looks for a different allocation in which
/// every agent is at least as well off.
pub fn is_pareto_optimal_brute(instance: &Instance, allocation: &Allocation) -> bool {
    let n = instance.n();
    let floor: Vec<usize> = (0..n).map(|a| instance.rank(a, allocation.get(a))).collect();
    fn search(instance: &Instance, floor: &[usize], base: &Allocation, agent: usize, used: &mut [bool], differs: bool) -> bool {
        if agent == floor.len() {
            return differs;
        }
        for r in 0..floor.len() {
            if !used[r] && instance.rank(agent, r) >= floor[agent] {
                used[r] = true;
                let found = search(instance, floor, base, agent + 1, used, differs || r != base.get(agent));
                used[r] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    !search(instance, &floor, allocation, 0, &mut vec![false; n], false)
}

/// Every Pareto-optimal allocation, found by exhaustive search.
pub fn pareto_optimal_set(instance: &Instance) -> Result<Vec<Allocation>> {
    Ok(all_allocations(instance.n())?
        .into_iter()
        .filter(|a| is_pareto_optimal_brute(instance, a))
        .collect())
}

/// A shortest sequence of improving swaps leading from the endowment to
/// `target`, or `None` if no such sequence exists.
pub fn reachable_by_swaps(instance: &Instance, target: &Allocation) -> Result<Option<Vec<Deal>>> {
    guard(instance.n())?;
    let start = instance.endowment().clone();
    let mut parent: HashMap<Allocation, Option<(Allocation, Deal)>> = HashMap::from([(start.clone(), None)]);
    let mut queue = VecDeque::from([start]);
    while let Some(current) = queue.pop_front() {
        if &current == target {
            let mut path = Vec::new();
            let mut node = current;
            while let Some(Some((prev, deal))) = parent.get(&node) {
                path.push(deal.clone());
                node = prev.clone();
            }
            path.reverse();
            return Ok(Some(path));
        }
        for (a, b) in improving_swaps(instance, &current) {
            let mut next = current.clone();
            next.swap(a, b);
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((current.clone(), Deal::swap(a, b))));
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

/// Applies `deals` in order from `start`, returning the final allocation if
/// every deal is improving where it is applied.
pub fn replay_improving(instance: &Instance, start: &Allocation, deals: &[Deal]) -> Option<Allocation> {
    let mut current = start.clone();
    for deal in deals {
        if !crate::market::is_improving(instance, &current, deal) {
            return None;
        }
        current.apply_in_place(deal);
    }
    Some(current)
}

/// Welfare objective for price-of-anarchy computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    Ark,
    Mrk,
}

impl Objective {
    pub fn value(self, instance: &Instance, allocation: &Allocation) -> u64 {
        match self {
            Objective::Ark => instance.ark(allocation),
            Objective::Mrk => instance.mrk(allocation) as u64,
        }
    }
}

/// An exact non-negative ratio `numerator / denominator`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub numerator: u64,
    pub denominator: u64,
}

impl Ratio {
    pub fn new(numerator: u64, denominator: u64) -> Self {
        Self { numerator, denominator }
    }

    pub fn to_f64(self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    /// Cross-multiplied comparison, exact for the magnitudes used here.
    pub fn at_least(self, other: Ratio) -> bool {
        self.numerator as u128 * other.denominator as u128 >= other.numerator as u128 * self.denominator as u128
    }

    pub fn same_value(self, other: Ratio) -> bool {
        self.numerator as u128 * other.denominator as u128 == other.numerator as u128 * self.denominator as u128
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Best value over IR allocations that are stable for every deal size,
/// divided by the worst value over IR allocations stable for swaps.
pub fn empirical_poa(instance: &Instance, objective: Objective) -> Result<Ratio> {
    let n = instance.n();
    let mut best = 0;
    let mut worst = u64::MAX;
    for allocation in all_allocations(n)? {
        if !is_individually_rational(instance, &allocation) || !is_stable(instance, &allocation, 2.min(n.max(1)))? {
            continue;
        }
        let value = objective.value(instance, &allocation);
        worst = worst.min(value);
        if is_stable(instance, &allocation, n.max(1))? {
            best = best.max(value);
        }
    }
    Ok(Ratio::new(best, worst))
}
