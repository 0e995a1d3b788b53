//! Exact average-rank and minimum-rank optimizers.
//!
//! Both objectives are solved over perfect assignments of resources to
//! agents, optionally restricted to individually rational pairs (an agent may
//! only receive resources she ranks at least as high as her endowment).
//! Among optimal allocations the lexicographically smallest holdings vector
//! is returned; `max_mrk` first maximizes the average rank among allocations
//! reaching the optimal minimum.

mod hungarian;
mod matching;

use crate::market::{Allocation, Instance};

fn pair_allowed(instance: &Instance, require_ir: bool, floor: usize, agent: usize, resource: usize) -> bool {
    let rank = instance.rank(agent, resource);
    rank >= floor && (!require_ir || rank >= instance.rank(agent, instance.endowment().get(agent)))
}

/// Maximum-ark assignment over the pairs accepted by `allowed`, which must
/// admit at least one perfect matching.
fn best_ark_within(instance: &Instance, allowed: &dyn Fn(usize, usize) -> bool) -> Allocation {
    let n = instance.n();
    let forbidden = (n * n + 1) as i64;
    let cost: Vec<Vec<i64>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|r| if allowed(a, r) { (n - instance.rank(a, r)) as i64 } else { forbidden })
                .collect()
        })
        .collect();
    let solution = hungarian::solve(&cost);
    debug_assert!(solution.columns.iter().enumerate().all(|(a, &r)| allowed(a, r)));
    let tight = |a: usize, r: usize| allowed(a, r) && solution.is_tight(&cost, a, r);
    let holdings = matching::lex_min_perfect_matching(tight, solution.columns.clone());
    Allocation::new(holdings).expect("assignment is a permutation")
}

/// Allocation maximizing the sum of ranks, with its value.
pub fn max_ark(instance: &Instance, require_ir: bool) -> (Allocation, u64) {
    let allocation = best_ark_within(instance, &|a, r| pair_allowed(instance, require_ir, 1, a, r));
    let value = instance.ark(&allocation);
    (allocation, value)
}

fn threshold_feasible(instance: &Instance, require_ir: bool, floor: usize) -> bool {
    let n = instance.n();
    let adjacency: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).filter(|&r| pair_allowed(instance, require_ir, floor, a, r)).collect())
        .collect();
    matching::perfect_matching(&adjacency).is_some()
}

/// Allocation maximizing the minimum rank, with its value.
pub fn max_mrk(instance: &Instance, require_ir: bool) -> (Allocation, usize) {
    let n = instance.n();
    if n == 0 {
        return (Allocation::identity(0), 0);
    }
    // Rank 1 is always feasible: every pair is allowed except IR-violating
    // ones, and the endowment avoids those.
    let (mut lo, mut hi) = (1, n);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if threshold_feasible(instance, require_ir, mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let allocation = best_ark_within(instance, &|a, r| pair_allowed(instance, require_ir, lo, a, r));
    (allocation, lo)
}
