use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{invalid, MarketError, Result};
use crate::market::{enumerate_improving, Allocation, Instance};

/// Largest `n` accepted by the exhaustive state-space searches.
pub const DEFAULT_ENUMERATION_BOUND: usize = 7;

/// Every stable allocation reachable from the endowment through improving
/// deals of size at most `k_max`, for `n <= 7`.
pub fn reachable_outcomes(instance: &Instance, k_max: usize) -> Result<BTreeSet<Allocation>> {
    reachable_outcomes_bounded(instance, k_max, DEFAULT_ENUMERATION_BOUND)
}

pub fn reachable_outcomes_bounded(
    instance: &Instance,
    k_max: usize,
    bound: usize,
) -> Result<BTreeSet<Allocation>> {
    let n = instance.n();
    if n > bound {
        return Err(MarketError::TooLarge { n, bound });
    }
    if k_max < 2 {
        return invalid("k_max must be at least 2");
    }
    let k = k_max.min(n);
    let start = instance.endowment().clone();
    let mut leaves = BTreeSet::new();
    if k < 2 {
        leaves.insert(start);
        return Ok(leaves);
    }
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        let deals = enumerate_improving(instance, &cur, k)?;
        if deals.is_empty() {
            leaves.insert(cur);
            continue;
        }
        for deal in &deals {
            let next = cur.apply_deal(deal)?;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(leaves)
}
