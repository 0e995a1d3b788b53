use super::{Agent, Allocation, Deal, Instance};
use crate::error::{invalid, Result};

/// `wants(b, a)` holds when agent `b` strictly prefers `a`'s current
/// resource to her own. Improving deals are exactly the cycles of this
/// relation read in giving order.
pub struct WantsMatrix {
    n: usize,
    bits: Vec<bool>,
}

impl WantsMatrix {
    pub fn new(instance: &Instance, allocation: &Allocation) -> Self {
        let n = instance.n();
        let held = allocation.holdings();
        let mut bits = vec![false; n * n];
        for b in 0..n {
            let own = instance.rank(b, held[b]);
            for a in 0..n {
                bits[b * n + a] = instance.rank(b, held[a]) > own;
            }
        }
        Self { n, bits }
    }

    #[inline]
    pub fn wants(&self, b: Agent, a: Agent) -> bool {
        self.bits[b * self.n + a]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn improving_swap(&self, a: Agent, b: Agent) -> bool {
        self.wants(a, b) && self.wants(b, a)
    }

    /// Depth-first search for canonical cycles of length `2..=k_max`.
    /// `visit` returns `false` to stop the search early.
    fn cycles(&self, k_max: usize, visit: &mut dyn FnMut(&[Agent]) -> bool) {
        let mut path = Vec::with_capacity(k_max);
        let mut on_path = vec![false; self.n];
        for start in 0..self.n {
            path.push(start);
            on_path[start] = true;
            let go_on = self.extend(start, k_max, &mut path, &mut on_path, visit);
            on_path[start] = false;
            path.pop();
            if !go_on {
                return;
            }
        }
    }

    fn extend(
        &self,
        start: Agent,
        k_max: usize,
        path: &mut Vec<Agent>,
        on_path: &mut [bool],
        visit: &mut dyn FnMut(&[Agent]) -> bool,
    ) -> bool {
        let last = *path.last().expect("path is never empty");
        for next in start + 1..self.n {
            // `last` gives her resource to `next`.
            if on_path[next] || !self.wants(next, last) {
                continue;
            }
            path.push(next);
            if self.wants(start, next) && !visit(path) {
                path.pop();
                return false;
            }
            if path.len() < k_max {
                on_path[next] = true;
                let go_on = self.extend(start, k_max, path, on_path, visit);
                on_path[next] = false;
                if !go_on {
                    path.pop();
                    return false;
                }
            }
            path.pop();
        }
        true
    }
}

/// Whether applying `deal` to `allocation` makes every participant strictly
/// better off. Picks are never improving.
pub fn is_improving(instance: &Instance, allocation: &Allocation, deal: &Deal) -> bool {
    let agents = deal.agents();
    let k = agents.len();
    if k < 2 || agents.iter().any(|&a| a >= instance.n()) {
        return false;
    }
    let held = allocation.holdings();
    (0..k).all(|j| {
        let receiver = agents[j];
        let giver = agents[(j + k - 1) % k];
        instance.prefers(receiver, held[giver], held[receiver])
    })
}

/// All improving deals of size `2..=k_max`, canonical and duplicate-free,
/// ordered by size and then lexicographically.
pub fn enumerate_improving(
    instance: &Instance,
    allocation: &Allocation,
    k_max: usize,
) -> Result<Vec<Deal>> {
    let n = instance.n();
    if k_max < 2 || k_max > n {
        return invalid(format!("k_max = {k_max} must lie in [2, {n}]"));
    }
    let wants = WantsMatrix::new(instance, allocation);
    let mut deals = Vec::new();
    wants.cycles(k_max, &mut |cycle| {
        deals.push(Deal::new(cycle.to_vec()).expect("DFS paths are simple"));
        true
    });
    deals.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(deals)
}

/// Improving swap-deals as agent pairs `(a, b)` with `a < b`, in
/// lexicographic order.
pub fn improving_swaps(instance: &Instance, allocation: &Allocation) -> Vec<(Agent, Agent)> {
    let wants = WantsMatrix::new(instance, allocation);
    let n = instance.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if wants.improving_swap(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Whether some improving deal of size `2..=k` exists.
pub fn has_improving_deal(instance: &Instance, allocation: &Allocation, k: usize) -> bool {
    if k < 2 {
        return false;
    }
    let wants = WantsMatrix::new(instance, allocation);
    let k = k.min(instance.n());
    if k == 2 {
        let n = instance.n();
        return (0..n).any(|a| (a + 1..n).any(|b| wants.improving_swap(a, b)));
    }
    let mut found = false;
    wants.cycles(k, &mut |_| {
        found = true;
        false
    });
    found
}

/// Stability with respect to deals of size at most `k`, for `1 <= k <= n`.
pub fn is_stable(instance: &Instance, allocation: &Allocation, k: usize) -> Result<bool> {
    let n = instance.n();
    if k == 0 || k > n {
        return invalid(format!("k = {k} must lie in [1, {n}]"));
    }
    Ok(!has_improving_deal(instance, allocation, k))
}
