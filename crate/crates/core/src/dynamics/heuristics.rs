use rand::Rng;

use super::{DynamicsConfig, Heuristic};
use crate::market::{enumerate_improving, improving_swaps, Agent, Allocation, Deal, Instance};
use crate::sp::{rng_from_seed, SeededRng};

/// Pair order scanned by the round-robin-over-pairs heuristic.
///
/// Pairs are grouped by index distance `d = 1, …, n−1`. Within a distance
/// the pairs `(i, i+d)` whose `i mod 2d < d` come first (they are pairwise
/// disjoint), then the rest. For `n = 6` this starts (1,2), (3,4), (5,6),
/// (2,3), (4,5), (1,3), (2,4) in 1-based labels and ends with (1,6).
pub fn round_robin_pair_sequence(n: usize) -> Vec<(Agent, Agent)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for d in 1..n {
        let starts = 0..n - d;
        pairs.extend(starts.clone().filter(|i| i % (2 * d) < d).map(|i| (i, i + d)));
        pairs.extend(starts.filter(|i| i % (2 * d) >= d).map(|i| (i, i + d)));
    }
    pairs
}

fn lexicographic_pairs(n: usize) -> Vec<(Agent, Agent)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

pub(super) struct Selector<'a> {
    instance: &'a Instance,
    k: usize,
    heuristic: Heuristic,
    rng: SeededRng,
    pairs: Vec<(Agent, Agent)>,
    traded: Vec<bool>,
}

impl<'a> Selector<'a> {
    pub(super) fn new(instance: &'a Instance, config: &DynamicsConfig) -> Self {
        let n = instance.n();
        let pairs = match config.heuristic {
            Heuristic::RoundRobinAgents => lexicographic_pairs(n),
            Heuristic::RoundRobinPairs => round_robin_pair_sequence(n),
            _ => Vec::new(),
        };
        let traded = if config.heuristic == Heuristic::PriorityNew { vec![false; n * n] } else { Vec::new() };
        Self {
            instance,
            k: config.k_max.min(n),
            heuristic: config.heuristic,
            rng: rng_from_seed(config.seed),
            pairs,
            traded,
        }
    }

    fn swap_improves(&self, current: &Allocation, a: Agent, b: Agent) -> bool {
        let (ra, rb) = (current.get(a), current.get(b));
        self.instance.prefers(a, rb, ra) && self.instance.prefers(b, ra, rb)
    }

    pub(super) fn next_deal(&mut self, current: &Allocation) -> Option<Deal> {
        if self.k < 2 {
            return None;
        }
        match self.heuristic {
            Heuristic::Uniform if self.k > 2 => {
                let mut deals = enumerate_improving(self.instance, current, self.k).expect("k within range");
                if deals.is_empty() {
                    return None;
                }
                let i = self.rng.gen_range(0..deals.len());
                Some(deals.swap_remove(i))
            }
            Heuristic::Uniform => {
                let swaps = improving_swaps(self.instance, current);
                if swaps.is_empty() {
                    return None;
                }
                let (a, b) = swaps[self.rng.gen_range(0..swaps.len())];
                Some(Deal::swap(a, b))
            }
            Heuristic::RoundRobinAgents | Heuristic::RoundRobinPairs => self
                .pairs
                .iter()
                .find(|&&(a, b)| self.swap_improves(current, a, b))
                .map(|&(a, b)| Deal::swap(a, b)),
            Heuristic::PriorityNew => {
                let n = self.instance.n();
                let swaps = improving_swaps(self.instance, current);
                if swaps.is_empty() {
                    return None;
                }
                let fresh: Vec<_> = swaps.iter().copied().filter(|&(a, b)| !self.traded[a * n + b]).collect();
                let pool = if fresh.is_empty() { &swaps } else { &fresh };
                let (a, b) = pool[self.rng.gen_range(0..pool.len())];
                Some(Deal::swap(a, b))
            }
            Heuristic::PriorityWorst => {
                let mut order: Vec<Agent> = (0..self.instance.n()).collect();
                order.sort_by_key(|&a| (self.instance.rank(a, current.get(a)), a));
                for &a in &order {
                    for &b in &order {
                        if a != b && self.swap_improves(current, a, b) {
                            return Some(Deal::swap(a, b));
                        }
                    }
                }
                None
            }
        }
    }

    pub(super) fn record(&mut self, deal: &Deal) {
        if self.heuristic == Heuristic::PriorityNew {
            if let [a, b] = *deal.agents() {
                let n = self.instance.n();
                self.traded[a * n + b] = true;
                self.traded[b * n + a] = true;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_sequence_starts_with_disjoint_pairs() {
        let seq = round_robin_pair_sequence(6);
        let labels: Vec<_> = seq.iter().map(|&(a, b)| (a + 1, b + 1)).collect();
        assert_eq!(&labels[..5], &[(1, 2), (3, 4), (5, 6), (2, 3), (4, 5)]);
        assert_eq!(&labels[5..7], &[(1, 3), (2, 4)]);
        assert_eq!(*labels.last().unwrap(), (1, 6));
    }

    #[test]
    fn pair_sequence_covers_every_pair_once() {
        for n in 0..12 {
            let mut seq = round_robin_pair_sequence(n);
            assert_eq!(seq.len(), n * n.saturating_sub(1) / 2);
            seq.sort();
            assert_eq!(seq, lexicographic_pairs(n));
        }
    }
}
