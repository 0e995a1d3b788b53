use rand::Rng;

use crate::market::{Agent, Allocation, Deal, DealTrace, Instance};

/// Cycles of the current TTC graph, each agent pointing to the owner of her
/// favourite remaining resource. Returned in giving order, sorted by
/// smallest agent.
fn current_cycles(instance: &Instance, active: &[bool], owners: &[Agent]) -> Vec<Deal> {
    let n = instance.n();
    let receives_from: Vec<Option<Agent>> = (0..n)
        .map(|a| {
            active[a].then(|| {
                let top = instance
                    .order(a)
                    .top_among(|r| active[owners[r]])
                    .expect("an active agent sees her own resource");
                owners[top]
            })
        })
        .collect();

    // 0 = unvisited, 1 = on current walk, 2 = done
    let mut state = vec![0u8; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if !active[start] || state[start] != 0 {
            continue;
        }
        let mut walk = Vec::new();
        let mut cur = start;
        while state[cur] == 0 {
            state[cur] = 1;
            walk.push(cur);
            cur = receives_from[cur].expect("pointers stay among active agents");
        }
        if state[cur] == 1 {
            let from = walk.iter().position(|&a| a == cur).expect("cur is on the walk");
            let mut cycle = walk[from..].to_vec();
            // walk follows "receives from"; the deal lists givers first.
            cycle.reverse();
            cycles.push(Deal::new(cycle).expect("cycle agents are distinct"));
        }
        for a in walk {
            state[a] = 2;
        }
    }
    cycles.sort();
    cycles
}

fn run(instance: &Instance, mut choose: impl FnMut(Vec<Deal>) -> Vec<Deal>) -> (Allocation, DealTrace) {
    let n = instance.n();
    let owners = instance.endowment().owners();
    let mut active = vec![true; n];
    let mut remaining = n;
    let mut current = instance.endowment().clone();
    let mut trace = DealTrace::new(current.clone());
    while remaining > 0 {
        let cycles = current_cycles(instance, &active, &owners);
        for deal in choose(cycles) {
            current.apply_in_place(&deal);
            for &a in deal.agents() {
                active[a] = false;
                remaining -= 1;
            }
            trace.push(deal, current.clone());
        }
    }
    (current, trace)
}

/// Top Trading Cycle. Every round implements all (vertex-disjoint) cycles of
/// the current graph, in order of their smallest agent.
pub fn ttc(instance: &Instance) -> (Allocation, DealTrace) {
    run(instance, |cycles| cycles)
}

/// TTC implementing a single uniformly chosen cycle per round. The outcome
/// is the same as [`ttc`]; only the trace order differs.
pub fn ttc_random_order<R: Rng + ?Sized>(instance: &Instance, rng: &mut R) -> (Allocation, DealTrace) {
    run(instance, |mut cycles| {
        let pick = rng.gen_range(0..cycles.len());
        vec![cycles.swap_remove(pick)]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::market::LinearOrder;

    #[test]
    fn everyone_endowed_with_top_gives_picks() {
        let profile = vec![
            LinearOrder::from_labels(&[2, 1, 3]).unwrap(),
            LinearOrder::from_labels(&[1, 2, 3]).unwrap(),
            LinearOrder::from_labels(&[3, 1, 2]).unwrap(),
        ];
        let inst = Instance::new(profile, Allocation::from_labels(&[2, 1, 3]).unwrap(), None).unwrap();
        let (out, trace) = ttc(&inst);
        assert_eq!(&out, inst.endowment());
        assert_eq!(trace.num_deals(), 3);
        assert!(trace.deals().all(Deal::is_pick));
    }

    #[test]
    fn three_cycle_in_one_round() {
        let profile = vec![
            LinearOrder::from_labels(&[2, 1, 3]).unwrap(),
            LinearOrder::from_labels(&[3, 2, 1]).unwrap(),
            LinearOrder::from_labels(&[1, 3, 2]).unwrap(),
        ];
        let inst = Instance::new(profile, Allocation::identity(3), None).unwrap();
        let (out, trace) = ttc(&inst);
        assert_eq!(out, Allocation::from_labels(&[2, 3, 1]).unwrap());
        assert_eq!(trace.num_deals(), 1);
        assert_eq!(trace.max_size(), 3);
        assert!(trace.replays());
    }
}
