use crate::error::{invalid, Result};
use crate::market::{Allocation, Deal, Instance, LinearOrder};
use crate::sp::{is_single_peaked, Axis};

/// A worst-case instance together with its worst and best stable outcomes
/// and the swap sequences from the endowment claimed to reach them.
#[derive(Clone, Debug)]
pub struct PoaConstruction {
    pub instance: Instance,
    pub worst: Allocation,
    pub best: Allocation,
    pub worst_sequence: Vec<Deal>,
    pub best_sequence: Vec<Deal>,
}

fn order(labels: impl IntoIterator<Item = usize>) -> LinearOrder {
    let ranking: Vec<usize> = labels.into_iter().map(|l| l - 1).collect();
    LinearOrder::new(ranking).expect("construction yields permutations")
}

fn alloc(labels: impl IntoIterator<Item = usize>) -> Allocation {
    let holdings: Vec<usize> = labels.into_iter().map(|l| l - 1).collect();
    Allocation::new(holdings).expect("construction yields permutations")
}

fn swap(a: usize, b: usize) -> Deal {
    Deal::swap(a - 1, b - 1)
}

fn at_least_four(n: usize) -> Result<()> {
    if n < 4 {
        return invalid(format!("the construction needs n >= 4, got {n}"));
    }
    Ok(())
}

/// Average-rank family: agent 1 ranks r(n-1) ≻ rn ≻ r(n-2) ≻ … ≻ r1 and
/// agent i ≥ 2 ranks r(i-1) ≻ … ≻ r1 ≻ ri ≻ … ≻ rn, with endowment
/// ⟨r2, …, rn, r1⟩.
pub fn poa_ark_instance(n: usize) -> Result<PoaConstruction> {
    at_least_four(n)?;
    let mut profile = vec![order([n - 1, n].into_iter().chain((1..=n - 2).rev()))];
    for i in 2..=n {
        profile.push(order((1..i).rev().chain(i..=n)));
    }
    let endowment = alloc((2..=n).chain([1]));
    let instance = Instance::new(profile, endowment, Some(Axis::identity(n)))?;

    let worst = alloc([n - 1].into_iter().chain(2..=n - 2).chain([n, 1]));
    let best = alloc([n].into_iter().chain(1..n));
    let worst_sequence = (2..=n - 2).map(|i| swap(1, i)).collect();
    let mut best_sequence = Vec::new();
    for i in 1..n / 2 {
        best_sequence.push(swap(2 * i, n));
        best_sequence.push(swap(2 * i + 1, 1));
    }
    if n % 2 == 1 {
        best_sequence.pop();
        best_sequence.push(swap(n - 2, n));
        best_sequence.push(swap(n - 1, 1));
        best_sequence.push(swap(n - 1, n - 2));
    }
    Ok(PoaConstruction { instance, worst, best, worst_sequence, best_sequence })
}

/// Minimum-rank family: agent 1 ranks r1 ≻ … ≻ rn, agent 1 < i < n ranks
/// ri ≻ r(i+1) ≻ r(i-1) ≻ … ≻ r1 ≻ r(i+2) ≻ … ≻ rn and agent n ranks
/// r2 ≻ r1 ≻ r3 ≻ … ≻ rn, with endowment ⟨r(n-1), r1, …, r(n-2), rn⟩.
///
/// The sequence `⟨a1, ai⟩` for `i = n-1, …, 2` ends in the worst outcome
/// (the identity) and the sequence of couples ends in the best one.
pub fn poa_mrk_instance(n: usize) -> Result<PoaConstruction> {
    at_least_four(n)?;
    let mut profile = vec![order(1..=n)];
    for i in 2..n {
        profile.push(order([i, i + 1].into_iter().chain((1..i).rev()).chain(i + 2..=n)));
    }
    profile.push(order([2, 1].into_iter().chain(3..=n)));
    let endowment = alloc([n - 1].into_iter().chain(1..=n - 2).chain([n]));
    let instance = Instance::new(profile, endowment, Some(Axis::identity(n)))?;

    let worst = alloc(1..=n);
    let best = alloc([1].into_iter().chain(3..=n).chain([2]));
    let worst_sequence = (2..n).rev().map(|i| swap(1, i)).collect();
    let mut best_sequence = Vec::new();
    let last = if n.is_multiple_of(2) { 4 } else { 5 };
    for i in (last..=n).rev().step_by(2) {
        best_sequence.push(swap(i - 1, n));
        best_sequence.push(swap(i - 2, 1));
    }
    if n % 2 == 1 {
        best_sequence.push(swap(2, n));
        best_sequence.push(swap(1, n));
    }
    Ok(PoaConstruction { instance, worst, best, worst_sequence, best_sequence })
}

/// Single-peaked order (over axis positions) peaking at `peak` that visits
/// the side toward the nearer axis extreme first.
fn nearer_side_first(n: usize, peak: usize) -> Vec<usize> {
    let left = (0..peak).rev();
    let right = peak + 1..n;
    let mut out = vec![peak];
    if peak < n - 1 - peak {
        out.extend(left.chain(right));
    } else {
        out.extend(right.chain(left));
    }
    out
}

/// Single-peaked order peaking at `peak` with `peak - 1` second, then the rest
/// of the left side, then the right side.
fn left_side_first(n: usize, peak: usize) -> Vec<usize> {
    let mut out = vec![peak];
    out.extend((0..peak).rev().chain(peak + 1..n));
    out
}

/// First adjacent pair of axis positions `(s-1, s)` right of the peak of
/// `positions` (a ranking of axis positions) where `s` is preferred.
fn right_violation(positions: &[usize]) -> Option<(usize, usize)> {
    let n = positions.len();
    let mut place = vec![0; n];
    for (i, &p) in positions.iter().enumerate() {
        place[p] = i;
    }
    let t = positions[0];
    (t + 2..n).find(|&s| place[s] < place[s - 1]).map(|s| (t, s))
}

/// Instance on which swap dynamics stop at a Pareto-dominated allocation,
/// built around an order that is not single-peaked with respect to `axis`.
///
/// Agent 1 gets `non_sp_order`; with `t` its peak and `(s-1, s)` the axis
/// positions of a violating pair right of the peak, agents `2..=t` hold
/// their top r(i-1), agents `t+1..=s` peak at ri and hold their second
/// r(i-1), agents after `s` hold their top ri, and agent 1 holds rs (all
/// indices along the axis). Violations left of the peak are handled on the
/// reversed axis.
pub fn maximality_instance(axis: &Axis, non_sp_order: &LinearOrder) -> Result<Instance> {
    let n = axis.len();
    if is_single_peaked(non_sp_order, axis)? {
        return invalid("the order is single-peaked with respect to the axis");
    }
    let along = |axis: &Axis| -> Vec<usize> { non_sp_order.ranking().iter().map(|&r| axis.position(r)).collect() };
    let reversed = axis.reversed();
    let (axis, (t, s)) = match right_violation(&along(axis)) {
        Some(found) => (axis.clone(), found),
        None => {
            let found = right_violation(&along(&reversed)).expect("a non single-peaked order violates one side");
            (reversed, found)
        }
    };

    let mut profile = vec![non_sp_order.clone()];
    let mut holdings = vec![axis.at(s)];
    for j in 1..n {
        let (ranking, held) = if j <= t {
            (nearer_side_first(n, j - 1), j - 1)
        } else if j <= s {
            (left_side_first(n, j), j - 1)
        } else {
            (nearer_side_first(n, j), j)
        };
        profile.push(LinearOrder::new(ranking.into_iter().map(|p| axis.at(p)).collect())?);
        holdings.push(axis.at(held));
    }
    Instance::new(profile, Allocation::new(holdings)?, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::market::{is_pareto_optimal, is_stable};
    use crate::oracles::replay_improving;

    #[test]
    fn ark_family_values() {
        for n in 4..=12 {
            let c = poa_ark_instance(n).unwrap();
            let n64 = n as u64;
            assert_eq!(c.instance.ark(&c.best), (n64 - 1) * (n64 + 1));
            assert_eq!(c.instance.ark(&c.worst), n64 * (n64 + 1) / 2);
            assert_eq!(replay_improving(&c.instance, c.instance.endowment(), &c.worst_sequence), Some(c.worst.clone()));
            assert_eq!(replay_improving(&c.instance, c.instance.endowment(), &c.best_sequence), Some(c.best.clone()));
        }
        assert!(poa_ark_instance(3).is_err());
    }

    #[test]
    fn mrk_family_values() {
        for n in 4..=12 {
            let c = poa_mrk_instance(n).unwrap();
            assert_eq!(c.instance.mrk(&c.best), n - 1);
            assert_eq!(c.instance.mrk(&c.worst), 1);
            assert!(is_stable(&c.instance, &c.worst, 2).unwrap());
            assert_eq!(replay_improving(&c.instance, c.instance.endowment(), &c.worst_sequence), Some(c.worst.clone()));
            assert_eq!(replay_improving(&c.instance, c.instance.endowment(), &c.best_sequence), Some(c.best.clone()));
        }
    }

    #[test]
    fn maximality_on_five_resources() {
        let axis = Axis::identity(5);
        let star = LinearOrder::from_labels(&[3, 5, 4, 2, 1]).unwrap();
        let inst = maximality_instance(&axis, &star).unwrap();
        assert!(is_stable(&inst, inst.endowment(), 2).unwrap());
        assert!(!is_pareto_optimal(&inst, inst.endowment()));
        let mut tops: Vec<_> = inst.profile().iter().map(|o| o.top()).collect();
        tops.sort();
        assert_eq!(tops, vec![0, 1, 2, 3, 4]);
        assert!(maximality_instance(&axis, &LinearOrder::from_labels(&[3, 2, 4, 1, 5]).unwrap()).is_err());
    }

    #[test]
    fn maximality_mirrors_left_violations() {
        let axis = Axis::identity(5);
        let star = LinearOrder::from_labels(&[4, 2, 3, 5, 1]).unwrap();
        let inst = maximality_instance(&axis, &star).unwrap();
        assert!(is_stable(&inst, inst.endowment(), 2).unwrap());
        assert!(!is_pareto_optimal(&inst, inst.endowment()));
    }
}
