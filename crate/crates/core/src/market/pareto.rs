use super::{Allocation, Instance, WantsMatrix};

/// `better` Pareto-dominates `base`: nobody is worse off and somebody is
/// strictly better off.
pub fn pareto_dominates(instance: &Instance, better: &Allocation, base: &Allocation) -> bool {
    let mut strict = false;
    for a in 0..instance.n() {
        let (x, y) = (instance.rank(a, better.get(a)), instance.rank(a, base.get(a)));
        if x < y {
            return false;
        }
        strict |= x > y;
    }
    strict
}

/// Pareto-optimality via the improvement digraph: with strict preferences in
/// a house market, an allocation is Pareto-optimal iff the relation "a wants
/// b's resource" is acyclic.
pub fn is_pareto_optimal(instance: &Instance, allocation: &Allocation) -> bool {
    let wants = WantsMatrix::new(instance, allocation);
    let n = wants.n();
    // Kahn's algorithm on edges b -> a whenever b wants a's resource.
    let mut indegree = vec![0usize; n];
    for b in 0..n {
        for (a, degree) in indegree.iter_mut().enumerate() {
            if wants.wants(b, a) {
                *degree += 1;
            }
        }
    }
    let mut queue: Vec<usize> = (0..n).filter(|&a| indegree[a] == 0).collect();
    let mut removed = 0;
    while let Some(b) = queue.pop() {
        removed += 1;
        for (a, degree) in indegree.iter_mut().enumerate() {
            if wants.wants(b, a) {
                *degree -= 1;
                if *degree == 0 {
                    queue.push(a);
                }
            }
        }
    }
    removed == n
}

/// Every agent weakly prefers her resource to her endowment.
pub fn is_individually_rational(instance: &Instance, allocation: &Allocation) -> bool {
    let endowment = instance.endowment();
    (0..instance.n()).all(|a| instance.rank(a, allocation.get(a)) >= instance.rank(a, endowment.get(a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::market::LinearOrder;

    fn example() -> Instance {
        let prefs = [[3, 4, 5, 2, 1], [3, 4, 5, 2, 1], [4, 5, 3, 2, 1], [3, 4, 5, 2, 1], [1, 2, 3, 4, 5]];
        let profile = prefs.iter().map(|p| LinearOrder::from_labels(p).unwrap()).collect();
        Instance::new(profile, Allocation::identity(5), None).unwrap()
    }

    #[test]
    fn boxed_allocation_dominates_endowment() {
        let inst = example();
        let boxed = Allocation::from_labels(&[2, 4, 5, 3, 1]).unwrap();
        assert!(pareto_dominates(&inst, &boxed, inst.endowment()));
        assert!(!pareto_dominates(&inst, inst.endowment(), &boxed));
        assert!(!pareto_dominates(&inst, &boxed, &boxed));
        assert!(!is_pareto_optimal(&inst, inst.endowment()));
    }

    #[test]
    fn ttc_outcome_is_rational() {
        let inst = example();
        assert!(is_individually_rational(&inst, inst.endowment()));
        let ttc = Allocation::from_labels(&[5, 2, 4, 3, 1]).unwrap();
        assert!(is_individually_rational(&inst, &ttc));
        assert!(is_pareto_optimal(&inst, &ttc));
        // a3 would drop from r3 to r1.
        let bad = Allocation::from_labels(&[3, 2, 1, 4, 5]).unwrap();
        assert!(!is_individually_rational(&inst, &bad));
    }

    #[test]
    fn all_tops_is_pareto_optimal() {
        let profile = vec![
            LinearOrder::from_labels(&[2, 1, 3]).unwrap(),
            LinearOrder::from_labels(&[1, 2, 3]).unwrap(),
            LinearOrder::from_labels(&[3, 2, 1]).unwrap(),
        ];
        let inst = Instance::new(profile, Allocation::from_labels(&[2, 1, 3]).unwrap(), None).unwrap();
        assert!(is_pareto_optimal(&inst, inst.endowment()));
    }
}
