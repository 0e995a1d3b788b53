//! Single-peaked preference domains: axis checks, worst-restriction,
//! restriction to resource subsets, and the IC-SP / UP-SP cultures.

mod axis;
mod culture;

pub use axis::Axis;
pub(crate) use culture::splitmix64;
pub use culture::{
    derive_seed, generate_ic_sp, generate_instance, generate_up_sp, rng_from_seed, Culture,
    CultureSpec, EndowmentMode, SeededRng,
};

use crate::error::{invalid, Result};
use crate::market::{LinearOrder, Resource};

/// Whether `order` strictly decreases on both sides of its peak along
/// `axis`.
pub fn is_single_peaked(order: &LinearOrder, axis: &Axis) -> Result<bool> {
    if order.len() != axis.len() {
        return invalid(format!(
            "order ranks {} resources but the axis has {}",
            order.len(),
            axis.len()
        ));
    }
    Ok(single_peaked_by(|r| order.position(r), axis.order()))
}

/// [`is_single_peaked`] for plain sequences over an arbitrary resource set,
/// such as restricted orders and axes.
pub fn is_single_peaked_sequence(order: &[Resource], axis: &[Resource]) -> Result<bool> {
    let mut a: Vec<_> = order.to_vec();
    let mut b: Vec<_> = axis.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a != b || a.windows(2).any(|w| w[0] == w[1]) {
        return invalid("order and axis must list the same distinct resources");
    }
    let pos = |r: Resource| order.iter().position(|&x| x == r).expect("same resource set");
    Ok(single_peaked_by(pos, axis))
}

fn single_peaked_by(position: impl Fn(Resource) -> usize, axis: &[Resource]) -> bool {
    let Some(peak) = (0..axis.len()).min_by_key(|&i| position(axis[i])) else {
        return true;
    };
    let rising = |w: &[Resource]| position(w[0]) < position(w[1]);
    // Left of the peak, positions must grow moving left; right of it, moving right.
    axis[..=peak].windows(2).all(|w| position(w[1]) < position(w[0]))
        && axis[peak..].windows(2).all(rising)
}

/// A triple of resources each of which some agent ranks last among the three,
/// if one exists.
pub fn worst_restriction_violation(profile: &[LinearOrder]) -> Option<(Resource, Resource, Resource)> {
    let n = profile.first()?.len();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let mut last = [false; 3];
                for o in profile {
                    let (px, py, pz) = (o.position(x), o.position(y), o.position(z));
                    let worst = if px > py && px > pz {
                        0
                    } else if py > pz {
                        1
                    } else {
                        2
                    };
                    last[worst] = true;
                    if last == [true; 3] {
                        return Some((x, y, z));
                    }
                }
            }
        }
    }
    None
}

/// For every triple of resources, some member is never ranked last among the
/// three.
pub fn is_worst_restricted(profile: &[LinearOrder]) -> bool {
    worst_restriction_violation(profile).is_none()
}

/// `sequence` restricted to the resources in `subset`, preserving order.
pub fn restrict_sequence(sequence: &[Resource], subset: &[Resource]) -> Result<Vec<Resource>> {
    if subset.is_empty() {
        return invalid("cannot restrict to an empty resource subset");
    }
    if let Some(r) = subset.iter().find(|r| !sequence.contains(r)) {
        return invalid(format!("resource r{} is not part of the sequence", r + 1));
    }
    Ok(sequence.iter().copied().filter(|r| subset.contains(r)).collect())
}

/// Every order of `profile` restricted to `subset`.
pub fn restrict_profile(profile: &[LinearOrder], subset: &[Resource]) -> Result<Vec<Vec<Resource>>> {
    profile.iter().map(|o| o.restrict(subset)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(labels: &[usize]) -> LinearOrder {
        LinearOrder::from_labels(labels).unwrap()
    }

    #[test]
    fn the_four_orders_on_three_resources() {
        let axis = Axis::identity(3);
        for labels in [[1, 2, 3], [3, 2, 1], [2, 1, 3], [2, 3, 1]] {
            assert!(is_single_peaked(&order(&labels), &axis).unwrap(), "{labels:?}");
        }
        assert!(!is_single_peaked(&order(&[3, 1, 2]), &axis).unwrap());
        assert!(!is_single_peaked(&order(&[1, 3, 2]), &axis).unwrap());
    }

    #[test]
    fn tiny_orders_are_always_single_peaked() {
        assert!(is_single_peaked(&order(&[1]), &Axis::identity(1)).unwrap());
        for labels in [[1, 2], [2, 1]] {
            for axis in [Axis::identity(2), Axis::identity(2).reversed()] {
                assert!(is_single_peaked(&order(&labels), &axis).unwrap());
            }
        }
    }

    #[test]
    fn mismatched_sizes_are_rejected() {
        assert!(is_single_peaked(&order(&[1, 2]), &Axis::identity(3)).is_err());
        assert!(is_single_peaked_sequence(&[0, 1], &[0, 2]).is_err());
    }

    #[test]
    fn cyclic_profile_is_not_worst_restricted() {
        let profile = vec![order(&[1, 2, 3]), order(&[3, 1, 2]), order(&[2, 3, 1])];
        assert_eq!(worst_restriction_violation(&profile), Some((0, 1, 2)));
        assert!(is_worst_restricted(&profile[..1]));
    }

    #[test]
    fn restriction_keeps_relative_order() {
        let o = order(&[3, 4, 5, 2, 1]);
        assert_eq!(o.restrict(&[2, 1, 0]).unwrap(), vec![2, 1, 0]);
        assert_eq!(o.restrict(&[3]).unwrap(), vec![3]);
        assert!(o.restrict(&[]).is_err());
        let axis = Axis::identity(5);
        let sub = [0, 2, 4];
        assert!(is_single_peaked_sequence(&o.restrict(&sub).unwrap(), &axis.restrict(&sub).unwrap()).unwrap());
    }
}
