use std::fmt;

use super::{check_permutation, from_labels, Resource};
use crate::error::{invalid, Result};

/// A strict, complete ranking of all resources, most preferred first.
///
/// Ranks follow the Borda convention: the top resource has rank `n`, the
/// worst has rank 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    ranking: Vec<Resource>,
    position: Vec<usize>,
}

impl LinearOrder {
    pub fn new(ranking: Vec<Resource>) -> Result<Self> {
        if ranking.is_empty() {
            return invalid("a linear order needs at least one resource");
        }
        if let Err(e) = check_permutation(&ranking) {
            return invalid(format!("ranking is not a permutation: {e}"));
        }
        let mut position = vec![0; ranking.len()];
        for (p, &r) in ranking.iter().enumerate() {
            position[r] = p;
        }
        Ok(Self { ranking, position })
    }

    /// Builds an order from 1-based resource labels (`[3, 1, 2]` is r3 ≻ r1 ≻ r2).
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        Self::new(from_labels(labels))
    }

    /// The order r1 ≻ r2 ≻ … ≻ rn.
    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect()).expect("identity is a permutation")
    }

    pub fn len(&self) -> usize {
        self.ranking.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranking.is_empty()
    }

    pub fn ranking(&self) -> &[Resource] {
        &self.ranking
    }

    pub fn top(&self) -> Resource {
        self.ranking[0]
    }

    /// Position of `r` in the ranking, 0 for the top.
    pub fn position(&self, r: Resource) -> usize {
        self.position[r]
    }

    /// Borda rank of `r`: `n` for the top, 1 for the worst. Panics if `r` is
    /// out of range.
    pub fn rank(&self, r: Resource) -> usize {
        self.len() - self.position[r]
    }

    /// Strict preference of `a` over `b`.
    pub fn prefers(&self, a: Resource, b: Resource) -> bool {
        self.position[a] < self.position[b]
    }

    /// Most preferred resource satisfying `available`.
    pub fn top_among(&self, mut available: impl FnMut(Resource) -> bool) -> Option<Resource> {
        self.ranking.iter().copied().find(|&r| available(r))
    }

    /// The ranking restricted to `subset`, keeping original resource labels
    /// and relative order.
    pub fn restrict(&self, subset: &[Resource]) -> Result<Vec<Resource>> {
        crate::sp::restrict_sequence(&self.ranking, subset)
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.ranking.iter().enumerate() {
            if i > 0 {
                write!(f, " \u{227b} ")?;
            }
            write!(f, "r{}", r + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_follow_borda_convention() {
        let o = LinearOrder::from_labels(&[3, 4, 5, 2, 1]).unwrap();
        assert_eq!(o.rank(2), 5);
        assert_eq!(o.rank(0), 1);
        assert_eq!(o.top(), 2);
        assert!(o.prefers(4, 1));
        let total: usize = (0..5).map(|r| o.rank(r)).sum();
        assert_eq!(total, 15);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(LinearOrder::new(vec![0, 0, 1]).is_err());
        assert!(LinearOrder::new(vec![0, 3, 1]).is_err());
        assert!(LinearOrder::from_labels(&[0, 1, 2]).is_err());
        assert!(LinearOrder::new(vec![]).is_err());
    }

    #[test]
    fn top_among_skips_unavailable() {
        let o = LinearOrder::from_labels(&[2, 3, 1]).unwrap();
        assert_eq!(o.top_among(|r| r != 1), Some(2));
        assert_eq!(o.top_among(|_| false), None);
    }
}
