use crate::error::{invalid, Result};
use crate::market::{Resource};

/// A left-to-right ordering of all resources.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Axis {
    order: Vec<Resource>,
    position: Vec<usize>,
}

impl Axis {
    pub fn new(order: Vec<Resource>) -> Result<Self> {
        if order.is_empty() {
            return invalid("an axis needs at least one resource");
        }
        if let Err(e) = crate::market::check_permutation(&order) {
            return invalid(format!("axis is not a permutation: {e}"));
        }
        let mut position = vec![0; order.len()];
        for (p, &r) in order.iter().enumerate() {
            position[r] = p;
        }
        Ok(Self { order, position })
    }

    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        Self::new(crate::market::from_labels(labels))
    }

    /// r1 ◁ r2 ◁ … ◁ rn.
    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect()).expect("identity is a permutation")
    }

    pub fn reversed(&self) -> Self {
        Self::new(self.order.iter().rev().copied().collect()).expect("reversal keeps the permutation")
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[Resource] {
        &self.order
    }

    /// Index of `r` along the axis, 0 at the left end.
    pub fn position(&self, r: Resource) -> usize {
        self.position[r]
    }

    pub fn at(&self, position: usize) -> Resource {
        self.order[position]
    }

    pub fn restrict(&self, subset: &[Resource]) -> Result<Vec<Resource>> {
        super::restrict_sequence(&self.order, subset)
    }
}
