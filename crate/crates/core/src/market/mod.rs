//! Domain model: orders, allocations, instances, deals and the improving-deal
//! machinery.

mod allocation;
mod deal;
mod improve;
mod instance;
mod order;
mod pareto;
mod text;

pub use allocation::Allocation;
pub use deal::{Deal, DealTrace};
pub use improve::{
    enumerate_improving, has_improving_deal, improving_swaps, is_improving, is_stable, WantsMatrix,
};
pub use instance::Instance;
pub use order::LinearOrder;
pub use pareto::{is_individually_rational, is_pareto_optimal, pareto_dominates};
pub use text::{format_instance, parse_instance};

/// 0-based agent index.
pub type Agent = usize;
/// 0-based resource index.
pub type Resource = usize;

/// Checks that `items` is a permutation of `0..items.len()`.
pub(crate) fn check_permutation(items: &[usize]) -> std::result::Result<(), String> {
    let n = items.len();
    let mut seen = vec![false; n];
    for &x in items {
        if x >= n {
            return Err(format!("index {} out of range for size {}", x.wrapping_add(1), n));
        }
        if seen[x] {
            return Err(format!("index {} appears twice", x.wrapping_add(1)));
        }
        seen[x] = true;
    }
    Ok(())
}

/// Converts 1-based labels into 0-based indices. Zero labels map to
/// `usize::MAX` so that the subsequent permutation check rejects them.
pub(crate) fn from_labels(labels: &[usize]) -> Vec<usize> {
    labels.iter().map(|&l| l.wrapping_sub(1)).collect()
}

pub(crate) fn fmt_labels(
    f: &mut std::fmt::Formatter<'_>,
    prefix: char,
    items: &[usize],
) -> std::fmt::Result {
    write!(f, "\u{27e8}")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{}{}", prefix, x + 1)?;
    }
    write!(f, "\u{27e9}")
}
