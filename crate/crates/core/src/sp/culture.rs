use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Axis;
use crate::error::{invalid, MarketError, Result};
use crate::market::{Allocation, Instance, LinearOrder};

/// The generator used for every random draw in the crate.
pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of the stream for one batch cell, so that cells can be generated in
/// any order.
pub fn derive_seed(master: u64, size: usize, replicate: usize) -> u64 {
    let h = splitmix64(master);
    let h = splitmix64(h ^ size as u64);
    splitmix64(h ^ (replicate as u64).rotate_left(32))
}

/// Synthetic single-peaked preference cultures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Culture {
    /// Uniform over all single-peaked orders (built from the worst resource
    /// up, picking one of the two axis extremes each time).
    #[serde(rename = "ic-sp")]
    IcSp,
    /// Uniform peak, then grown outwards one neighbour at a time.
    #[serde(rename = "up-sp")]
    UpSp,
}

impl Culture {
    pub fn name(self) -> &'static str {
        match self {
            Culture::IcSp => "ic-sp",
            Culture::UpSp => "up-sp",
        }
    }

    pub fn draw<R: Rng + ?Sized>(self, axis: &Axis, rng: &mut R) -> LinearOrder {
        match self {
            Culture::IcSp => generate_ic_sp(axis, rng),
            Culture::UpSp => generate_up_sp(axis, rng),
        }
    }
}

impl fmt::Display for Culture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Culture {
    type Err = MarketError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ic-sp" => Ok(Culture::IcSp),
            "up-sp" => Ok(Culture::UpSp),
            other => invalid(format!("unknown culture `{other}` (expected ic-sp or up-sp)")),
        }
    }
}

/// How the initial allocation of a generated instance is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EndowmentMode {
    /// Agent `i` holds resource `i`.
    #[default]
    Identity,
    /// A uniformly random permutation.
    Random,
}

impl FromStr for EndowmentMode {
    type Err = MarketError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identity" => Ok(EndowmentMode::Identity),
            "random" => Ok(EndowmentMode::Random),
            other => invalid(format!("unknown endowment mode `{other}`")),
        }
    }
}

/// IC-SP draw: build the order from worst to best, each step removing one of
/// the two current extremes of the axis with probability 1/2.
pub fn generate_ic_sp<R: Rng + ?Sized>(axis: &Axis, rng: &mut R) -> LinearOrder {
    let n = axis.len();
    let (mut lo, mut hi) = (0usize, n - 1);
    let mut worst_first = Vec::with_capacity(n);
    while lo < hi {
        if rng.gen_bool(0.5) {
            worst_first.push(axis.at(lo));
            lo += 1;
        } else {
            worst_first.push(axis.at(hi));
            hi -= 1;
        }
    }
    worst_first.push(axis.at(lo));
    worst_first.reverse();
    LinearOrder::new(worst_first).expect("every resource is taken once")
}

/// UP-SP draw: uniform peak, then repeatedly take the left or right
/// unpicked neighbour with probability 1/2 (forced once a side is used up).
pub fn generate_up_sp<R: Rng + ?Sized>(axis: &Axis, rng: &mut R) -> LinearOrder {
    let n = axis.len();
    let peak = rng.gen_range(0..n);
    let (mut lo, mut hi) = (peak, peak);
    let mut ranking = Vec::with_capacity(n);
    ranking.push(axis.at(peak));
    while ranking.len() < n {
        let go_left = if lo == 0 {
            false
        } else if hi == n - 1 {
            true
        } else {
            rng.gen_bool(0.5)
        };
        if go_left {
            lo -= 1;
            ranking.push(axis.at(lo));
        } else {
            hi += 1;
            ranking.push(axis.at(hi));
        }
    }
    LinearOrder::new(ranking).expect("every resource is taken once")
}

/// `n` i.i.d. orders from `culture` on the natural axis r1 ◁ … ◁ rn.
pub fn generate_instance<R: Rng + ?Sized>(
    n: usize,
    culture: Culture,
    endowment: EndowmentMode,
    rng: &mut R,
) -> Result<Instance> {
    if n == 0 {
        return invalid("instances need at least one agent");
    }
    draw_instance(Axis::identity(n), culture, endowment, rng)
}

fn draw_instance<R: Rng + ?Sized>(
    axis: Axis,
    culture: Culture,
    endowment: EndowmentMode,
    rng: &mut R,
) -> Result<Instance> {
    let n = axis.len();
    let profile = (0..n).map(|_| culture.draw(&axis, rng)).collect();
    let endowment = match endowment {
        EndowmentMode::Identity => Allocation::identity(n),
        EndowmentMode::Random => {
            let mut holdings: Vec<usize> = (0..n).collect();
            holdings.shuffle(rng);
            Allocation::new(holdings)?
        }
    };
    Instance::new(profile, endowment, Some(axis))
}

/// A culture together with its axis and seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CultureSpec {
    pub culture: Culture,
    pub axis: Axis,
    pub seed: u64,
}

impl CultureSpec {
    /// Draws an instance over `self.axis` with identity or random endowment.
    pub fn generate(&self, endowment: EndowmentMode) -> Result<Instance> {
        draw_instance(self.axis.clone(), self.culture, endowment, &mut rng_from_seed(self.seed))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sp::{is_single_peaked, is_worst_restricted};

    #[test]
    fn single_resource_orders() {
        let axis = Axis::identity(1);
        let mut rng = rng_from_seed(1);
        assert_eq!(generate_ic_sp(&axis, &mut rng).ranking(), &[0]);
        assert_eq!(generate_up_sp(&axis, &mut rng).ranking(), &[0]);
    }

    #[test]
    fn draws_respect_a_shuffled_axis() {
        let mut rng = rng_from_seed(7);
        let axis = Axis::from_labels(&[4, 2, 6, 1, 3, 5]).unwrap();
        for _ in 0..200 {
            assert!(is_single_peaked(&generate_ic_sp(&axis, &mut rng), &axis).unwrap());
            assert!(is_single_peaked(&generate_up_sp(&axis, &mut rng), &axis).unwrap());
        }
    }

    #[test]
    fn generated_instances_are_deterministic_and_worst_restricted() {
        for culture in [Culture::IcSp, Culture::UpSp] {
            for seed in 0..100 {
                let a = generate_instance(7, culture, EndowmentMode::Identity, &mut rng_from_seed(seed)).unwrap();
                let b = generate_instance(7, culture, EndowmentMode::Identity, &mut rng_from_seed(seed)).unwrap();
                assert_eq!(a, b);
                assert!(is_worst_restricted(a.profile()));
                assert_eq!(a.endowment(), &Allocation::identity(7));
            }
        }
    }

    #[test]
    fn random_endowment_is_a_permutation() {
        let inst = generate_instance(9, Culture::UpSp, EndowmentMode::Random, &mut rng_from_seed(3)).unwrap();
        assert_eq!(inst.endowment().len(), 9);
    }

    #[test]
    fn derived_seeds_differ_per_cell() {
        let a = derive_seed(1, 10, 0);
        assert_ne!(a, derive_seed(1, 10, 1));
        assert_ne!(a, derive_seed(1, 11, 0));
        assert_ne!(a, derive_seed(2, 10, 0));
        assert_eq!(a, derive_seed(1, 10, 0));
    }

    #[test]
    fn culture_names_round_trip() {
        for c in [Culture::IcSp, Culture::UpSp] {
            assert_eq!(c.name().parse::<Culture>().unwrap(), c);
        }
        assert!("mallows".parse::<Culture>().is_err());
    }

    #[test]
    fn culture_spec_uses_its_seed() {
        let spec = CultureSpec { culture: Culture::IcSp, axis: Axis::identity(6), seed: 99 };
        assert_eq!(spec.generate(EndowmentMode::Identity).unwrap(), spec.generate(EndowmentMode::Identity).unwrap());
    }
}
