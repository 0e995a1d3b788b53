use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rayon::prelude::*;

use super::{
    empirical_poa, is_pareto_optimal_brute, maximality_instance, pareto_optimal_set, poa_ark_instance,
    poa_mrk_instance, reachable_by_swaps, replay_improving, stable_set, Objective, PoaConstruction, Ratio,
};
use crate::central::{crawler, ttc};
use crate::dynamics::DEFAULT_ENUMERATION_BOUND;
use crate::error::{invalid, MarketError, Result};
use crate::market::{is_pareto_optimal, is_stable, pareto_dominates, Allocation, Instance, LinearOrder};
use crate::sp::{derive_seed, generate_instance, is_single_peaked, rng_from_seed, Axis, Culture, EndowmentMode};

/// Property suites exposed through `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Theorem1,
    Theorem2,
    Reachability,
    Poa,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Theorem1, Suite::Theorem2, Suite::Reachability, Suite::Poa];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Reachability => "reachability",
            Suite::Poa => "poa",
        }
    }

    pub fn default_sizes(self) -> Vec<usize> {
        match self {
            Suite::Theorem1 => (3..=7).collect(),
            Suite::Theorem2 => (4..=8).collect(),
            Suite::Reachability => (4..=7).collect(),
            Suite::Poa => (4..=12).chain([60]).collect(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = MarketError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| MarketError::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub sizes: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
}

/// A failed check with the instance that witnesses it.
#[derive(Clone, Debug)]
pub struct Failure {
    pub description: String,
    pub instance: Instance,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn check(&mut self, ok: bool, instance: &Instance, description: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure { description: description(), instance: instance.clone() });
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }
}

pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<SuiteReport> {
    let tally = match suite {
        Suite::Theorem1 => per_cell(params, 3, theorem1_cell)?,
        Suite::Theorem2 => per_cell(params, 3, theorem2_cell)?,
        Suite::Reachability => per_cell(params, 1, reachability_cell)?,
        Suite::Poa => {
            let mut tally = Tally::default();
            for &n in &params.sizes {
                tally = tally.merge(poa_checks(n)?);
            }
            tally
        }
    };
    Ok(SuiteReport { suite, checks: tally.checks, failures: tally.failures })
}

fn per_cell(
    params: &SuiteParams,
    min_size: usize,
    cell: fn(usize, u64) -> Result<Tally>,
) -> Result<Tally> {
    if let Some(&n) = params.sizes.iter().find(|&&n| n < min_size) {
        return invalid(format!("size {n} is below the minimum {min_size} for this suite"));
    }
    let cells: Vec<(usize, usize)> =
        params.sizes.iter().flat_map(|&n| (0..params.reps).map(move |rep| (n, rep))).collect();
    let tallies = cells
        .par_iter()
        .map(|&(n, rep)| cell(n, derive_seed(params.seed, n, rep)))
        .collect::<Result<Vec<_>>>()?;
    Ok(tallies.into_iter().fold(Tally::default(), Tally::merge))
}

fn sp_instances(n: usize, seed: u64) -> Result<Vec<Instance>> {
    [Culture::IcSp, Culture::UpSp]
        .into_iter()
        .map(|culture| generate_instance(n, culture, EndowmentMode::Random, &mut rng_from_seed(seed)))
        .collect()
}

fn theorem1_cell(n: usize, seed: u64) -> Result<Tally> {
    let mut tally = Tally::default();
    for instance in sp_instances(n, seed)? {
        let swaps = stable_set(&instance, 2)?;
        let cycles = stable_set(&instance, n)?;
        let pareto = pareto_optimal_set(&instance)?;
        tally.check(swaps == cycles, &instance, || "swap-stable and cycle-stable sets differ".into());
        tally.check(swaps == pareto, &instance, || "swap-stable and Pareto-optimal sets differ".into());
    }
    Ok(tally)
}

fn random_non_sp(axis: &Axis, rng: &mut impl rand::Rng) -> LinearOrder {
    let mut ranking: Vec<usize> = (0..axis.len()).collect();
    loop {
        ranking.shuffle(rng);
        let order = LinearOrder::new(ranking.clone()).expect("shuffled permutation");
        if !is_single_peaked(&order, axis).expect("same length") {
            return order;
        }
    }
}

fn theorem2_cell(n: usize, seed: u64) -> Result<Tally> {
    let mut rng = rng_from_seed(seed);
    let mut axis_order: Vec<usize> = (0..n).collect();
    axis_order.shuffle(&mut rng);
    let axis = Axis::new(axis_order)?;
    let star = random_non_sp(&axis, &mut rng);
    let instance = maximality_instance(&axis, &star)?;
    let tops = Allocation::new(instance.profile().iter().map(|o| o.top()).collect());
    let mut tally = Tally::default();
    tally.check(is_stable(&instance, instance.endowment(), 2)?, &instance, || {
        "the endowment admits an improving swap".into()
    });
    let pareto = if n <= DEFAULT_ENUMERATION_BOUND {
        is_pareto_optimal_brute(&instance, instance.endowment())
    } else {
        is_pareto_optimal(&instance, instance.endowment())
    };
    tally.check(!pareto, &instance, || "the endowment is Pareto-optimal".into());
    let dominated = tops.map(|t| pareto_dominates(&instance, &t, instance.endowment())).unwrap_or(false);
    tally.check(dominated, &instance, || "the all-tops allocation does not dominate the endowment".into());
    Ok(tally)
}

fn reachability_cell(n: usize, seed: u64) -> Result<Tally> {
    let mut tally = Tally::default();
    for instance in sp_instances(n, seed)? {
        let outcomes = [("TTC", ttc(&instance).0), ("Crawler", crawler(&instance)?.0)];
        for (name, outcome) in outcomes {
            let found = reachable_by_swaps(&instance, &outcome)?
                .and_then(|path| replay_improving(&instance, instance.endowment(), &path))
                .is_some_and(|end| end == outcome);
            tally.check(found, &instance, || format!("the {name} outcome {outcome} is not reachable by swaps"));
        }
    }
    Ok(tally)
}

fn construction_checks(tally: &mut Tally, label: &str, c: &PoaConstruction) -> Result<()> {
    let inst = &c.instance;
    let n = inst.n();
    let axis = inst.axis().expect("constructions carry the natural axis");
    let single_peaked = inst.profile().iter().all(|o| is_single_peaked(o, axis).unwrap_or(false));
    tally.check(single_peaked, inst, || format!("{label}: profile is not single-peaked"));
    for (which, sequence, target) in [("worst", &c.worst_sequence, &c.worst), ("best", &c.best_sequence, &c.best)] {
        let end = replay_improving(inst, inst.endowment(), sequence);
        tally.check(end.is_some(), inst, || format!("{label}: {which} sequence contains a non-improving swap"));
        tally.check(end.as_ref() == Some(target), inst, || {
            format!("{label}: {which} sequence does not end in {target}")
        });
    }
    let worst_stable = if n <= DEFAULT_ENUMERATION_BOUND {
        stable_set(inst, 2)?.contains(&c.worst)
    } else {
        is_stable(inst, &c.worst, 2)?
    };
    tally.check(worst_stable, inst, || format!("{label}: worst outcome {} is not swap-stable", c.worst));
    Ok(())
}

fn poa_checks(n: usize) -> Result<Tally> {
    let mut tally = Tally::default();
    let n64 = n as u64;

    let ark = poa_ark_instance(n)?;
    construction_checks(&mut tally, "ark", &ark)?;
    let (best, worst) = (ark.instance.ark(&ark.best), ark.instance.ark(&ark.worst));
    tally.check(best == (n64 - 1) * (n64 + 1), &ark.instance, || format!("ark: best value {best}"));
    tally.check(worst == n64 * (n64 + 1) / 2, &ark.instance, || format!("ark: worst value {worst}"));
    let ratio = Ratio::new(best, worst);
    tally.check(ratio.same_value(Ratio::new(2 * (n64 - 1), n64)), &ark.instance, || format!("ark: ratio {ratio}"));

    let mrk = poa_mrk_instance(n)?;
    construction_checks(&mut tally, "mrk", &mrk)?;
    let ratio = Ratio::new(mrk.instance.mrk(&mrk.best) as u64, mrk.instance.mrk(&mrk.worst) as u64);
    tally.check(ratio.same_value(Ratio::new(n64 - 1, 1)), &mrk.instance, || format!("mrk: ratio {ratio}"));

    if n <= DEFAULT_ENUMERATION_BOUND {
        for (label, c, objective) in [("ark", &ark, Objective::Ark), ("mrk", &mrk, Objective::Mrk)] {
            let claimed = Ratio::new(objective.value(&c.instance, &c.best), objective.value(&c.instance, &c.worst));
            let measured = empirical_poa(&c.instance, objective)?;
            tally.check(measured.at_least(claimed), &c.instance, || {
                format!("{label}: enumerated ratio {measured} is below the construction's {claimed}")
            });
        }
    }
    Ok(tally)
}
