use rayon::prelude::*;

use super::{ExperimentConfig, Procedure};
use crate::error::Result;
use crate::market::{is_individually_rational, is_stable, Instance};
use crate::optimize::{max_ark, max_mrk};
use crate::sp::{derive_seed, generate_instance, rng_from_seed};

/// Outcome of one procedure on one instance.
#[derive(Clone, Debug, PartialEq)]
pub struct ResultRow {
    pub culture: String,
    pub procedure: String,
    pub n: usize,
    pub rep: usize,
    pub seed: u64,
    pub ark: u64,
    pub mrk: usize,
    pub ark_opt_noir: u64,
    pub mrk_opt_noir: usize,
    pub ratio_ark: f64,
    pub ratio_mrk: f64,
    pub num_deals: usize,
    pub max_deal_size: usize,
    pub mean_deal_size: f64,
}

/// Runs every procedure on one instance and reports ratios against the
/// optima without the individual-rationality constraint.
///
/// # Panics
///
/// If a dynamics outcome is not stable or an outcome is not individually
/// rational; both indicate a bug in the procedure.
pub fn evaluate_instance(
    culture: &str,
    rep: usize,
    seed: u64,
    instance: &Instance,
    procedures: &[Procedure],
) -> Result<Vec<ResultRow>> {
    let n = instance.n();
    let ark_opt = max_ark(instance, false).1;
    let mrk_opt = max_mrk(instance, false).1;
    procedures
        .iter()
        .map(|&procedure| {
            let (allocation, trace) = procedure.run(instance, seed)?;
            assert!(is_individually_rational(instance, &allocation), "{procedure} broke individual rationality");
            if procedure.is_dynamics() {
                let k = if procedure == Procedure::C3Uniform { 3 } else { 2 };
                assert!(is_stable(instance, &allocation, k.min(n))?, "{procedure} stopped at an unstable allocation");
            }
            let (ark, mrk) = (instance.ark(&allocation), instance.mrk(&allocation));
            Ok(ResultRow {
                culture: culture.to_string(),
                procedure: procedure.name(),
                n,
                rep,
                seed,
                ark,
                mrk,
                ark_opt_noir: ark_opt,
                mrk_opt_noir: mrk_opt,
                ratio_ark: ark as f64 / ark_opt as f64,
                ratio_mrk: mrk as f64 / mrk_opt as f64,
                num_deals: trace.num_deals(),
                max_deal_size: trace.max_size(),
                mean_deal_size: trace.mean_size(),
            })
        })
        .collect()
}

/// Runs the whole batch. Rows are ordered by culture, size, replicate and
/// procedure, in the order the configuration lists them; cells run in
/// parallel but the output does not depend on scheduling.
///
/// The instance of a cell is drawn from `derive_seed(seed, n, rep)`, so both
/// cultures see the same seed for the same cell.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<ResultRow>> {
    config.validate()?;
    let cells: Vec<_> = config
        .cultures
        .iter()
        .flat_map(|&culture| {
            config.sizes.iter().flat_map(move |&n| (0..config.reps).map(move |rep| (culture, n, rep)))
        })
        .collect();
    let groups = cells
        .par_iter()
        .map(|&(culture, n, rep)| {
            let seed = derive_seed(config.seed, n, rep);
            let instance = generate_instance(n, culture, config.endowment, &mut rng_from_seed(seed))?;
            evaluate_instance(culture.name(), rep, seed, &instance, &config.procedures)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(groups.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::market::{Allocation, LinearOrder};

    #[test]
    fn all_tops_instance_has_unit_ratios() {
        let profile = vec![
            LinearOrder::from_labels(&[2, 1, 3]).unwrap(),
            LinearOrder::from_labels(&[1, 2, 3]).unwrap(),
            LinearOrder::from_labels(&[3, 2, 1]).unwrap(),
        ];
        let inst = Instance::new(profile, Allocation::from_labels(&[2, 1, 3]).unwrap(), None).unwrap();
        let procedures: Vec<_> = Procedure::ALL.into_iter().filter(|&p| p != Procedure::Crawler).collect();
        for row in evaluate_instance("fixed", 0, 1, &inst, &procedures).unwrap() {
            assert_eq!((row.ratio_ark, row.ratio_mrk), (1.0, 1.0), "{}", row.procedure);
        }
    }

    #[test]
    fn rows_follow_canonical_order() {
        let config = ExperimentConfig {
            sizes: vec![3, 2],
            reps: 2,
            procedures: vec![Procedure::Ttc, Procedure::MaxArkIr],
            ..ExperimentConfig::default()
        };
        let rows = run_experiment(&config).unwrap();
        let keys: Vec<_> = rows.iter().map(|r| (r.culture.as_str(), r.n, r.rep, r.procedure.as_str())).collect();
        assert_eq!(keys.len(), 16);
        assert_eq!(&keys[..3], &[("ic-sp", 3, 0, "ttc"), ("ic-sp", 3, 0, "max-ark-ir"), ("ic-sp", 3, 1, "ttc")]);
        assert_eq!(keys[8], ("up-sp", 3, 0, "ttc"));
    }
}
