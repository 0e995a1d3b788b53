use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::Procedure;
use crate::error::{invalid, MarketError, Result};
use crate::sp::{Culture, EndowmentMode};

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
enum Sizes {
    List(Vec<usize>),
    Range { from: usize, to: usize, step: Option<usize> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    cultures: Option<Vec<Culture>>,
    procedures: Option<Vec<Procedure>>,
    sizes: Option<Sizes>,
    reps: Option<usize>,
    seed: Option<u64>,
    endowment: Option<EndowmentMode>,
    output: Option<PathBuf>,
}

/// Batch parameters. Omitted keys in a config file take the values of
/// [`ExperimentConfig::default`]: both cultures, every procedure, sizes
/// 2, 4, …, 30, 200 replicates, seed 0 and identity endowments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub cultures: Vec<Culture>,
    pub procedures: Vec<Procedure>,
    pub sizes: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
    pub endowment: EndowmentMode,
    pub output: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            cultures: vec![Culture::IcSp, Culture::UpSp],
            procedures: Procedure::ALL.to_vec(),
            sizes: (2..=30).step_by(2).collect(),
            reps: 200,
            seed: 0,
            endowment: EndowmentMode::Identity,
            output: None,
        }
    }
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| MarketError::InvalidArgument(e.to_string()))?;
        let defaults = Self::default();
        let sizes = match raw.sizes {
            None => defaults.sizes,
            Some(Sizes::List(list)) => list,
            Some(Sizes::Range { from, to, step }) => {
                let step = step.unwrap_or(1);
                if step == 0 {
                    return invalid("size step must be positive");
                }
                (from..=to).step_by(step).collect()
            }
        };
        let config = Self {
            cultures: raw.cultures.unwrap_or(defaults.cultures),
            procedures: raw.procedures.unwrap_or(defaults.procedures),
            sizes,
            reps: raw.reps.unwrap_or(defaults.reps),
            seed: raw.seed.unwrap_or(defaults.seed),
            endowment: raw.endowment.unwrap_or(defaults.endowment),
            output: raw.output,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| MarketError::InvalidArgument(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(n) = self.sizes.iter().find(|&&n| n < 2) {
            return invalid(format!("sizes must be at least 2, got {n}"));
        }
        if self.reps == 0 {
            return invalid("reps must be at least 1");
        }
        if self.cultures.is_empty() || self.procedures.is_empty() || self.sizes.is_empty() {
            return invalid("cultures, procedures and sizes must be non-empty");
        }
        Ok(())
    }
}
