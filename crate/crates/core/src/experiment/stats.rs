use std::collections::BTreeMap;

use super::ResultRow;
use crate::error::{invalid, Result};

/// Mean and range of one metric over a group of rows.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Band {
    pub mean: f64,
    pub min: f64,
    pub max: f64,
}

impl Band {
    fn of(values: impl Iterator<Item = f64>) -> Option<Band> {
        let mut count = 0usize;
        let mut sum = 0.0;
        let (mut min, mut max) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in values {
            count += 1;
            sum += v;
            min = min.min(v);
            max = max.max(v);
        }
        (count > 0).then(|| Band { mean: sum / count as f64, min, max })
    }
}

/// Aggregates of the rows sharing a culture, procedure and size.
#[derive(Clone, Debug, PartialEq)]
pub struct SummaryRow {
    pub culture: String,
    pub procedure: String,
    pub n: usize,
    pub count: usize,
    pub ratio_ark: Band,
    pub ratio_mrk: Band,
    pub num_deals: Band,
    pub max_deal_size: Band,
}

/// Metrics plotted and summarized per group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Metric {
    RatioArk,
    RatioMrk,
    NumDeals,
    MaxDealSize,
}

impl Metric {
    pub const ALL: [Metric; 4] = [Metric::RatioArk, Metric::RatioMrk, Metric::NumDeals, Metric::MaxDealSize];

    pub fn name(self) -> &'static str {
        match self {
            Metric::RatioArk => "ratio_ark",
            Metric::RatioMrk => "ratio_mrk",
            Metric::NumDeals => "num_deals",
            Metric::MaxDealSize => "max_deal_size",
        }
    }
}

impl SummaryRow {
    pub fn band(&self, metric: Metric) -> Band {
        match metric {
            Metric::RatioArk => self.ratio_ark,
            Metric::RatioMrk => self.ratio_mrk,
            Metric::NumDeals => self.num_deals,
            Metric::MaxDealSize => self.max_deal_size,
        }
    }
}

/// Per-(culture, procedure, n) means and ranges. Sums run in row order;
/// groups come out in order of first appearance.
pub fn summarize(rows: &[ResultRow]) -> Vec<SummaryRow> {
    let mut order: Vec<(&str, &str, usize)> = Vec::new();
    let mut groups: BTreeMap<(&str, &str, usize), Vec<&ResultRow>> = BTreeMap::new();
    for row in rows {
        let key = (row.culture.as_str(), row.procedure.as_str(), row.n);
        groups
            .entry(key)
            .or_insert_with(|| {
                order.push(key);
                Vec::new()
            })
            .push(row);
    }
    order
        .into_iter()
        .map(|key| {
            let group = &groups[&key];
            let band = |f: fn(&ResultRow) -> f64| Band::of(group.iter().map(|r| f(r))).expect("groups are non-empty");
            SummaryRow {
                culture: key.0.to_string(),
                procedure: key.1.to_string(),
                n: key.2,
                count: group.len(),
                ratio_ark: band(|r| r.ratio_ark),
                ratio_mrk: band(|r| r.ratio_mrk),
                num_deals: band(|r| r.num_deals as f64),
                max_deal_size: band(|r| r.max_deal_size as f64),
            }
        })
        .collect()
}

/// Ordinary least squares fit `y = intercept + slope · x`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Regression {
    pub intercept: f64,
    pub slope: f64,
    pub r_squared: f64,
}

pub fn linreg(points: &[(f64, f64)]) -> Result<Regression> {
    if points.len() < 3 {
        return invalid(format!("regression needs at least 3 points, got {}", points.len()));
    }
    let count = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / count;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / count;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    if sxx == 0.0 {
        return invalid("regression is undefined for constant x");
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ss_res: f64 = points.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
    let ss_tot: f64 = points.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
    let r_squared = if ss_tot == 0.0 { 1.0 } else { 1.0 - ss_res / ss_tot };
    Ok(Regression { intercept, slope, r_squared })
}

/// Regression of the largest deal size seen at each size over that size,
/// for one culture and procedure.
pub fn deal_size_regression(rows: &[ResultRow], culture: &str, procedure: &str) -> Result<Regression> {
    let mut largest: BTreeMap<usize, usize> = BTreeMap::new();
    for row in rows.iter().filter(|r| r.culture == culture && r.procedure == procedure) {
        let entry = largest.entry(row.n).or_default();
        *entry = (*entry).max(row.max_deal_size);
    }
    let points: Vec<(f64, f64)> = largest.into_iter().map(|(n, size)| (n as f64, size as f64)).collect();
    linreg(&points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_line() {
        let points: Vec<_> = (1..=6).map(|n| (n as f64, 2.0 + 0.5 * n as f64)).collect();
        let fit = linreg(&points).unwrap();
        assert!((fit.intercept - 2.0).abs() < 1e-12);
        assert!((fit.slope - 0.5).abs() < 1e-12);
        assert!((fit.r_squared - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(linreg(&[(1.0, 1.0), (2.0, 2.0)]).is_err());
        assert!(linreg(&[(3.0, 1.0), (3.0, 2.0), (3.0, 5.0)]).is_err());
    }

    #[test]
    fn two_row_group_mean() {
        let row = |ratio: f64| ResultRow {
            culture: "ic-sp".into(),
            procedure: "ttc".into(),
            n: 4,
            rep: 0,
            seed: 0,
            ark: 0,
            mrk: 0,
            ark_opt_noir: 0,
            mrk_opt_noir: 0,
            ratio_ark: ratio,
            ratio_mrk: ratio,
            num_deals: 2,
            max_deal_size: 3,
            mean_deal_size: 2.0,
        };
        let summary = summarize(&[row(0.5), row(1.0)]);
        assert_eq!(summary.len(), 1);
        assert_eq!(summary[0].ratio_ark, Band { mean: 0.75, min: 0.5, max: 1.0 });
        assert_eq!(summary[0].count, 2);
        assert!(summarize(&[]).is_empty());
    }
}
