//! Batch experiments: instance generation, procedure runs, efficiency
//! ratios, deal statistics, regression, CSV and SVG output.
//!
//! Configuration files are TOML with the optional keys
//!
//! ```toml
//! cultures = ["ic-sp", "up-sp"]
//! procedures = ["ttc", "crawler", "c2-u", "c2-rra", "c2-rrp", "c2-pn", "c2-pw", "c3-u", "max-ark-ir", "max-mrk-ir"]
//! sizes = { from = 2, to = 30, step = 2 }   # or an explicit list: [2, 4, 8]
//! reps = 200
//! seed = 0
//! endowment = "identity"                     # or "random"
//! output = "results.csv"
//! ```

mod config;
mod plot;
mod procedure;
mod run;
mod stats;
mod table;

pub use config::ExperimentConfig;
pub use plot::{emit_plot, render_svg};
pub use procedure::Procedure;
pub use run::{evaluate_instance, run_experiment, ResultRow};
pub use stats::{deal_size_regression, linreg, summarize, Band, Metric, Regression, SummaryRow};
pub use table::{emit_csv, format_float, parse_csv, read_csv, write_csv, HEADER};
