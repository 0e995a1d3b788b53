use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use house_market::experiment::{emit_csv, emit_plot, run_experiment, summarize, ExperimentConfig, Procedure};
use house_market::market::{format_instance, parse_instance};
use house_market::oracles::{run_suite, Suite, SuiteParams};
use house_market::sp::{generate_instance, rng_from_seed, Culture, EndowmentMode};

#[derive(Parser)]
#[command(name = "hmkt", version, about = "House-market allocation procedures and experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw a random single-peaked instance.
    Generate {
        #[arg(long)]
        culture: Culture,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "identity")]
        endow: EndowmentMode,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run one procedure on an instance file.
    Solve {
        #[arg(long)]
        procedure: Procedure,
        #[arg(long)]
        instance: PathBuf,
        /// Print every deal with the allocation it produces.
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a batch experiment described by a TOML file.
    Experiment {
        #[arg(long)]
        config: PathBuf,
        /// CSV destination; overrides `output` in the config.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Directory for SVG charts.
        #[arg(long)]
        plots: Option<PathBuf>,
    },
    /// Run a property suite; exits non-zero if any check fails.
    Verify {
        /// theorem1, theorem2, reachability, poa or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Comma-separated sizes; each suite has its own default.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = 100)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Generate { culture, n, seed, endow, output } => {
            let instance = generate_instance(n, culture, endow, &mut rng_from_seed(seed))?;
            let text = format_instance(&instance);
            match output {
                Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
        }
        Command::Solve { procedure, instance, trace, seed } => {
            let text = fs::read_to_string(&instance).with_context(|| format!("reading {}", instance.display()))?;
            let instance = parse_instance(&text).with_context(|| format!("parsing {}", instance.display()))?;
            let (allocation, deals) = procedure.run(&instance, seed)?;
            let mut out = std::io::stdout().lock();
            if trace {
                for (deal, after) in deals.steps() {
                    writeln!(out, "deal {deal} -> {after}")?;
                }
            }
            writeln!(out, "allocation {allocation}")?;
            writeln!(out, "ark {}", instance.ark(&allocation))?;
            writeln!(out, "mrk {}", instance.mrk(&allocation))?;
            writeln!(out, "deals {}", deals.num_deals())?;
        }
        Command::Experiment { config, output, plots } => {
            let config = ExperimentConfig::load(&config)?;
            let Some(path) = output.or_else(|| config.output.clone()) else {
                bail!("no output file: pass -o or set `output` in the config");
            };
            let rows = run_experiment(&config)?;
            emit_csv(&rows, &path)?;
            eprintln!("wrote {} rows to {}", rows.len(), path.display());
            if let Some(dir) = plots {
                let written = emit_plot(&summarize(&rows), &dir)?;
                eprintln!("wrote {} charts to {}", written.len(), dir.display());
            }
        }
        Command::Verify { suite, sizes, reps, seed } => {
            let suites = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
            let mut passed = true;
            for suite in suites {
                let params = SuiteParams { sizes: sizes.clone().unwrap_or_else(|| suite.default_sizes()), reps, seed };
                let report = run_suite(suite, &params)?;
                let status = if report.passed() { "PASS" } else { "FAIL" };
                println!("{status} {suite}: {} checks, {} failures", report.checks, report.failures.len());
                for failure in &report.failures {
                    println!("  {}", failure.description);
                    for line in format_instance(&failure.instance).lines() {
                        println!("    {line}");
                    }
                }
                passed &= report.passed();
            }
            return Ok(if passed { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
    }
    Ok(ExitCode::SUCCESS)
}
