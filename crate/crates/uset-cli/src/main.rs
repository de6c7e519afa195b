//! `uset`: validate, aggregate, and rank uncertain-set scenario files,
//! reproduce the worked-example corpus, and run the reduction checks.
//!
//! Exit codes: 0 success, 1 validation failure, 2 runtime error,
//! 3 reproduction failures (errata do not fail).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use uset_cli::corpus;
use uset_cli::report::format_number;
use uset_cli::scenario::{
    self, load_scenario, rank_scenario, run_scenario, validate_scenario, RunOptions,
};

#[derive(Parser)]
#[command(name = "uset", version, about = "Uncertain-set scenario toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PrecisionArg {
    /// Output precision in decimal places (overrides USET_PRECISION)
    #[arg(long)]
    precision: Option<usize>,
}

impl PrecisionArg {
    fn resolve(&self) -> usize {
        self.precision
            .or_else(|| {
                std::env::var("USET_PRECISION")
                    .ok()
                    .and_then(|v| v.parse().ok())
            })
            .unwrap_or(6)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a scenario file and check every structural invariant
    Validate { file: PathBuf },
    /// Run the scenario's aggregation under a dominant value
    Aggregate {
        file: PathBuf,
        /// Dominant attribute value (falls back to the document's)
        #[arg(long)]
        dominant: Option<String>,
        #[command(flatten)]
        precision: PrecisionArg,
        /// Include intermediate compatibility weights
        #[arg(long)]
        verbose: bool,
    },
    /// Rough-approximate a target subset
    Rough {
        file: PathBuf,
        /// Comma-separated target elements (falls back to the document's)
        #[arg(long, value_delimiter = ',')]
        target: Option<Vec<String>>,
        #[command(flatten)]
        precision: PrecisionArg,
    },
    /// Rank the universe by the kind's scalar score
    Rank {
        file: PathBuf,
        #[arg(long)]
        dominant: Option<String>,
        #[command(flatten)]
        precision: PrecisionArg,
    },
    /// Recompute the worked-example corpus and report pass/erratum/fail rows
    Reproduce {
        /// Only cases whose id starts with this prefix (e.g. 3.16)
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: ReportFormat,
        #[command(flatten)]
        precision: PrecisionArg,
    },
    /// Run the generalization-theorem round-trip checks
    Reduce {
        /// Run the checks (the only mode)
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 20240)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: usize,
    },
}

fn read_scenario(path: &PathBuf) -> Result<scenario::ScenarioDocument, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    load_scenario(&text).map_err(|e| format!("{e:#}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Validate { file } => match read_scenario(&file) {
            Ok(doc) => {
                // load_scenario already validates; re-run for the message
                match validate_scenario(&doc) {
                    Ok(()) => {
                        println!("valid: {} scenario", doc.kind());
                        ExitCode::SUCCESS
                    }
                    Err(e) => {
                        eprintln!("invalid: {e:#}");
                        ExitCode::from(1)
                    }
                }
            }
            Err(e) => {
                eprintln!("invalid: {e}");
                ExitCode::from(1)
            }
        },
        Command::Aggregate {
            file,
            dominant,
            precision,
            verbose,
        } => {
            let doc = match read_scenario(&file) {
                Ok(doc) => doc,
                Err(e) => {
                    eprintln!("invalid: {e}");
                    return ExitCode::from(1);
                }
            };
            if matches!(
                doc,
                scenario::ScenarioDocument::Rough(_) | scenario::ScenarioDocument::Softrough(_)
            ) {
                eprintln!("error: use 'rough' for {} scenarios", doc.kind());
                return ExitCode::from(2);
            }
            let opts = RunOptions {
                dominant,
                target: None,
                precision: precision.resolve(),
                verbose,
            };
            match run_scenario(&doc, &opts) {
                Ok(value) => {
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Rough {
            file,
            target,
            precision,
        } => {
            let doc = match read_scenario(&file) {
                Ok(doc) => doc,
                Err(e) => {
                    eprintln!("invalid: {e}");
                    return ExitCode::from(1);
                }
            };
            let opts = RunOptions {
                dominant: None,
                target,
                precision: precision.resolve(),
                verbose: false,
            };
            let runnable = matches!(
                doc,
                scenario::ScenarioDocument::Rough(_) | scenario::ScenarioDocument::Softrough(_)
            );
            if !runnable {
                eprintln!("error: 'rough' needs a rough or softrough scenario");
                return ExitCode::from(2);
            }
            match run_scenario(&doc, &opts) {
                Ok(value) => {
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Rank {
            file,
            dominant,
            precision,
        } => {
            let doc = match read_scenario(&file) {
                Ok(doc) => doc,
                Err(e) => {
                    eprintln!("invalid: {e}");
                    return ExitCode::from(1);
                }
            };
            let p = precision.resolve();
            let opts = RunOptions {
                dominant,
                target: None,
                precision: p,
                verbose: false,
            };
            match rank_scenario(&doc, &opts) {
                Ok(ranked) => {
                    for (i, (name, score)) in ranked.iter().enumerate() {
                        println!("{}\t{}\t{}", i + 1, name, format_number(*score, p));
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Reproduce {
            filter,
            format,
            precision,
        } => {
            let report = corpus::reproduce_all(filter.as_deref());
            let p = precision.resolve();
            match format {
                ReportFormat::Csv => print!("{}", report.to_csv(p)),
                ReportFormat::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&report.to_json(p)).unwrap()
                    )
                }
            }
            if report.fail_count() > 0 {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Reduce { check, seed, cases } => {
            if !check {
                eprintln!("error: 'reduce' only supports --check");
                return ExitCode::from(2);
            }
            let outcomes = uset_core::reductions::run_reduction_checks(seed, cases);
            let mut failed = false;
            for outcome in &outcomes {
                let status = if outcome.failures == 0 { "pass" } else { "fail" };
                println!(
                    "{}: {} ({} cases, {} failures)",
                    outcome.name, status, outcome.cases, outcome.failures
                );
                failed |= outcome.failures > 0;
            }
            if failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}
