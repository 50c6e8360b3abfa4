//! Command-line front end: `solve`, `gen` and the four experiment commands.

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fairkc::generators::{
    adversarial, erdos_renyi, grid_clusters, ingest_adult, AdultGrouping, AdversarialKind,
};
use fairkc::harness::records::{write_records, write_runtime};
use fairkc::harness::{
    approx_settings, cmd_solve, exp_approx, exp_heuristics, exp_pof, exp_runtime, Dataset,
    DatasetSetup, ExpOptions, SolveTarget, APPROX_N, RUNTIME_QUOTAS,
};
use fairkc::{Error, FairSolveConfig, Instance, Mode};

#[derive(Parser)]
#[command(name = "fairkc", version, about = "Fair k-center clustering")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Break ties by lowest index instead of drawing them from the seed.
    #[arg(long)]
    deterministic: bool,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn mode(&self) -> Mode {
        if self.deterministic {
            Mode::Deterministic
        } else {
            Mode::SeededRandom
        }
    }
}

#[derive(Args)]
struct ExpArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    /// Fill the wall_time_seconds column. Output is then no longer reproducible.
    #[arg(long)]
    timing: bool,
}

impl ExpArgs {
    fn options(&self) -> ExpOptions {
        ExpOptions {
            trials: self.trials,
            seed: self.common.seed,
            mode: self.common.mode(),
            timing: self.timing,
        }
    }
}

#[derive(Args)]
struct DatasetArgs {
    /// er2000, adult_gender or adult_race.
    #[arg(long)]
    dataset: Dataset,
    #[arg(long, value_delimiter = ',')]
    quotas: Option<Vec<usize>>,
    #[arg(long)]
    c0: Option<usize>,
    #[arg(long)]
    adult_path: Option<PathBuf>,
}

impl DatasetArgs {
    fn setup(&self) -> DatasetSetup {
        DatasetSetup {
            dataset: self.dataset,
            quotas: self.quotas.clone(),
            c0_size: self.c0,
            adult_path: self.adult_path.clone(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance file and print the report as JSON.
    Solve {
        #[arg(long)]
        instance: PathBuf,
        /// greedy, fair2, fairm, heuristic_a, heuristic_b, oracle_fair or oracle_unfair.
        #[arg(long)]
        algorithm: SolveTarget,
        #[arg(long, value_delimiter = ',')]
        quotas: Option<Vec<usize>>,
        /// Include the step-by-step trace.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Generate an instance file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Approximation factors against the exact optimum on small random graphs.
    ExpApprox {
        #[command(flatten)]
        exp: ExpArgs,
        #[arg(long, default_value_t = APPROX_N)]
        n: usize,
    },
    /// Mean solver time per graph size.
    ExpRuntime {
        #[arg(long, value_delimiter = ',', default_values_t = [1000, 2000, 4000, 8000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The fair solver against two quota-respecting heuristics.
    ExpHeuristics {
        #[command(flatten)]
        exp: ExpArgs,
        #[command(flatten)]
        data: DatasetArgs,
    },
    /// Unconstrained greedy against the fair solver under equal quotas.
    ExpPof {
        #[command(flatten)]
        exp: ExpArgs,
        #[command(flatten)]
        data: DatasetArgs,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Random connected graph with shortest-path distances.
    Er {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        quotas: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        c0: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Planted clusters around an integer grid.
    Grid {
        #[arg(long)]
        grid_side: usize,
        #[arg(long)]
        points_total: usize,
        #[arg(long)]
        groups: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Adversarial family on which the fair solvers approach their bounds.
    Adversarial {
        /// 2 or 3.
        #[arg(long)]
        groups: usize,
        #[arg(long, default_value_t = 0.01)]
        delta: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Adult census sample with l1 distances on standardised features.
    Adult {
        #[arg(long)]
        adult_path: PathBuf,
        /// gender or race.
        #[arg(long)]
        grouping: String,
        #[arg(long, value_delimiter = ',', required = true)]
        quotas: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        c0: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn sink(out: Option<&Path>) -> fairkc::Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn emit_instance(instance: &Instance, out: Option<&Path>) -> fairkc::Result<()> {
    let mut w = sink(out)?;
    writeln!(w, "{}", instance.to_json_string()?)?;
    Ok(())
}

fn run(cli: Cli) -> fairkc::Result<()> {
    match cli.command {
        Command::Solve {
            instance,
            algorithm,
            quotas,
            trace,
            common,
        } => {
            let config = FairSolveConfig {
                mode: common.mode(),
                seed: common.seed,
                record_trace: trace,
            };
            let report = cmd_solve(&instance, algorithm, quotas, &config)?;
            let mut w = sink(common.out.as_deref())?;
            writeln!(w, "{}", serde_json::to_string(&report)?)?;
        }
        Command::Gen { kind } => match kind {
            GenKind::Er {
                n,
                quotas,
                c0,
                seed,
                out,
            } => emit_instance(&erdos_renyi(n, &quotas, c0, seed)?, out.as_deref())?,
            GenKind::Grid {
                grid_side,
                points_total,
                groups,
                seed,
                out,
            } => {
                let g = grid_clusters(grid_side, points_total, groups, seed)?;
                emit_instance(&g.instance, out.as_deref())?;
            }
            GenKind::Adversarial { groups, delta, out } => {
                let kind = match groups {
                    2 => AdversarialKind::TwoGroups,
                    3 => AdversarialKind::ThreeGroups,
                    other => {
                        return Err(Error::BadParameters(format!(
                            "no adversarial family with {other} groups"
                        )))
                    }
                };
                emit_instance(&adversarial(kind, delta)?.instance, out.as_deref())?;
            }
            GenKind::Adult {
                adult_path,
                grouping,
                quotas,
                c0,
                seed,
                out,
            } => {
                let grouping = match grouping.as_str() {
                    "gender" => AdultGrouping::Gender,
                    "race" => AdultGrouping::Race,
                    other => {
                        return Err(Error::BadParameters(format!("unknown grouping {other:?}")))
                    }
                };
                let instance = ingest_adult(adult_path, grouping, &quotas, c0, seed)?;
                emit_instance(&instance, out.as_deref())?;
            }
        },
        Command::ExpApprox { exp, n } => {
            let records = exp_approx(&approx_settings(), n, &exp.options())?;
            write_records(&records, sink(exp.common.out.as_deref())?)?;
        }
        Command::ExpRuntime {
            sizes,
            trials,
            seed,
            out,
        } => {
            let rows = exp_runtime(&sizes, &RUNTIME_QUOTAS, trials, seed)?;
            write_runtime(&rows, sink(out.as_deref())?)?;
        }
        Command::ExpHeuristics { exp, data } => {
            let records = exp_heuristics(&data.setup(), &exp.options())?;
            write_records(&records, sink(exp.common.out.as_deref())?)?;
        }
        Command::ExpPof { exp, data } => {
            let records = exp_pof(&data.setup(), &exp.options())?;
            write_records(&records, sink(exp.common.out.as_deref())?)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_io() { 2 } else { 1 })
        }
    }
}
