//! Experiment drivers and the `solve` command behind the `fairkc` binary.
//!
//! Every experiment returns its rows in trial order; writing the same rows
//! with the same options always yields the same bytes.

mod experiments;
pub mod records;
pub mod stats;

use std::path::Path;

use serde_json::json;

pub use experiments::{
    approx_settings, derive_seed, exp_approx, exp_heuristics, exp_pof, exp_runtime, splitmix64,
    ApproxSetting, Dataset, DatasetSetup, ExpOptions, APPROX_N, RUNTIME_QUOTAS, SALT_INSTANCE,
    SALT_SOLVER,
};

use crate::clustering::solution_cost;
use crate::error::Result;
use crate::instance::Instance;
use crate::oracle::{brute_force_fair, brute_force_unfair, OracleResult};
use crate::solvers::{Algorithm, FairSolveConfig};

/// What `solve` should run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveTarget {
    Algorithm(Algorithm),
    OracleFair,
    OracleUnfair,
}

impl std::str::FromStr for SolveTarget {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle_fair" => Ok(SolveTarget::OracleFair),
            "oracle_unfair" => Ok(SolveTarget::OracleUnfair),
            other => other.parse().map(SolveTarget::Algorithm),
        }
    }
}

/// Loads an instance, optionally swaps its quotas, runs `target` and returns
/// the report as one JSON object.
pub fn cmd_solve(
    instance_file: impl AsRef<Path>,
    target: SolveTarget,
    quotas_override: Option<Vec<usize>>,
    config: &FairSolveConfig,
) -> Result<serde_json::Value> {
    let mut instance = Instance::read_json(instance_file)?;
    if let Some(q) = quotas_override {
        instance = instance.with_quotas(q)?;
    }
    let oracle_report =
        |name: &str, r: OracleResult, instance: &Instance| -> Result<serde_json::Value> {
            let cost = solution_cost(instance, &r.witness)?;
            Ok(json!({
                "algorithm": name,
                "opt_value": r.opt_value,
                "centers": r.witness,
                "cost": cost,
                "work": r.work,
                "group_counts": instance.group_counts(&r.witness),
            }))
        };
    match target {
        SolveTarget::Algorithm(a) => {
            let report = a.run(&instance, config)?;
            let mut v = serde_json::to_value(&report)?;
            v["group_counts"] = json!(report.group_counts(&instance));
            Ok(v)
        }
        SolveTarget::OracleFair => {
            oracle_report("oracle_fair", brute_force_fair(&instance)?, &instance)
        }
        SolveTarget::OracleUnfair => {
            let r = brute_force_unfair(&instance, instance.k())?;
            oracle_report("oracle_unfair", r, &instance)
        }
    }
}
