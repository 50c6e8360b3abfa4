//! CSV rows produced by the experiments.
//!
//! One file holds both per-trial rows and per-(setting, algorithm) summary
//! rows; the `row_kind` column tells them apart. Absent values are empty
//! fields.

use std::io::Write;

use serde::{Deserialize, Serialize};

use super::stats::summarize;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowKind {
    Trial,
    Summary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub row_kind: RowKind,
    pub experiment: String,
    pub setting: String,
    pub trial: Option<usize>,
    pub seed: Option<u64>,
    pub algorithm: String,
    pub cost: Option<f64>,
    pub opt_value: Option<f64>,
    /// Present exactly when `opt_value` is.
    pub approx_factor: Option<f64>,
    /// Filled only when timing was requested, so default output stays reproducible.
    pub wall_time_seconds: Option<f64>,
    /// Centers per group, `;`-separated in group order.
    pub group_center_counts: String,
    pub max_group_deviation: Option<usize>,
    /// Summary rows only: the column the statistics describe.
    pub statistic: Option<String>,
    pub min: Option<f64>,
    pub q1: Option<f64>,
    pub median: Option<f64>,
    pub q3: Option<f64>,
    pub max: Option<f64>,
}

impl ExperimentRecord {
    pub fn trial(
        experiment: &str,
        setting: &str,
        trial: usize,
        seed: u64,
        algorithm: &str,
    ) -> Self {
        Self {
            row_kind: RowKind::Trial,
            experiment: experiment.to_string(),
            setting: setting.to_string(),
            trial: Some(trial),
            seed: Some(seed),
            algorithm: algorithm.to_string(),
            cost: None,
            opt_value: None,
            approx_factor: None,
            wall_time_seconds: None,
            group_center_counts: String::new(),
            max_group_deviation: None,
            statistic: None,
            min: None,
            q1: None,
            median: None,
            q3: None,
            max: None,
        }
    }

    /// The value a summary row aggregates: the factor when known, else the cost.
    pub fn headline(&self) -> Option<f64> {
        self.approx_factor.or(self.cost)
    }
}

pub fn join_counts(counts: &[usize]) -> String {
    counts
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

/// Appends one summary row per `(setting, algorithm)` pair, in first-seen order.
pub fn append_summaries(records: &mut Vec<ExperimentRecord>) {
    let mut keys: Vec<(String, String, String)> = Vec::new();
    for r in records.iter().filter(|r| r.row_kind == RowKind::Trial) {
        let key = (r.experiment.clone(), r.setting.clone(), r.algorithm.clone());
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    for (experiment, setting, algorithm) in keys {
        let rows: Vec<&ExperimentRecord> = records
            .iter()
            .filter(|r| {
                r.row_kind == RowKind::Trial
                    && r.experiment == experiment
                    && r.setting == setting
                    && r.algorithm == algorithm
            })
            .collect();
        let statistic = if rows.iter().all(|r| r.approx_factor.is_some()) {
            "approx_factor"
        } else {
            "cost"
        };
        let values: Vec<f64> = rows.iter().filter_map(|r| r.headline()).collect();
        let Some(s) = summarize(&values) else {
            continue;
        };
        records.push(ExperimentRecord {
            row_kind: RowKind::Summary,
            experiment,
            setting,
            trial: None,
            seed: None,
            algorithm,
            cost: None,
            opt_value: None,
            approx_factor: None,
            wall_time_seconds: None,
            group_center_counts: String::new(),
            max_group_deviation: None,
            statistic: Some(statistic.to_string()),
            min: Some(s.min),
            q1: Some(s.q1),
            median: Some(s.median),
            q3: Some(s.q3),
            max: Some(s.max),
        });
    }
}

pub fn write_records<W: Write>(records: &[ExperimentRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_records<R: std::io::Read>(input: R) -> Result<Vec<ExperimentRecord>> {
    let mut r = csv::Reader::from_reader(input);
    let mut out = Vec::new();
    for rec in r.deserialize() {
        out.push(rec?);
    }
    Ok(out)
}

/// One line of the runtime study.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuntimeRow {
    pub size: usize,
    pub trials: usize,
    pub mean_time_seconds: f64,
    /// Mean time divided by the previous size's mean time.
    pub ratio_to_previous: Option<f64>,
    pub mean_cost: f64,
}

pub fn write_runtime<W: Write>(rows: &[RuntimeRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
