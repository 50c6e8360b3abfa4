use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::records::{append_summaries, join_counts, ExperimentRecord, RuntimeRow};
use super::stats::mean;
use crate::error::{Error, Result};
use crate::generators::{erdos_renyi, load_adult, AdultData, AdultGrouping};
use crate::greedy::Mode;
use crate::instance::Instance;
use crate::oracle::{approx_factor, brute_force_fair};
use crate::solvers::{max_group_deviation, Algorithm, FairSolveConfig, SolveReport};

/// SplitMix64 finaliser.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Folds `parts` into `base` one SplitMix64 round at a time.
///
/// Experiments call it as `derive_seed(base, &[setting, trial, salt])`, so a
/// trial's seeds depend only on its coordinates, never on run order.
pub fn derive_seed(base: u64, parts: &[u64]) -> u64 {
    parts
        .iter()
        .fold(splitmix64(base), |acc, &p| splitmix64(acc ^ p))
}

/// Salt for the seed that generates a trial's instance.
pub const SALT_INSTANCE: u64 = 0x1;
/// Salt for the seed handed to the solvers.
pub const SALT_SOLVER: u64 = 0x2;

/// Settings shared by every experiment command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpOptions {
    pub trials: usize,
    pub seed: u64,
    pub mode: Mode,
    /// Record wall times in trial rows. Off by default because timings differ
    /// between runs and would break byte-identical output.
    pub timing: bool,
}

impl Default for ExpOptions {
    fn default() -> Self {
        Self {
            trials: 200,
            seed: 0,
            mode: Mode::SeededRandom,
            timing: false,
        }
    }
}

impl ExpOptions {
    fn solver(&self, setting: usize, trial: usize) -> FairSolveConfig {
        FairSolveConfig {
            mode: self.mode,
            seed: derive_seed(self.seed, &[setting as u64, trial as u64, SALT_SOLVER]),
            record_trace: false,
        }
    }

    fn instance_seed(&self, setting: usize, trial: usize) -> u64 {
        derive_seed(self.seed, &[setting as u64, trial as u64, SALT_INSTANCE])
    }
}

fn trial_row(
    experiment: &str,
    setting: &str,
    trial: usize,
    seed: u64,
    instance: &Instance,
    report: &SolveReport,
    opts: &ExpOptions,
) -> ExperimentRecord {
    let counts = report.group_counts(instance);
    let mut r = ExperimentRecord::trial(experiment, setting, trial, seed, report.algorithm.name());
    r.cost = Some(report.cost);
    r.wall_time_seconds = opts.timing.then_some(report.wall_time_seconds);
    r.max_group_deviation = Some(max_group_deviation(&counts));
    r.group_center_counts = join_counts(&counts);
    r
}

/// One row of the small-instance approximation study.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxSetting {
    pub c0_size: usize,
    pub quotas: Vec<usize>,
}

impl ApproxSetting {
    pub fn new(c0_size: usize, quotas: &[usize]) -> Self {
        Self {
            c0_size,
            quotas: quotas.to_vec(),
        }
    }

    pub fn label(&self, index: usize) -> String {
        let q: Vec<String> = self.quotas.iter().map(usize::to_string).collect();
        format!("({}) c0={} k={}", index + 1, self.c0_size, q.join("/"))
    }
}

/// The seven settings of the approximation-factor boxplot.
pub fn approx_settings() -> Vec<ApproxSetting> {
    vec![
        ApproxSetting::new(2, &[2, 2]),
        ApproxSetting::new(2, &[4, 2]),
        ApproxSetting::new(2, &[2, 2, 2]),
        ApproxSetting::new(1, &[5, 1, 1]),
        ApproxSetting::new(0, &[2, 2, 2, 2]),
        ApproxSetting::new(0, &[3, 3, 1, 1]),
        ApproxSetting::new(0, &[2, 2, 2, 1, 1]),
    ]
}

/// Graph size used by the approximation study.
pub const APPROX_N: usize = 25;

/// Approximation factors of `fairm` (and `fair2` when m = 2) against the
/// exact fair optimum on random graphs with `n` vertices.
pub fn exp_approx(
    settings: &[ApproxSetting],
    n: usize,
    opts: &ExpOptions,
) -> Result<Vec<ExperimentRecord>> {
    let mut records = Vec::new();
    for (si, setting) in settings.iter().enumerate() {
        let label = setting.label(si);
        for trial in 0..opts.trials {
            let seed = opts.instance_seed(si, trial);
            let instance = erdos_renyi(n, &setting.quotas, setting.c0_size, seed)?;
            let opt = brute_force_fair(&instance)?.opt_value;
            let mut algorithms = vec![Algorithm::FairM];
            if instance.m() == 2 {
                algorithms.push(Algorithm::Fair2);
            }
            for algorithm in algorithms {
                let report = algorithm.run(&instance, &opts.solver(si, trial))?;
                let mut row = trial_row("approx", &label, trial, seed, &instance, &report, opts);
                row.opt_value = Some(opt);
                row.approx_factor = Some(approx_factor(report.cost, opt)?);
                records.push(row);
            }
        }
    }
    append_summaries(&mut records);
    Ok(records)
}

/// Quotas of the runtime study: five groups, four centers each.
pub const RUNTIME_QUOTAS: [usize; 5] = [4, 4, 4, 4, 4];

/// Mean `fairm` wall time per graph size, no fixed centers.
///
/// Each trial builds a fresh instance so no cached shortest-path rows carry
/// over; only the solver call is timed.
pub fn exp_runtime(
    sizes: &[usize],
    quotas: &[usize],
    trials: usize,
    seed: u64,
) -> Result<Vec<RuntimeRow>> {
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadParameters(
            "sizes must be strictly ascending".into(),
        ));
    }
    if trials == 0 {
        return Err(Error::BadParameters("at least one trial is needed".into()));
    }
    let opts = ExpOptions {
        trials,
        seed,
        mode: Mode::SeededRandom,
        timing: true,
    };
    let mut rows: Vec<RuntimeRow> = Vec::new();
    for (si, &size) in sizes.iter().enumerate() {
        let mut times = Vec::with_capacity(trials);
        let mut costs = Vec::with_capacity(trials);
        for trial in 0..trials {
            let instance = erdos_renyi(size, quotas, 0, opts.instance_seed(si, trial))?;
            let report = Algorithm::FairM.run(&instance, &opts.solver(si, trial))?;
            times.push(report.wall_time_seconds);
            costs.push(report.cost);
        }
        let mean_time = mean(&times);
        rows.push(RuntimeRow {
            size,
            trials,
            mean_time_seconds: mean_time,
            ratio_to_previous: rows.last().map(|p| mean_time / p.mean_time_seconds),
            mean_cost: mean(&costs),
        });
    }
    Ok(rows)
}

/// Data source for the heuristic and price-of-fairness studies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dataset {
    Er2000,
    AdultGender,
    AdultRace,
}

impl Dataset {
    pub fn name(self) -> &'static str {
        match self {
            Dataset::Er2000 => "er2000",
            Dataset::AdultGender => "adult_gender",
            Dataset::AdultRace => "adult_race",
        }
    }

    /// Quotas used when none are given.
    pub fn default_quotas(self) -> Vec<usize> {
        match self {
            Dataset::Er2000 => vec![4; 10],
            Dataset::AdultGender => vec![200, 200],
            Dataset::AdultRace => vec![50; 5],
        }
    }

    pub fn default_c0_size(self) -> usize {
        match self {
            Dataset::Er2000 => 10,
            Dataset::AdultGender | Dataset::AdultRace => 100,
        }
    }
}

impl fmt::Display for Dataset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Dataset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Dataset::Er2000, Dataset::AdultGender, Dataset::AdultRace]
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| Error::BadParameters(format!("unknown dataset {s:?}")))
    }
}

/// Dataset plus overrides for one heuristic or price-of-fairness run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatasetSetup {
    pub dataset: Dataset,
    pub quotas: Option<Vec<usize>>,
    pub c0_size: Option<usize>,
    pub adult_path: Option<PathBuf>,
}

impl DatasetSetup {
    pub fn new(dataset: Dataset) -> Self {
        Self {
            dataset,
            quotas: None,
            c0_size: None,
            adult_path: None,
        }
    }

    fn quotas(&self) -> Vec<usize> {
        self.quotas
            .clone()
            .unwrap_or_else(|| self.dataset.default_quotas())
    }

    fn c0_size(&self) -> usize {
        self.c0_size
            .unwrap_or_else(|| self.dataset.default_c0_size())
    }

    fn label(&self) -> String {
        let q: Vec<String> = self.quotas().iter().map(usize::to_string).collect();
        format!("{} c0={} k={}", self.dataset, self.c0_size(), q.join("/"))
    }
}

enum Source {
    Graph { n: usize },
    Adult(AdultData),
}

fn open_source(setup: &DatasetSetup) -> Result<Source> {
    let grouping = match setup.dataset {
        Dataset::Er2000 => return Ok(Source::Graph { n: 2000 }),
        Dataset::AdultGender => AdultGrouping::Gender,
        Dataset::AdultRace => AdultGrouping::Race,
    };
    let path = setup
        .adult_path
        .clone()
        .ok_or_else(|| Error::FileNotFound(PathBuf::from("<adult path not given>")))?;
    Ok(Source::Adult(load_adult(path, grouping)?))
}

impl Source {
    /// Graph instances are redrawn per trial; Adult keeps its points and
    /// redraws only the fixed centers.
    fn instance(&self, quotas: &[usize], c0_size: usize, seed: u64) -> Result<Instance> {
        match self {
            Source::Graph { n } => erdos_renyi(*n, quotas, c0_size, seed),
            Source::Adult(data) => data.instance(quotas, c0_size, seed),
        }
    }
}

fn compare(
    experiment: &str,
    algorithms: &[Algorithm],
    setup: &DatasetSetup,
    opts: &ExpOptions,
) -> Result<Vec<ExperimentRecord>> {
    let source = open_source(setup)?;
    let (quotas, c0_size, label) = (setup.quotas(), setup.c0_size(), setup.label());
    let mut records = Vec::new();
    for trial in 0..opts.trials {
        let seed = opts.instance_seed(0, trial);
        let instance = source.instance(&quotas, c0_size, seed)?;
        for &algorithm in algorithms {
            let report = algorithm.run(&instance, &opts.solver(0, trial))?;
            records.push(trial_row(
                experiment, &label, trial, seed, &instance, &report, opts,
            ));
        }
    }
    append_summaries(&mut records);
    Ok(records)
}

/// Costs of `fairm` and the two heuristics on the same instances.
pub fn exp_heuristics(setup: &DatasetSetup, opts: &ExpOptions) -> Result<Vec<ExperimentRecord>> {
    compare(
        "heuristics",
        &[
            Algorithm::FairM,
            Algorithm::HeuristicA,
            Algorithm::HeuristicB,
        ],
        setup,
        opts,
    )
}

/// Costs of unconstrained greedy and `fairm` under equal quotas, with the
/// group imbalance of each output.
pub fn exp_pof(setup: &DatasetSetup, opts: &ExpOptions) -> Result<Vec<ExperimentRecord>> {
    let quotas = setup.quotas();
    if quotas.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::BadParameters(
            "price-of-fairness runs need equal quotas".into(),
        ));
    }
    compare("pof", &[Algorithm::Greedy, Algorithm::FairM], setup, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::records::RowKind;

    #[test]
    fn seeds_depend_on_coordinates_only() {
        assert_eq!(derive_seed(7, &[1, 2, 3]), derive_seed(7, &[1, 2, 3]));
        assert_ne!(derive_seed(7, &[1, 2, 3]), derive_seed(7, &[2, 1, 3]));
        assert_ne!(
            derive_seed(7, &[0, 0, SALT_INSTANCE]),
            derive_seed(7, &[0, 0, SALT_SOLVER])
        );
        // Reference value of the SplitMix64 finaliser.
        assert_eq!(splitmix64(0), 0xE220_A839_7B1D_CDAF);
    }

    #[test]
    fn approx_rows_and_summaries() {
        let opts = ExpOptions {
            trials: 3,
            seed: 5,
            ..ExpOptions::default()
        };
        let settings = [ApproxSetting::new(1, &[1, 1])];
        let rows = exp_approx(&settings, 10, &opts).unwrap();
        let trials = rows.iter().filter(|r| r.row_kind == RowKind::Trial).count();
        assert_eq!(trials, 6);
        assert_eq!(rows.len(), 8);
        assert!(rows
            .iter()
            .filter(|r| r.row_kind == RowKind::Trial)
            .all(|r| r.approx_factor.unwrap() >= 1.0 && r.wall_time_seconds.is_none()));
    }

    #[test]
    fn pof_rejects_unequal_quotas() {
        let mut setup = DatasetSetup::new(Dataset::Er2000);
        setup.quotas = Some(vec![1, 2]);
        assert!(exp_pof(&setup, &ExpOptions::default()).is_err());
    }

    #[test]
    fn adult_without_path_is_file_not_found() {
        let setup = DatasetSetup::new(Dataset::AdultRace);
        let err = exp_heuristics(&setup, &ExpOptions::default()).unwrap_err();
        assert!(matches!(err, Error::FileNotFound(_)));
    }

    #[test]
    fn runtime_rows_carry_ratios() {
        let rows = exp_runtime(&[60, 120], &[1, 1], 1, 3).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows[0].ratio_to_previous.is_none());
        assert!(rows[1].ratio_to_previous.unwrap() > 0.0);
        assert!(exp_runtime(&[120, 60], &[1, 1], 1, 3).is_err());
    }
}
