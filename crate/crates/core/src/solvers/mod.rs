//! Fair k-center solvers and the unconstrained greedy baseline.

mod heuristics;
mod m_groups;
mod two_groups;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub use heuristics::{heuristic_a, heuristic_b};
pub use m_groups::fair_m_groups;
pub use two_groups::fair_two_groups;

use crate::clustering::solution_cost;
use crate::error::{Error, Result};
use crate::greedy::{greedy_k_center, Chooser, Mode};
use crate::instance::{CenterSet, Instance};
use crate::metric::Metric;

/// Solver settings shared by every algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct FairSolveConfig {
    pub mode: Mode,
    /// Only read in [`Mode::SeededRandom`].
    pub seed: u64,
    pub record_trace: bool,
}

impl FairSolveConfig {
    pub fn deterministic() -> Self {
        Self::default()
    }

    pub fn seeded(seed: u64) -> Self {
        Self {
            mode: Mode::SeededRandom,
            seed,
            record_trace: false,
        }
    }

    pub fn with_trace(mut self) -> Self {
        self.record_trace = true;
        self
    }
}

/// The algorithms exposed by the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    /// Farthest-first traversal that ignores group quotas.
    Greedy,
    Fair2,
    FairM,
    HeuristicA,
    HeuristicB,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Greedy,
        Algorithm::Fair2,
        Algorithm::FairM,
        Algorithm::HeuristicA,
        Algorithm::HeuristicB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Greedy => "greedy",
            Algorithm::Fair2 => "fair2",
            Algorithm::FairM => "fairm",
            Algorithm::HeuristicA => "heuristic_a",
            Algorithm::HeuristicB => "heuristic_b",
        }
    }

    pub fn run(self, instance: &Instance, config: &FairSolveConfig) -> Result<SolveReport> {
        match self {
            Algorithm::Greedy => greedy(instance, config),
            Algorithm::Fair2 => fair_two_groups(instance, config),
            Algorithm::FairM => fair_m_groups(instance, config),
            Algorithm::HeuristicA => heuristic_a(instance, config),
            Algorithm::HeuristicB => heuristic_b(instance, config),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::BadParameters(format!("unknown algorithm {s:?}")))
    }
}

/// One step of a solver run, recorded when tracing is on.
///
/// `level` is 1 for the top-level call and grows with each recursive call.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TraceEvent {
    /// `radius` is `+inf` (serialised as `null`) for a pick with no prior center.
    GreedyPick {
        level: usize,
        point: usize,
        radius: f64,
    },
    Swap {
        level: usize,
        removed: usize,
        added: usize,
    },
    /// Groups, by their original ids, handed to the next recursive call.
    Recurse {
        level: usize,
        groups: Vec<usize>,
    },
    Fill {
        level: usize,
        point: usize,
    },
}

/// Result of one solver call.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub algorithm: Algorithm,
    pub centers: CenterSet,
    /// Cost with the instance's fixed centers included.
    pub cost: f64,
    pub wall_time_seconds: f64,
    pub swaps_performed: usize,
    /// Number of nested calls, 1 when the algorithm did not recurse.
    pub recursion_depth: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceEvent>>,
}

impl SolveReport {
    /// Center count per group.
    pub fn group_counts(&self, instance: &Instance) -> Vec<usize> {
        instance.group_counts(self.centers.as_slice())
    }

    /// Largest difference between the center counts of any two groups.
    pub fn max_group_deviation(&self, instance: &Instance) -> usize {
        max_group_deviation(&self.group_counts(instance))
    }
}

/// `max_i,j |counts[i] - counts[j]|`, zero for fewer than two groups.
pub fn max_group_deviation(counts: &[usize]) -> usize {
    let max = counts.iter().max().copied().unwrap_or(0);
    let min = counts.iter().min().copied().unwrap_or(0);
    max - min
}

/// Bookkeeping shared by the solver implementations.
pub(crate) struct Run<'a> {
    pub metric: &'a Metric,
    pub chooser: Chooser,
    pub trace: Option<Vec<TraceEvent>>,
    pub swaps: usize,
    pub depth: usize,
}

impl<'a> Run<'a> {
    pub fn new(instance: &'a Instance, config: &FairSolveConfig) -> Self {
        Self {
            metric: instance.metric(),
            chooser: Chooser::new(config.mode, config.seed),
            trace: config.record_trace.then(Vec::new),
            swaps: 0,
            depth: 1,
        }
    }

    pub fn record(&mut self, event: impl FnOnce() -> TraceEvent) {
        if let Some(trace) = &mut self.trace {
            trace.push(event());
        }
    }

    pub fn greedy(
        &mut self,
        level: usize,
        points: &[usize],
        k: usize,
        fixed: &[usize],
    ) -> Result<Vec<usize>> {
        let t = greedy_k_center(self.metric, points, k, fixed, &mut self.chooser)?;
        for (&point, &radius) in t.chosen.iter().zip(&t.radii) {
            self.record(|| TraceEvent::GreedyPick {
                level,
                point,
                radius,
            });
        }
        Ok(t.chosen)
    }

    /// Adds `count` members of `pool` to `out`, recording each as a fill.
    pub fn fill(
        &mut self,
        level: usize,
        pool: &[usize],
        count: usize,
        out: &mut Vec<usize>,
    ) -> Result<()> {
        for point in self.chooser.choose_many(pool, count)? {
            self.record(|| TraceEvent::Fill { level, point });
            out.push(point);
        }
        Ok(())
    }

    /// Times `body`, then evaluates the returned centers on the instance.
    pub fn report(
        instance: &Instance,
        config: &FairSolveConfig,
        algorithm: Algorithm,
        body: impl FnOnce(&mut Run<'_>) -> Result<Vec<usize>>,
    ) -> Result<SolveReport> {
        let mut run = Run::new(instance, config);
        let start = Instant::now();
        let centers = body(&mut run)?;
        let wall_time_seconds = start.elapsed().as_secs_f64();
        let centers = CenterSet::new(centers, instance.n())?;
        let cost = solution_cost(instance, centers.as_slice())?;
        Ok(SolveReport {
            algorithm,
            centers,
            cost,
            wall_time_seconds,
            swaps_performed: run.swaps,
            recursion_depth: run.depth,
            trace: run.trace,
        })
    }
}

/// Unconstrained farthest-first traversal for `k` centers, seeded with the fixed centers.
pub fn greedy(instance: &Instance, config: &FairSolveConfig) -> Result<SolveReport> {
    Run::report(instance, config, Algorithm::Greedy, |run| {
        let points: Vec<usize> = (0..instance.n()).collect();
        run.greedy(1, &points, instance.k(), instance.c0())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("nope".parse::<Algorithm>().is_err());
    }
}
