//! Fair k-center clustering.
//!
//! Given a finite metric space whose points are split into groups, choose
//! exactly `quotas[i]` centers from group `i` so that the largest distance from
//! any point to its nearest center (fixed centers included) is as small as
//! possible.
//!
//! The crate provides:
//!
//! - [`greedy::greedy_k_center`], farthest-first traversal, a 2-approximation
//!   when fairness is ignored;
//! - [`solvers::fair_two_groups`] (factor 5) and [`solvers::fair_m_groups`]
//!   (factor `3 * 2^(m-1) - 1`), both linear in the number of points;
//! - two quota-respecting baselines without guarantees;
//! - exact [`oracle`]s for small instances;
//! - [`generators`] for random graphs, planted grids, adversarial families and
//!   the Adult census data;
//! - the [`harness`] that runs the experiments and writes CSV tables.
//!
//! ```
//! use fairkc::{fair_m_groups, DistanceMatrix, FairSolveConfig, Instance};
//!
//! let xs = [0.0, 1.0, 10.0, 11.0, 20.0];
//! let metric = DistanceMatrix::from_fn(5, |i, j| f64::abs(xs[i] - xs[j])).unwrap();
//! let instance = Instance::new(metric, vec![0, 1, 0, 1, 1], vec![1, 2], vec![]).unwrap();
//! let report = fair_m_groups(&instance, &FairSolveConfig::deterministic()).unwrap();
//! assert_eq!(report.group_counts(&instance), vec![1, 2]);
//! ```

pub mod clustering;
pub mod error;
pub mod exchange;
pub mod generators;
pub mod graph;
pub mod greedy;
pub mod harness;
pub mod instance;
pub mod metric;
pub mod oracle;
pub mod solvers;

pub use clustering::{assign_clusters, clustering_cost, solution_cost, Clustering};
pub use error::{Error, Result};
pub use exchange::{exchange_and_partition, PartitionResult, SwapGraph};
pub use graph::{shortest_path_matrix, GraphMetric, WeightedGraph};
pub use greedy::{greedy_k_center, two_approx_check, Chooser, GreedyTrace, Mode};
pub use instance::{validate, CenterSet, Instance};
pub use metric::{DistanceMatrix, Metric, Norm, PointSet};
pub use oracle::{approx_factor, brute_force_fair, brute_force_unfair, OracleResult};
pub use solvers::{
    fair_m_groups, fair_two_groups, heuristic_a, heuristic_b, Algorithm, FairSolveConfig,
    SolveReport,
};
