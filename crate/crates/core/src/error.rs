//! Error type shared by every module.

use std::path::PathBuf;

use thiserror::Error;

/// Everything that can go wrong while building, solving or evaluating an instance.
#[derive(Debug, Error)]
pub enum Error {
    #[error("group {group} requests {quota} centers but only {available} eligible members exist")]
    InfeasibleQuota {
        group: usize,
        quota: usize,
        available: usize,
    },

    #[error("point {point} has group id {group}, but the instance declares {groups} groups")]
    BadGroupId {
        point: usize,
        group: usize,
        groups: usize,
    },

    #[error("point {0} appears more than once in the fixed center set")]
    DuplicateC0(usize),

    #[error("point {0} appears more than once in the center set")]
    DuplicateCenter(usize),

    #[error("index {index} is out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("clustering cost is undefined without any center")]
    EmptyCenterSet,

    #[error("requested {requested} centers but only {available} candidates remain")]
    NotEnoughPoints { requested: usize, available: usize },

    #[error("quotas sum to {quota_sum} but {centers} centers were supplied")]
    QuotaSumMismatch { quota_sum: usize, centers: usize },

    #[error("this algorithm needs exactly {expected} groups, the instance has {found}")]
    WrongGroupCount { expected: usize, found: usize },

    #[error("exhaustive search needs {required} candidates, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("optimum is zero but the solution costs {cost}")]
    ZeroOptimumPositiveCost { cost: f64 },

    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error("no connected graph after {attempts} attempts")]
    ConnectivityRetriesExhausted { attempts: usize },

    #[error("delta must lie strictly between 0 and 0.1, got {0}")]
    BadDelta(f64),

    #[error("invalid metric: {0}")]
    InvalidMetric(String),

    #[error("invalid parameters: {0}")]
    BadParameters(String),

    #[error("file not found: {}", .0.display())]
    FileNotFound(PathBuf),

    #[error("malformed row {row}: {reason}")]
    MalformedRow { row: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for failures caused by the file system or by unreadable files.
    ///
    /// The command line tool maps these to exit status 2 and everything else to 1.
    pub fn is_io(&self) -> bool {
        matches!(
            self,
            Error::Io(_) | Error::FileNotFound(_) | Error::Json(_) | Error::Csv(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
