//! Instance generators: random graphs, planted grid clusters, the two
//! adversarial families, and the Adult census data.

mod adult;
mod adversarial;
mod erdos_renyi;
mod grid;

pub use adult::{ingest_adult, load_adult, AdultData, AdultGrouping, ADULT_ROWS};
pub use adversarial::{adversarial, AdversarialFixture, AdversarialKind, ExpectedRun};
pub use erdos_renyi::{edge_probability, erdos_renyi, MAX_CONNECT_ATTEMPTS};
pub use grid::{grid_clusters, GridInstance, PLANTED_RADIUS};

use rand::seq::index::sample;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Uniform subset of `0..n` of the given size, sorted.
pub(crate) fn random_subset(rng: &mut ChaCha8Rng, n: usize, size: usize) -> Result<Vec<usize>> {
    if size > n {
        return Err(Error::BadParameters(format!(
            "cannot fix {size} centers among {n} points"
        )));
    }
    let mut v = sample(rng, n, size).into_vec();
    v.sort_unstable();
    Ok(v)
}
