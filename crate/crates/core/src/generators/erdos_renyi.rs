use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::random_subset;
use crate::error::{Error, Result};
use crate::graph::{GraphMetric, WeightedGraph};
use crate::instance::{validate, Instance};

/// Rejection sampling gives up after this many disconnected draws.
pub const MAX_CONNECT_ATTEMPTS: usize = 1000;

/// Label draws allowed before an instance is declared infeasible.
const MAX_LABEL_ATTEMPTS: usize = 1000;

/// `2 ln(n) / n`, capped at 1.
pub fn edge_probability(n: usize) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let n = n as f64;
    (2.0 * n.ln() / n).min(1.0)
}

/// Draws one G(n, p) edge list with integer weights in `1..=100`.
///
/// Pairs are visited in a fixed order and skipped geometrically, so the cost
/// is proportional to the number of edges rather than `n^2`.
fn draw_edges(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Vec<(usize, usize, f64)> {
    let mut edges = Vec::new();
    if p <= 0.0 || n < 2 {
        return edges;
    }
    if p >= 1.0 {
        for v in 1..n {
            for w in 0..v {
                edges.push((w, v, rng.gen_range(1..=100u32) as f64));
            }
        }
        return edges;
    }
    let log_q = (1.0 - p).ln();
    let (mut v, mut w): (usize, i64) = (1, -1);
    while v < n {
        let r: f64 = rng.gen();
        let skip = ((1.0 - r).ln() / log_q).floor() as i64;
        w += 1 + skip;
        while w >= v as i64 && v < n {
            w -= v as i64;
            v += 1;
        }
        if v < n {
            edges.push((w as usize, v, rng.gen_range(1..=100u32) as f64));
        }
    }
    edges
}

/// Random connected graph instance with uniformly random group labels.
///
/// The metric is the shortest-path metric of an Erdős–Rényi graph with edge
/// probability [`edge_probability`]. Labels are drawn i.i.d. uniform over
/// `quotas.len()` groups and `c0_size` fixed centers are drawn uniformly;
/// draws that leave some group unable to meet its quota are repeated.
pub fn erdos_renyi(n: usize, quotas: &[usize], c0_size: usize, seed: u64) -> Result<Instance> {
    let m = quotas.len();
    if n == 0 || m == 0 {
        return Err(Error::BadParameters(
            "need at least one point and one group".into(),
        ));
    }
    if c0_size > n {
        return Err(Error::BadParameters(format!(
            "c0 of size {c0_size} exceeds n = {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = edge_probability(n);
    let mut graph = None;
    for _ in 0..MAX_CONNECT_ATTEMPTS {
        let g = WeightedGraph::new(n, draw_edges(&mut rng, n, p))?;
        if g.is_connected() {
            graph = Some(g);
            break;
        }
    }
    let graph = graph.ok_or(Error::ConnectivityRetriesExhausted {
        attempts: MAX_CONNECT_ATTEMPTS,
    })?;

    let mut last_err = None;
    for _ in 0..MAX_LABEL_ATTEMPTS {
        let groups: Vec<usize> = (0..n).map(|_| rng.gen_range(0..m)).collect();
        let c0 = random_subset(&mut rng, n, c0_size)?;
        match validate(n, &groups, quotas, &c0) {
            Ok(()) => {
                let metric = GraphMetric::new(graph)?;
                return Instance::new(metric, groups, quotas.to_vec(), c0);
            }
            Err(e @ Error::InfeasibleQuota { .. }) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.expect("at least one label draw was made"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_instance() {
        let a = erdos_renyi(40, &[2, 2], 3, 11).unwrap();
        let b = erdos_renyi(40, &[2, 2], 3, 11).unwrap();
        assert_eq!(a.groups(), b.groups());
        assert_eq!(a.c0(), b.c0());
        for i in 0..40 {
            assert_eq!(a.dist(0, i), b.dist(0, i));
        }
    }

    #[test]
    fn edge_density_tracks_probability() {
        let n = 400;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let p = edge_probability(n);
        let expected = p * (n * (n - 1) / 2) as f64;
        let got = draw_edges(&mut rng, n, p).len() as f64;
        assert!(
            (got - expected).abs() < 0.15 * expected,
            "{got} vs {expected}"
        );
    }

    #[test]
    fn pairs_are_distinct_and_weights_integral() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let edges = draw_edges(&mut rng, 60, 0.2);
        let mut pairs: Vec<(usize, usize)> = edges.iter().map(|e| (e.0, e.1)).collect();
        pairs.sort_unstable();
        pairs.dedup();
        assert_eq!(pairs.len(), edges.len());
        assert!(edges
            .iter()
            .all(|e| e.0 < e.1 && (1.0..=100.0).contains(&e.2) && e.2.fract() == 0.0));
    }

    #[test]
    fn infeasible_quotas_are_reported() {
        let err = erdos_renyi(5, &[4, 4], 0, 1).unwrap_err();
        assert!(matches!(err, Error::InfeasibleQuota { .. }));
    }
}
