//! Nearest-center assignment and clustering cost.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::metric::Metric;

/// Partition of a point list by nearest center.
///
/// `clusters[t]` holds the members of the cluster of `centers[t]` in ascending
/// order. Every center belongs to its own cluster. Other points go to the
/// closest center, ties broken by the earliest position in `centers`.
#[derive(Debug, Clone, PartialEq)]
pub struct Clustering {
    pub centers: Vec<usize>,
    pub clusters: Vec<Vec<usize>>,
}

impl Clustering {
    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }
}

/// Assigns each of `points` to its nearest center.
///
/// Centers need not appear in `points`; they are added to their own cluster
/// regardless. A point that is itself a center always stays with itself, even
/// if an earlier center lies at distance zero.
pub fn assign(metric: &Metric, points: &[usize], centers: &[usize]) -> Clustering {
    let position: HashMap<usize, usize> =
        centers.iter().enumerate().map(|(t, &c)| (c, t)).collect();
    let mut clusters: Vec<Vec<usize>> = centers.iter().map(|&c| vec![c]).collect();
    if centers.is_empty() {
        return Clustering {
            centers: Vec::new(),
            clusters,
        };
    }
    for &p in points {
        if position.contains_key(&p) {
            continue;
        }
        let mut best = 0;
        let mut best_d = metric.dist(centers[0], p);
        for (t, &c) in centers.iter().enumerate().skip(1) {
            let d = metric.dist(c, p);
            if d < best_d {
                best = t;
                best_d = d;
            }
        }
        clusters[best].push(p);
    }
    for cluster in &mut clusters {
        cluster.sort_unstable();
    }
    Clustering {
        centers: centers.to_vec(),
        clusters,
    }
}

/// Largest distance from any of `points` to its nearest center.
///
/// Returns `+inf` when `centers` is empty and `points` is not.
pub fn cost_over(metric: &Metric, points: &[usize], centers: &[usize]) -> f64 {
    let mut worst: f64 = 0.0;
    for &p in points {
        let mut near = f64::INFINITY;
        for &c in centers {
            let d = metric.dist(c, p);
            if d < near {
                near = d;
            }
        }
        worst = worst.max(near);
    }
    worst
}

fn check_indices(n: usize, points: &[usize]) -> Result<()> {
    match points.iter().find(|&&p| p >= n) {
        Some(&index) => Err(Error::IndexOutOfRange { index, len: n }),
        None => Ok(()),
    }
}

/// Cost of serving every point of the instance from `centers` and `extra_fixed`.
pub fn clustering_cost(
    instance: &Instance,
    centers: &[usize],
    extra_fixed: &[usize],
) -> Result<f64> {
    let n = instance.n();
    check_indices(n, centers)?;
    check_indices(n, extra_fixed)?;
    if centers.is_empty() && extra_fixed.is_empty() {
        return Err(Error::EmptyCenterSet);
    }
    let all: Vec<usize> = centers.iter().chain(extra_fixed).copied().collect();
    let points: Vec<usize> = (0..n).collect();
    Ok(cost_over(instance.metric(), &points, &all))
}

/// Cost of `centers` together with the instance's fixed centers.
pub fn solution_cost(instance: &Instance, centers: &[usize]) -> Result<f64> {
    clustering_cost(instance, centers, instance.c0())
}

/// Clusters every point of the instance around `centers` followed by the fixed centers.
pub fn assign_clusters(instance: &Instance, centers: &[usize]) -> Result<Clustering> {
    let n = instance.n();
    check_indices(n, centers)?;
    let all: Vec<usize> = centers.iter().chain(instance.c0()).copied().collect();
    if all.is_empty() {
        return Err(Error::EmptyCenterSet);
    }
    let points: Vec<usize> = (0..n).collect();
    Ok(assign(instance.metric(), &points, &all))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::DistanceMatrix;

    fn line(xs: &[f64]) -> Metric {
        DistanceMatrix::from_fn(xs.len(), |i, j| (xs[i] - xs[j]).abs())
            .unwrap()
            .into()
    }

    #[test]
    fn ties_go_to_the_earliest_center() {
        let m = line(&[0.0, 1.0, 2.0]);
        let c = assign(&m, &[0, 1, 2], &[2, 0]);
        assert_eq!(c.clusters, vec![vec![1, 2], vec![0]]);
    }

    #[test]
    fn coincident_center_keeps_itself() {
        let m = line(&[0.0, 0.0, 5.0]);
        let c = assign(&m, &[0, 1, 2], &[0, 1]);
        assert_eq!(c.clusters, vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn cost_includes_fixed_centers() {
        let m = line(&[0.0, 1.0, 10.0]);
        let inst = Instance::new(m, vec![0, 0, 0], vec![1], vec![2]).unwrap();
        assert_eq!(clustering_cost(&inst, &[0], &[]).unwrap(), 10.0);
        assert_eq!(solution_cost(&inst, &[0]).unwrap(), 1.0);
        assert!(matches!(
            clustering_cost(&inst, &[], &[]),
            Err(Error::EmptyCenterSet)
        ));
        assert!(clustering_cost(&inst, &[7], &[]).is_err());
    }

    #[test]
    fn fixed_centers_join_the_clustering() {
        let m = line(&[0.0, 1.0, 10.0, 11.0]);
        let inst = Instance::new(m, vec![0; 4], vec![1], vec![3]).unwrap();
        let c = assign_clusters(&inst, &[0]).unwrap();
        assert_eq!(c.centers, vec![0, 3]);
        assert_eq!(c.clusters, vec![vec![0, 1], vec![2, 3]]);
    }
}
