use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::metric::{Norm, PointSet};

/// Radius of every planted cluster, and the cost of the planted solution.
pub const PLANTED_RADIUS: f64 = 0.5;

/// Planted instance together with its known solution.
#[derive(Debug, Clone)]
pub struct GridInstance {
    pub instance: Instance,
    /// Indices of the grid points, one per cluster.
    pub planted_centers: Vec<usize>,
    /// Cost of `planted_centers`, always [`PLANTED_RADIUS`].
    pub planted_cost: f64,
}

fn l2(a: (f64, f64), b: (f64, f64)) -> f64 {
    ((a.0 - b.0) * (a.0 - b.0) + (a.1 - b.1) * (a.1 - b.1)).sqrt()
}

/// Places a point at exactly [`PLANTED_RADIUS`] from `c`, near angle `theta`.
fn boundary_point(c: (f64, f64), theta: f64) -> (f64, f64) {
    let p = (
        c.0 + PLANTED_RADIUS * theta.cos(),
        c.1 + PLANTED_RADIUS * theta.sin(),
    );
    if l2(p, c) == PLANTED_RADIUS {
        return p;
    }
    // Rounding missed; fall back to the nearest axis direction, which is exact.
    let quarter = ((theta / (TAU / 4.0)).round() as i64).rem_euclid(4);
    match quarter {
        0 => (c.0 + PLANTED_RADIUS, c.1),
        1 => (c.0, c.1 + PLANTED_RADIUS),
        2 => (c.0 - PLANTED_RADIUS, c.1),
        _ => (c.0, c.1 - PLANTED_RADIUS),
    }
}

/// Clusters around the points of a `grid_side x grid_side` integer grid.
///
/// Each grid point is itself a data point. Around it, `points_total /
/// grid_side^2` further points are drawn uniformly from the disk of radius
/// 0.5, and the one farthest from the grid point is pushed out to distance
/// exactly 0.5. Labels are uniform over `m_groups`; each quota equals the
/// number of grid points carrying that label, so the grid points form a fair
/// solution of cost 0.5. No fixed centers.
pub fn grid_clusters(
    grid_side: usize,
    points_total: usize,
    m_groups: usize,
    seed: u64,
) -> Result<GridInstance> {
    let cells = grid_side * grid_side;
    if cells == 0 || m_groups == 0 {
        return Err(Error::BadParameters(
            "grid_side and m_groups must be positive".into(),
        ));
    }
    if points_total < cells || points_total % cells != 0 {
        return Err(Error::BadParameters(format!(
            "points_total {points_total} must be a positive multiple of grid_side^2 = {cells}"
        )));
    }
    let per_cluster = points_total / cells;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(cells + points_total);
    let mut planted_centers = Vec::with_capacity(cells);
    for gx in 0..grid_side {
        for gy in 0..grid_side {
            let c = (gx as f64, gy as f64);
            planted_centers.push(rows.len());
            rows.push(vec![c.0, c.1]);
            let polar: Vec<(f64, f64)> = (0..per_cluster)
                .map(|_| {
                    (
                        PLANTED_RADIUS * rng.gen::<f64>().sqrt(),
                        rng.gen::<f64>() * TAU,
                    )
                })
                .collect();
            let far = (0..per_cluster)
                .max_by(|&a, &b| polar[a].0.total_cmp(&polar[b].0))
                .expect("at least one point per cluster");
            for (i, &(r, theta)) in polar.iter().enumerate() {
                let p = if i == far {
                    boundary_point(c, theta)
                } else {
                    let mut p = (c.0 + r * theta.cos(), c.1 + r * theta.sin());
                    if l2(p, c) > PLANTED_RADIUS {
                        p = (c.0 + 0.5 * r * theta.cos(), c.1 + 0.5 * r * theta.sin());
                    }
                    p
                };
                rows.push(vec![p.0, p.1]);
            }
        }
    }
    let groups: Vec<usize> = (0..rows.len())
        .map(|_| rng.gen_range(0..m_groups))
        .collect();
    let mut quotas = vec![0; m_groups];
    for &c in &planted_centers {
        quotas[groups[c]] += 1;
    }
    let metric = PointSet::new(&rows, Norm::L2)?;
    let instance = Instance::new(metric, groups, quotas, Vec::new())?;
    Ok(GridInstance {
        instance,
        planted_centers,
        planted_cost: PLANTED_RADIUS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clustering::solution_cost;

    #[test]
    fn planted_solution_costs_exactly_half() {
        for seed in 0..20 {
            let g = grid_clusters(3, 27, 2, seed).unwrap();
            assert_eq!(g.instance.n(), 36);
            assert_eq!(solution_cost(&g.instance, &g.planted_centers).unwrap(), 0.5);
            assert_eq!(g.instance.k(), 9);
            assert_eq!(
                g.instance.group_counts(&g.planted_centers),
                g.instance.quotas()
            );
        }
    }

    #[test]
    fn each_cluster_reaches_radius_half() {
        let g = grid_clusters(2, 40, 3, 4).unwrap();
        let per = 11;
        for (t, &c) in g.planted_centers.iter().enumerate() {
            let far = (t * per..(t + 1) * per)
                .map(|p| g.instance.dist(c, p))
                .fold(0.0, f64::max);
            assert_eq!(far, 0.5);
        }
    }

    #[test]
    fn bad_totals_are_rejected() {
        assert!(grid_clusters(2, 6, 2, 0).is_err());
        assert!(grid_clusters(2, 0, 2, 0).is_err());
        assert!(grid_clusters(0, 4, 2, 0).is_err());
    }
}
