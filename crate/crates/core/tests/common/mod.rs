//! Random small instances shared by the property and acceptance suites.

#![allow(dead_code)]

use fairkc::generators::erdos_renyi;
use fairkc::{
    shortest_path_matrix, DistanceMatrix, Instance, Metric, Norm, PointSet, WeightedGraph,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Shape of the random metric behind an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// Shortest-path closure of a complete graph with random weights.
    Matrix,
    /// Sparse random graph, connected by a random spanning tree.
    Graph,
    /// Random points in the plane under l1 or l2.
    Points,
}

pub const SHAPES: [Shape; 3] = [Shape::Matrix, Shape::Graph, Shape::Points];

pub fn random_metric(rng: &mut ChaCha8Rng, n: usize, shape: Shape) -> Metric {
    match shape {
        Shape::Matrix => {
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    edges.push((i, j, rng.gen_range(1..=20) as f64));
                }
            }
            let g = WeightedGraph::new(n, edges).unwrap();
            shortest_path_matrix(&g).unwrap().into()
        }
        Shape::Graph => {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            let mut edges = Vec::new();
            for i in 1..n {
                let parent = order[rng.gen_range(0..i)];
                edges.push((parent, order[i], rng.gen_range(1..=10) as f64));
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.gen_bool(0.2) {
                        edges.push((i, j, rng.gen_range(1..=10) as f64));
                    }
                }
            }
            let g = WeightedGraph::new(n, edges).unwrap();
            fairkc::GraphMetric::new(g).unwrap().into()
        }
        Shape::Points => {
            let norm = if rng.gen_bool(0.5) {
                Norm::L1
            } else {
                Norm::L2
            };
            // Coordinates on a coarse lattice make ties common.
            let rows: Vec<Vec<f64>> = (0..n)
                .map(|_| vec![rng.gen_range(0..8) as f64, rng.gen_range(0..8) as f64])
                .collect();
            PointSet::new(&rows, norm).unwrap().into()
        }
    }
}

/// Random instance with `m` groups, random fixed centers and random feasible
/// quotas summing to at least one.
pub fn random_instance(rng: &mut ChaCha8Rng, n: usize, m: usize, shape: Shape) -> Instance {
    let metric = random_metric(rng, n, shape);
    loop {
        let groups: Vec<usize> = (0..n).map(|_| rng.gen_range(0..m)).collect();
        let c0_size = rng.gen_range(0..=n / 3);
        let mut ids: Vec<usize> = (0..n).collect();
        ids.shuffle(rng);
        let c0: Vec<usize> = ids[..c0_size].to_vec();
        let mut free = vec![0usize; m];
        for (p, &g) in groups.iter().enumerate() {
            if !c0.contains(&p) {
                free[g] += 1;
            }
        }
        let quotas: Vec<usize> = free.iter().map(|&f| rng.gen_range(0..=f.min(3))).collect();
        if quotas.iter().sum::<usize>() == 0 {
            continue;
        }
        return Instance::new(metric.clone(), groups, quotas, c0).unwrap();
    }
}

/// Same, from a bare seed.
pub fn seeded_instance(seed: u64, n: usize, m: usize, shape: Shape) -> Instance {
    random_instance(&mut ChaCha8Rng::seed_from_u64(seed), n, m, shape)
}

/// Small random-graph instance from the crate's own generator.
pub fn er_instance(seed: u64, n: usize, quotas: &[usize], c0: usize) -> Instance {
    erdos_renyi(n, quotas, c0, seed).unwrap()
}

/// Full matrix copy, handy for brute checks.
pub fn matrix(instance: &Instance) -> DistanceMatrix {
    instance.metric().to_matrix()
}
