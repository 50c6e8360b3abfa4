//! Weighted undirected graphs and their shortest-path metric.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::metric::DistanceMatrix;

/// Undirected graph with non-negative edge weights, stored as CSR adjacency.
#[derive(Debug, Clone)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    weights: Vec<f64>,
}

impl WeightedGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self> {
        for &(u, v, w) in &edges {
            for index in [u, v] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, len: n });
                }
            }
            if !w.is_finite() || w < 0.0 {
                return Err(Error::InvalidMetric(format!(
                    "edge ({u},{v}) has weight {w}"
                )));
            }
        }
        let mut degree = vec![0usize; n + 1];
        for &(u, v, _) in &edges {
            if u != v {
                degree[u] += 1;
                degree[v] += 1;
            }
        }
        let mut offsets = vec![0usize; n + 1];
        for i in 0..n {
            offsets[i + 1] = offsets[i] + degree[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0usize; offsets[n]];
        let mut weights = vec![0.0; offsets[n]];
        for &(u, v, w) in &edges {
            if u == v {
                continue;
            }
            targets[fill[u]] = v;
            weights[fill[u]] = w;
            fill[u] += 1;
            targets[fill[v]] = u;
            weights[fill[v]] = w;
            fill[v] += 1;
        }
        Ok(Self {
            n,
            edges,
            offsets,
            targets,
            weights,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let range = self.offsets[u]..self.offsets[u + 1];
        self.targets[range.clone()]
            .iter()
            .copied()
            .zip(self.weights[range].iter().copied())
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for (v, _) in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    fn has_integral_weights(&self) -> bool {
        // Integer path sums stay exact below 2^53, so rows agree in both directions.
        let total: f64 = self.edges.iter().map(|e| e.2).sum();
        total < 9.0e15 && self.edges.iter().all(|e| e.2.fract() == 0.0)
    }

    /// Single-source shortest-path distances from `source`.
    pub fn dijkstra(&self, source: usize) -> Vec<f64> {
        let mut dist = vec![f64::INFINITY; self.n];
        let mut heap = BinaryHeap::new();
        dist[source] = 0.0;
        heap.push(Entry {
            d: 0.0,
            node: source,
        });
        while let Some(Entry { d, node }) = heap.pop() {
            if d > dist[node] {
                continue;
            }
            for (v, w) in self.neighbors(node) {
                let nd = d + w;
                if nd < dist[v] {
                    dist[v] = nd;
                    heap.push(Entry { d: nd, node: v });
                }
            }
        }
        dist
    }
}

#[derive(Debug, PartialEq)]
struct Entry {
    d: f64,
    node: usize,
}

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .d
            .total_cmp(&self.d)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All-pairs shortest paths as a dense matrix.
///
/// Runs Dijkstra from every source. The two directed estimates of each pair
/// are merged with `min` so the result is exactly symmetric even when float
/// sums depend on the traversal direction.
pub fn shortest_path_matrix(graph: &WeightedGraph) -> Result<DistanceMatrix> {
    if !graph.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let n = graph.len();
    let mut values = Vec::with_capacity(n * n);
    for s in 0..n {
        values.extend(graph.dijkstra(s));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let v = values[i * n + j].min(values[j * n + i]);
            values[i * n + j] = v;
            values[j * n + i] = v;
        }
    }
    DistanceMatrix::new(n, values)
}

#[derive(Debug)]
enum Storage {
    Dense(DistanceMatrix),
    Lazy(Vec<OnceLock<Box<[f64]>>>),
}

/// Shortest-path metric of a connected graph.
///
/// Graphs with integer weights compute Dijkstra rows on first use, which keeps
/// memory proportional to the rows actually touched. Other graphs are
/// expanded into a dense matrix up front.
#[derive(Debug)]
pub struct GraphMetric {
    graph: WeightedGraph,
    storage: Storage,
}

impl GraphMetric {
    pub fn new(graph: WeightedGraph) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        let storage = if graph.has_integral_weights() {
            Storage::Lazy((0..graph.len()).map(|_| OnceLock::new()).collect())
        } else {
            Storage::Dense(shortest_path_matrix(&graph)?)
        };
        Ok(Self { graph, storage })
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    /// Number of Dijkstra rows materialised so far.
    pub fn cached_rows(&self) -> usize {
        match &self.storage {
            Storage::Dense(m) => m.len(),
            Storage::Lazy(rows) => rows.iter().filter(|r| r.get().is_some()).count(),
        }
    }

    /// On a cache miss the row of `i` is computed, so loops should put the
    /// few sources (centers) first.
    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> f64 {
        match &self.storage {
            Storage::Dense(m) => m.get(i, j),
            Storage::Lazy(rows) => {
                if let Some(row) = rows[j].get() {
                    return row[i];
                }
                rows[i].get_or_init(|| self.graph.dijkstra(i).into_boxed_slice())[j]
            }
        }
    }
}

impl Clone for GraphMetric {
    /// Clones the graph. Lazily computed rows are not carried over.
    fn clone(&self) -> Self {
        let storage = match &self.storage {
            Storage::Dense(m) => Storage::Dense(m.clone()),
            Storage::Lazy(rows) => Storage::Lazy(rows.iter().map(|_| OnceLock::new()).collect()),
        };
        Self {
            graph: self.graph.clone(),
            storage,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn floyd(n: usize, edges: &[(usize, usize, f64)]) -> Vec<f64> {
        let mut d = vec![f64::INFINITY; n * n];
        for i in 0..n {
            d[i * n + i] = 0.0;
        }
        for &(u, v, w) in edges {
            d[u * n + v] = d[u * n + v].min(w);
            d[v * n + u] = d[v * n + u].min(w);
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let via = d[i * n + k] + d[k * n + j];
                    if via < d[i * n + j] {
                        d[i * n + j] = via;
                    }
                }
            }
        }
        d
    }

    #[test]
    fn path_graph_distances() {
        let g = WeightedGraph::new(3, vec![(0, 1, 2.0), (1, 2, 3.0)]).unwrap();
        let m = shortest_path_matrix(&g).unwrap();
        assert_eq!(m.get(0, 2), 5.0);
        assert_eq!(m.get(2, 0), 5.0);
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let g = WeightedGraph::new(3, vec![(0, 1, 1.0)]).unwrap();
        assert!(matches!(
            shortest_path_matrix(&g),
            Err(Error::DisconnectedGraph)
        ));
        assert!(matches!(GraphMetric::new(g), Err(Error::DisconnectedGraph)));
    }

    #[test]
    fn matches_floyd_warshall() {
        let edges = vec![
            (0, 1, 4.0),
            (0, 2, 1.0),
            (2, 1, 2.0),
            (1, 3, 5.0),
            (2, 3, 8.0),
            (3, 4, 3.0),
            (4, 0, 20.0),
            (1, 1, 7.0),
        ];
        let g = WeightedGraph::new(5, edges.clone()).unwrap();
        let m = shortest_path_matrix(&g).unwrap();
        assert_eq!(m.values(), floyd(5, &edges).as_slice());
        let lazy = GraphMetric::new(g).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(lazy.dist(i, j), m.get(i, j));
            }
        }
        assert!(lazy.cached_rows() <= 5);
    }

    #[test]
    fn fractional_weights_use_dense_storage() {
        let g = WeightedGraph::new(3, vec![(0, 1, 0.1), (1, 2, 0.2), (0, 2, 0.7)]).unwrap();
        let metric = GraphMetric::new(g).unwrap();
        assert_eq!(metric.cached_rows(), 3);
        assert_eq!(metric.dist(0, 2), metric.dist(2, 0));
    }

    #[test]
    fn negative_weight_is_rejected() {
        assert!(WeightedGraph::new(2, vec![(0, 1, -1.0)]).is_err());
    }
}
