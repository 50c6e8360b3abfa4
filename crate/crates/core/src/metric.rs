//! Finite metric spaces.
//!
//! Every distance is an `f64` and comparisons are exact. Three storage
//! shapes are supported: an explicit matrix, coordinates under an `l1` or
//! `l2` norm, and a weighted graph with shortest-path distances.

use crate::error::{Error, Result};
use crate::graph::GraphMetric;

/// Dense symmetric distance matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    values: Vec<f64>,
}

impl DistanceMatrix {
    /// Builds a matrix from `n * n` row-major values.
    ///
    /// Rejects non-square input, negative or non-finite entries, a non-zero
    /// diagonal and asymmetry. The triangle inequality is not checked here;
    /// see [`DistanceMatrix::check_triangle_inequality`].
    pub fn new(n: usize, values: Vec<f64>) -> Result<Self> {
        if values.len() != n * n {
            return Err(Error::InvalidMetric(format!(
                "expected {} entries for {n} points, got {}",
                n * n,
                values.len()
            )));
        }
        for i in 0..n {
            if values[i * n + i] != 0.0 {
                return Err(Error::InvalidMetric(format!("d({i},{i}) is not zero")));
            }
            for j in 0..n {
                let v = values[i * n + j];
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::InvalidMetric(format!("d({i},{j}) = {v}")));
                }
                if v != values[j * n + i] {
                    return Err(Error::InvalidMetric(format!("d({i},{j}) != d({j},{i})")));
                }
            }
        }
        Ok(Self { n, values })
    }

    /// Builds a matrix from a distance function evaluated on `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let v = f(i, j);
                values[i * n + j] = v;
                values[j * n + i] = v;
            }
        }
        Self::new(n, values)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Returns the first violated triple `(i, j, l)` with `d(i,l) > d(i,j) + d(j,l)`.
    pub fn check_triangle_inequality(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    if self.get(i, l) > self.get(i, j) + self.get(j, l) {
                        return Some((i, j, l));
                    }
                }
            }
        }
        None
    }
}

/// Norm used by [`PointSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Norm {
    L1,
    L2,
}

/// Points in `R^dim` with a fixed norm.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    dim: usize,
    norm: Norm,
    coords: Vec<f64>,
}

impl PointSet {
    pub fn new(rows: &[Vec<f64>], norm: Norm) -> Result<Self> {
        let dim = rows.first().map_or(0, Vec::len);
        let mut coords = Vec::with_capacity(rows.len() * dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::InvalidMetric(format!(
                    "point {i} has {} coordinates, expected {dim}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|v| !v.is_finite()) {
                return Err(Error::InvalidMetric(format!(
                    "point {i} has coordinate {bad}"
                )));
            }
            coords.extend_from_slice(row);
        }
        Ok(Self { dim, norm, coords })
    }

    /// Builds a point set from a flat row-major coordinate buffer.
    pub fn from_flat(dim: usize, coords: Vec<f64>, norm: Norm) -> Result<Self> {
        if dim == 0 || coords.len() % dim != 0 {
            return Err(Error::InvalidMetric(format!(
                "{} coordinates do not split into rows of {dim}",
                coords.len()
            )));
        }
        if coords.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidMetric("non-finite coordinate".into()));
        }
        Ok(Self { dim, norm, coords })
    }

    pub fn len(&self) -> usize {
        self.coords.len().checked_div(self.dim).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn norm(&self) -> Norm {
        self.norm
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return 0.0;
        }
        let (a, b) = (self.point(i), self.point(j));
        match self.norm {
            Norm::L1 => a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum(),
            Norm::L2 => a
                .iter()
                .zip(b)
                .map(|(x, y)| (x - y) * (x - y))
                .sum::<f64>()
                .sqrt(),
        }
    }
}

/// A finite metric space over points `0..len()`.
#[derive(Debug, Clone)]
pub enum Metric {
    Matrix(DistanceMatrix),
    Points(PointSet),
    Graph(GraphMetric),
}

impl Metric {
    pub fn len(&self) -> usize {
        match self {
            Metric::Matrix(m) => m.len(),
            Metric::Points(p) => p.len(),
            Metric::Graph(g) => g.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Distance between points `i` and `j`. Panics if either is out of range.
    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> f64 {
        match self {
            Metric::Matrix(m) => m.get(i, j),
            Metric::Points(p) => p.dist(i, j),
            Metric::Graph(g) => g.dist(i, j),
        }
    }

    /// Checked variant of [`Metric::dist`].
    pub fn try_dist(&self, i: usize, j: usize) -> Result<f64> {
        let len = self.len();
        for index in [i, j] {
            if index >= len {
                return Err(Error::IndexOutOfRange { index, len });
            }
        }
        Ok(self.dist(i, j))
    }

    /// Materialises all pairwise distances.
    pub fn to_matrix(&self) -> DistanceMatrix {
        match self {
            Metric::Matrix(m) => m.clone(),
            _ => {
                let n = self.len();
                let mut values = vec![0.0; n * n];
                for i in 0..n {
                    for j in (i + 1)..n {
                        let v = self.dist(i, j);
                        values[i * n + j] = v;
                        values[j * n + i] = v;
                    }
                }
                DistanceMatrix { n, values }
            }
        }
    }
}

impl From<DistanceMatrix> for Metric {
    fn from(m: DistanceMatrix) -> Self {
        Metric::Matrix(m)
    }
}

impl From<PointSet> for Metric {
    fn from(p: PointSet) -> Self {
        Metric::Points(p)
    }
}

impl From<GraphMetric> for Metric {
    fn from(g: GraphMetric) -> Self {
        Metric::Graph(g)
    }
}

macro_rules! into_shared {
    ($($t:ty),*) => {$(
        impl From<$t> for std::sync::Arc<Metric> {
            fn from(m: $t) -> Self {
                std::sync::Arc::new(Metric::from(m))
            }
        }
    )*};
}

into_shared!(DistanceMatrix, PointSet, GraphMetric);
