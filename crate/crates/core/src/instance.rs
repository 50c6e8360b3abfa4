//! Problem instances, center sets and their JSON form.

use std::collections::HashSet;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphMetric, WeightedGraph};
use crate::metric::{DistanceMatrix, Metric, Norm, PointSet};

/// Checks the structural invariants of an instance.
///
/// `groups[i]` must name one of the `quotas.len()` groups, `c0` must hold
/// distinct in-range indices, and every group must own at least `quotas[i]`
/// points outside `c0`.
pub fn validate(n: usize, groups: &[usize], quotas: &[usize], c0: &[usize]) -> Result<()> {
    if groups.len() != n {
        return Err(Error::BadParameters(format!(
            "{} group labels for {n} points",
            groups.len()
        )));
    }
    let m = quotas.len();
    if m == 0 {
        return Err(Error::BadParameters(
            "at least one group is required".into(),
        ));
    }
    let mut size = vec![0usize; m];
    for (point, &group) in groups.iter().enumerate() {
        if group >= m {
            return Err(Error::BadGroupId {
                point,
                group,
                groups: m,
            });
        }
        size[group] += 1;
    }
    let mut seen = HashSet::with_capacity(c0.len());
    for &c in c0 {
        if c >= n {
            return Err(Error::IndexOutOfRange { index: c, len: n });
        }
        if !seen.insert(c) {
            return Err(Error::DuplicateC0(c));
        }
        size[groups[c]] -= 1;
    }
    for (group, (&quota, &available)) in quotas.iter().zip(&size).enumerate() {
        if quota > available {
            return Err(Error::InfeasibleQuota {
                group,
                quota,
                available,
            });
        }
    }
    Ok(())
}

/// A validated fair k-center instance.
///
/// The metric sits behind an [`Arc`] so variants with different quotas or
/// fixed centers can share one (possibly lazily filled) distance source.
#[derive(Debug, Clone)]
pub struct Instance {
    metric: Arc<Metric>,
    groups: Vec<usize>,
    quotas: Vec<usize>,
    c0: Vec<usize>,
    group_names: Option<Vec<String>>,
    metadata: Option<serde_json::Value>,
}

impl Instance {
    pub fn new(
        metric: impl Into<Arc<Metric>>,
        groups: Vec<usize>,
        quotas: Vec<usize>,
        c0: Vec<usize>,
    ) -> Result<Self> {
        let metric = metric.into();
        validate(metric.len(), &groups, &quotas, &c0)?;
        Ok(Self {
            metric,
            groups,
            quotas,
            c0,
            group_names: None,
            metadata: None,
        })
    }

    pub fn with_group_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.m() {
            return Err(Error::BadParameters(format!(
                "{} group names for {} groups",
                names.len(),
                self.m()
            )));
        }
        self.group_names = Some(names);
        Ok(self)
    }

    pub fn with_metadata(mut self, metadata: serde_json::Value) -> Self {
        self.metadata = Some(metadata);
        self
    }

    /// Same points and groups with different quotas.
    pub fn with_quotas(&self, quotas: Vec<usize>) -> Result<Self> {
        validate(self.n(), &self.groups, &quotas, &self.c0)?;
        let group_names = self.group_names.clone().filter(|g| g.len() == quotas.len());
        Ok(Self {
            quotas,
            group_names,
            ..self.clone()
        })
    }

    /// Same points and quotas with a different fixed center set.
    pub fn with_c0(&self, c0: Vec<usize>) -> Result<Self> {
        validate(self.n(), &self.groups, &self.quotas, &c0)?;
        Ok(Self { c0, ..self.clone() })
    }

    pub fn n(&self) -> usize {
        self.groups.len()
    }

    pub fn m(&self) -> usize {
        self.quotas.len()
    }

    /// Total number of centers to open.
    pub fn k(&self) -> usize {
        self.quotas.iter().sum()
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn shared_metric(&self) -> Arc<Metric> {
        Arc::clone(&self.metric)
    }

    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> f64 {
        self.metric.dist(i, j)
    }

    pub fn groups(&self) -> &[usize] {
        &self.groups
    }

    pub fn group_of(&self, point: usize) -> usize {
        self.groups[point]
    }

    pub fn quotas(&self) -> &[usize] {
        &self.quotas
    }

    pub fn c0(&self) -> &[usize] {
        &self.c0
    }

    pub fn group_names(&self) -> Option<&[String]> {
        self.group_names.as_deref()
    }

    pub fn metadata(&self) -> Option<&serde_json::Value> {
        self.metadata.as_ref()
    }

    /// Members of group `g` in ascending order.
    pub fn members(&self, g: usize) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.groups[i] == g).collect()
    }

    /// Number of points of each group in `centers`.
    pub fn group_counts(&self, centers: &[usize]) -> Vec<usize> {
        let mut counts = vec![0; self.m()];
        for &c in centers {
            counts[self.groups[c]] += 1;
        }
        counts
    }

    /// Parses an instance from its JSON form and validates it.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: InstanceFile = serde_json::from_str(text)?;
        file.into_instance()
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&InstanceFile::from_instance(
            self,
        ))?)
    }

    pub fn read_json(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        if !path.exists() {
            return Err(Error::FileNotFound(path.to_path_buf()));
        }
        Self::from_json_str(&fs::read_to_string(path)?)
    }

    pub fn write_json(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_json_string()?)?;
        Ok(())
    }
}

/// A set of distinct point indices. Order carries no meaning.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CenterSet(Vec<usize>);

impl CenterSet {
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        let mut seen = HashSet::with_capacity(indices.len());
        for &c in &indices {
            if c >= n {
                return Err(Error::IndexOutOfRange { index: c, len: n });
            }
            if !seen.insert(c) {
                return Err(Error::DuplicateCenter(c));
            }
        }
        Ok(Self(indices))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, point: usize) -> bool {
        self.0.contains(&point)
    }

    pub fn sorted(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum MetricFile {
    /// Row-major `n * n` values.
    Matrix {
        values: Vec<f64>,
    },
    Points {
        norm: NormFile,
        coords: Vec<Vec<f64>>,
    },
    Graph {
        edges: Vec<(usize, usize, f64)>,
    },
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum NormFile {
    L1,
    L2,
}

#[derive(Debug, Serialize, Deserialize)]
struct InstanceFile {
    n: usize,
    metric: MetricFile,
    groups: Vec<usize>,
    quotas: Vec<usize>,
    #[serde(default)]
    c0: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    group_names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metadata: Option<serde_json::Value>,
}

impl InstanceFile {
    fn into_instance(self) -> Result<Instance> {
        let n = self.n;
        let metric = match self.metric {
            MetricFile::Matrix { values } => Metric::Matrix(DistanceMatrix::new(n, values)?),
            MetricFile::Points { norm, coords } => {
                let norm = match norm {
                    NormFile::L1 => Norm::L1,
                    NormFile::L2 => Norm::L2,
                };
                let set = PointSet::new(&coords, norm)?;
                if set.len() != n {
                    return Err(Error::InvalidMetric(format!(
                        "{} points listed, n is {n}",
                        set.len()
                    )));
                }
                Metric::Points(set)
            }
            MetricFile::Graph { edges } => {
                Metric::Graph(GraphMetric::new(WeightedGraph::new(n, edges)?)?)
            }
        };
        let mut instance = Instance::new(metric, self.groups, self.quotas, self.c0)?;
        if let Some(names) = self.group_names {
            instance = instance.with_group_names(names)?;
        }
        instance.metadata = self.metadata;
        Ok(instance)
    }

    fn from_instance(instance: &Instance) -> Self {
        let metric = match instance.metric() {
            Metric::Matrix(m) => MetricFile::Matrix {
                values: m.values().to_vec(),
            },
            Metric::Points(p) => MetricFile::Points {
                norm: match p.norm() {
                    Norm::L1 => NormFile::L1,
                    Norm::L2 => NormFile::L2,
                },
                coords: (0..p.len()).map(|i| p.point(i).to_vec()).collect(),
            },
            Metric::Graph(g) => MetricFile::Graph {
                edges: g.graph().edges().to_vec(),
            },
        };
        Self {
            n: instance.n(),
            metric,
            groups: instance.groups.clone(),
            quotas: instance.quotas.clone(),
            c0: instance.c0.clone(),
            group_names: instance.group_names.clone(),
            metadata: instance.metadata.clone(),
        }
    }
}
