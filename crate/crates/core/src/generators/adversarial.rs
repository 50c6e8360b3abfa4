//! Graph instances on which the fair solvers, run deterministically, land
//! close to their worst-case factors.
//!
//! Point indices are laid out so that lowest-index tie breaking reproduces
//! the intended run. Edge weights keep every greedy choice strict for any
//! `delta` in `(0, 0.1)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{GraphMetric, WeightedGraph};
use crate::instance::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AdversarialKind {
    /// Two groups, bad run of cost `5 - delta/2` against an optimum of `1 + delta`.
    TwoGroups,
    /// Three groups, bad run of cost 8 against an optimum of `1 + 1.5 delta`.
    ThreeGroups,
}

/// The run the fixture is built to force, in point indices.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpectedRun {
    /// Greedy picks of the top-level call, in order.
    pub greedy_order: Vec<usize>,
    /// Center replacements `(removed, added)` over the whole run, in order.
    pub swaps: Vec<(usize, usize)>,
    /// Final centers, sorted.
    pub centers: Vec<usize>,
    pub cost: f64,
}

#[derive(Debug, Clone)]
pub struct AdversarialFixture {
    pub kind: AdversarialKind,
    pub delta: f64,
    pub instance: Instance,
    /// Human-readable name of each point.
    pub labels: Vec<&'static str>,
    pub expected: ExpectedRun,
    pub opt_value: f64,
    pub opt_witness: Vec<usize>,
}

impl AdversarialFixture {
    pub fn index(&self, label: &str) -> usize {
        self.labels
            .iter()
            .position(|l| *l == label)
            .unwrap_or_else(|| panic!("no point named {label}"))
    }

    /// Ratio between the forced cost and the optimum.
    pub fn forced_ratio(&self) -> f64 {
        self.expected.cost / self.opt_value
    }
}

struct Layout {
    labels: Vec<&'static str>,
    groups: Vec<usize>,
    quotas: Vec<usize>,
    group_names: Vec<String>,
    edges: Vec<(&'static str, &'static str, f64)>,
    greedy: Vec<&'static str>,
    swaps: Vec<(&'static str, &'static str)>,
    centers: Vec<&'static str>,
    cost: f64,
    opt_value: f64,
    opt_witness: Vec<&'static str>,
}

fn two_groups(d: f64) -> Layout {
    let labels = vec![
        "f5", "f2", "f3", "f1", "f4", "m4", "m2", "m5", "m1", "m3", "m6",
    ];
    let groups = labels
        .iter()
        .map(|l| usize::from(l.starts_with('m')))
        .collect();
    let far = 10.0;
    let mut edges = vec![
        ("f2", "f4", 2.0),
        ("f4", "m6", 1.0 + d),
        ("m6", "f3", 2.0),
        ("f2", "m1", 1.0 + d),
        ("m1", "f1", 1.0),
        ("f1", "m2", 1.0 - 1.5 * d),
        ("m2", "m3", 1.0),
        ("m3", "f3", 1.0),
        ("m3", "m4", 1.0 - d / 2.0),
        ("m3", "m5", 1.0 - d / 2.0),
        ("f5", "f2", far + 1.0),
    ];
    // f5 hangs far from everything, slightly farther from f2.
    for &l in labels.iter().filter(|l| !matches!(**l, "f5" | "f2")) {
        edges.push(("f5", l, far));
    }
    Layout {
        labels,
        groups,
        quotas: vec![1, 3],
        group_names: vec!["f".into(), "m".into()],
        edges,
        greedy: vec!["f5", "f2", "f3", "f1"],
        swaps: vec![("f3", "m4"), ("f1", "m2")],
        centers: vec!["f5", "m4", "m2", "m5"],
        cost: 5.0 - d / 2.0,
        opt_value: 1.0 + d,
        opt_witness: vec!["f5", "m1", "m3", "m6"],
    }
}

fn three_groups(d: f64) -> Layout {
    let labels = vec![
        "f1", "f4", "f3", "f2", "z2", "z1", "m2", "m4", "m5", "m6", "m1", "m3",
    ];
    let groups = labels
        .iter()
        .map(|l| match l.as_bytes()[0] {
            b'm' => 0,
            b'f' => 1,
            _ => 2,
        })
        .collect();
    let (a, b, c, e) = (1.5 * d, d, d / 4.0, 3.0 * d);
    let edges = vec![
        ("f3", "z1", 4.0),
        ("f3", "f2", 4.0 + c),
        ("f3", "z2", 4.0),
        ("f2", "m1", 1.0 + a),
        ("m1", "f1", 1.0),
        ("f1", "m2", 2.0),
        ("m1", "m5", 1.0),
        ("z2", "m3", 1.0 + b),
        ("m3", "f4", 1.0),
        ("f4", "m4", 2.0),
        ("m3", "m6", 1.0),
        ("z1", "f1", 6.0 + 2.0 * d),
        ("z1", "f4", 6.0 + 2.0 * d),
        ("z1", "m2", 8.0),
        ("z1", "m4", 8.0),
        ("m2", "m4", 2.0 + e),
        ("m2", "m6", 2.0 + e),
        ("m4", "m5", 2.0 + e),
        ("z2", "m5", 2.0 + 2.0 * d),
        ("f2", "m6", 2.0 + a),
    ];
    Layout {
        labels,
        groups,
        quotas: vec![4, 1, 1],
        group_names: vec!["m".into(), "f".into(), "z".into()],
        edges,
        greedy: vec!["f1", "f4", "z1", "f3", "f2", "z2"],
        swaps: vec![("f1", "m2"), ("f4", "m4"), ("f3", "z2")],
        centers: vec!["f2", "z2", "m2", "m4", "m5", "m6"],
        cost: 8.0,
        opt_value: 1.0 + a,
        opt_witness: vec!["m2", "m4", "m1", "m3", "f3", "z1"],
    }
}

/// Builds the requested family member for `delta` in `(0, 0.1)`.
pub fn adversarial(kind: AdversarialKind, delta: f64) -> Result<AdversarialFixture> {
    if !(delta > 0.0 && delta < 0.1) {
        return Err(Error::BadDelta(delta));
    }
    let layout = match kind {
        AdversarialKind::TwoGroups => two_groups(delta),
        AdversarialKind::ThreeGroups => three_groups(delta),
    };
    let at = |l: &str| {
        layout
            .labels
            .iter()
            .position(|x| *x == l)
            .expect("known label")
    };
    let ids = |ls: &[&str]| ls.iter().map(|l| at(l)).collect::<Vec<_>>();
    let edges = layout
        .edges
        .iter()
        .map(|&(u, v, w)| (at(u), at(v), w))
        .collect();
    let metric = GraphMetric::new(WeightedGraph::new(layout.labels.len(), edges)?)?;

    let mut centers = ids(&layout.centers);
    centers.sort_unstable();
    let expected = ExpectedRun {
        greedy_order: ids(&layout.greedy),
        swaps: layout.swaps.iter().map(|&(x, y)| (at(x), at(y))).collect(),
        centers,
        cost: layout.cost,
    };
    let metadata = serde_json::json!({
        "family": kind,
        "delta": delta,
        "labels": layout.labels,
        "expected_run": expected,
        "opt_value": layout.opt_value,
    });
    let instance = Instance::new(metric, layout.groups, layout.quotas, Vec::new())?
        .with_group_names(layout.group_names)?
        .with_metadata(metadata);
    Ok(AdversarialFixture {
        kind,
        delta,
        instance,
        expected,
        opt_value: layout.opt_value,
        opt_witness: ids(&layout.opt_witness),
        labels: layout.labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_range_is_enforced() {
        for bad in [0.0, 0.1, -0.5, f64::NAN] {
            assert!(matches!(
                adversarial(AdversarialKind::TwoGroups, bad),
                Err(Error::BadDelta(_))
            ));
        }
    }

    #[test]
    fn labels_map_to_indices() {
        let f = adversarial(AdversarialKind::ThreeGroups, 0.01).unwrap();
        assert_eq!(f.index("z1"), 5);
        assert_eq!(f.instance.n(), 12);
        assert_eq!(f.instance.quotas(), &[4, 1, 1]);
    }
}
