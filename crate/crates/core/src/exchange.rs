//! Center exchange along paths of the swap graph.
//!
//! The swap graph has one vertex per group and an edge `i -> j` whenever some
//! cluster whose center lies in group `i` contains a point of group `j`.
//! Replacing that center by the group-`j` point moves one unit of quota from
//! `i` to `j`. Chaining such replacements along a path moves one unit from the
//! path's start to its end while leaving interior groups unchanged.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

/// Directed graph on group ids. Self-loops are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapGraph {
    m: usize,
    adj: Vec<Vec<bool>>,
}

impl SwapGraph {
    /// Builds the swap graph of a clustering.
    ///
    /// `group_of` is indexed by global point id.
    pub fn build(m: usize, centers: &[usize], clusters: &[Vec<usize>], group_of: &[usize]) -> Self {
        let mut adj = vec![vec![false; m]; m];
        for (&c, members) in centers.iter().zip(clusters) {
            let from = group_of[c];
            for &p in members {
                let to = group_of[p];
                if to != from {
                    adj[from][to] = true;
                }
            }
        }
        Self { m, adj }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.adj[from][to]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.m {
            for j in 0..self.m {
                if self.adj[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Fewest-hop path from `from` to `to`, inclusive of both ends.
    ///
    /// Breadth-first search visiting neighbors in ascending id, so among equal
    /// length paths the lexicographically smallest is returned.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.m];
        let mut seen = vec![false; self.m];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut v = to;
                while v != from {
                    v = parent[v];
                    path.push(v);
                }
                path.reverse();
                return Some(path);
            }
            for v in 0..self.m {
                if self.has_edge(u, v) && !seen[v] {
                    seen[v] = true;
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        None
    }

    /// Marks every group reachable from `sources`, sources included.
    pub fn reachable_from(&self, sources: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.m];
        let mut stack: Vec<usize> = sources.to_vec();
        for &s in sources {
            seen[s] = true;
        }
        while let Some(u) = stack.pop() {
            for (v, mark) in seen.iter_mut().enumerate() {
                if self.adj[u][v] && !*mark {
                    *mark = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

/// Outcome of [`exchange_and_partition`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartitionResult {
    /// Centers after the exchange, position-aligned with the input clusters.
    pub centers: Vec<usize>,
    /// Groups still out of balance plus everything they reach. Empty when
    /// every quota is met.
    pub g_set: Vec<usize>,
    /// Individual center replacements.
    pub swaps: usize,
    /// Completed path exchanges.
    pub chains: usize,
    /// Every replacement as `(old center, new center)`.
    pub replaced: Vec<(usize, usize)>,
}

/// Moves surplus quota towards deficit groups until no path joins them.
///
/// `clusters[t]` must contain `centers[t]` and `quotas` must sum to the number
/// of centers. Surplus and deficit groups are tried in order of decreasing
/// imbalance, ties by group id. Each hop replaces the center of the
/// lowest-indexed eligible cluster by that cluster's lowest-indexed member of
/// the target group.
pub fn exchange_and_partition(
    centers: &[usize],
    clusters: &[Vec<usize>],
    quotas: &[usize],
    group_of: &[usize],
) -> Result<PartitionResult> {
    let m = quotas.len();
    let k = centers.len();
    let quota_sum: usize = quotas.iter().sum();
    if quota_sum != k {
        return Err(Error::QuotaSumMismatch {
            quota_sum,
            centers: k,
        });
    }
    if clusters.len() != k {
        return Err(Error::BadParameters(format!(
            "{} clusters for {k} centers",
            clusters.len()
        )));
    }
    let mut centers = centers.to_vec();
    let mut counts = vec![0usize; m];
    for &c in &centers {
        counts[group_of[c]] += 1;
    }
    let mut graph = SwapGraph::build(m, &centers, clusters, group_of);
    let mut result = PartitionResult {
        centers: Vec::new(),
        g_set: Vec::new(),
        swaps: 0,
        chains: 0,
        replaced: Vec::new(),
    };

    while counts != quotas {
        let mut surplus: Vec<usize> = (0..m).filter(|&g| counts[g] > quotas[g]).collect();
        surplus.sort_by_key(|&g| (std::cmp::Reverse(counts[g] - quotas[g]), g));
        let mut deficit: Vec<usize> = (0..m).filter(|&g| counts[g] < quotas[g]).collect();
        deficit.sort_by_key(|&g| (std::cmp::Reverse(quotas[g] - counts[g]), g));

        let path = surplus
            .iter()
            .flat_map(|&r| deficit.iter().map(move |&s| (r, s)))
            .find_map(|(r, s)| graph.shortest_path(r, s));
        let Some(path) = path else { break };

        for hop in path.windows(2) {
            let (from, to) = (hop[0], hop[1]);
            let (t, y) = (0..k)
                .filter(|&t| group_of[centers[t]] == from)
                .find_map(|t| {
                    clusters[t]
                        .iter()
                        .copied()
                        .filter(|&p| group_of[p] == to)
                        .min()
                        .map(|y| (t, y))
                })
                .expect("edge of the swap graph has a witness cluster");
            result.replaced.push((centers[t], y));
            centers[t] = y;
            result.swaps += 1;
        }
        counts[path[0]] -= 1;
        counts[path[path.len() - 1]] += 1;
        result.chains += 1;
        assert!(result.chains <= k, "exchange ran more than k chains");
        graph = SwapGraph::build(m, &centers, clusters, group_of);
    }

    if counts != quotas {
        let surplus: Vec<usize> = (0..m).filter(|&g| counts[g] > quotas[g]).collect();
        let reach = graph.reachable_from(&surplus);
        result.g_set = (0..m).filter(|&g| reach[g]).collect();
    }
    result.centers = centers;
    Ok(result)
}

/// Checks the two guarantees of a completed exchange.
///
/// Groups outside `g_set` hold exactly their quota (or fewer), groups inside
/// hold at least their quota in total, and no cluster centered in `g_set`
/// contains a point from a group outside it.
pub fn partition_invariants_hold(
    result: &PartitionResult,
    clusters: &[Vec<usize>],
    quotas: &[usize],
    group_of: &[usize],
) -> bool {
    let m = quotas.len();
    let mut inside = vec![false; m];
    for &g in &result.g_set {
        inside[g] = true;
    }
    let mut counts = vec![0usize; m];
    for &c in &result.centers {
        counts[group_of[c]] += 1;
    }
    if result.g_set.is_empty() {
        return counts == quotas;
    }
    let outside_ok = (0..m)
        .filter(|&g| !inside[g])
        .all(|g| counts[g] <= quotas[g]);
    let inside_total: usize = result.g_set.iter().map(|&g| counts[g]).sum();
    let inside_quota: usize = result.g_set.iter().map(|&g| quotas[g]).sum();
    let closed = result
        .centers
        .iter()
        .zip(clusters)
        .filter(|(c, _)| inside[group_of[**c]])
        .all(|(_, members)| members.iter().all(|&p| inside[group_of[p]]));
    let has_surplus = result.g_set.iter().any(|&g| counts[g] > quotas[g]);
    outside_ok && inside_total >= inside_quota && closed && has_surplus
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_moves_one_unit_end_to_end() {
        // Group 0 has two centers, group 2 none; only 0 -> 1 -> 2 connects them.
        let group_of = vec![0, 0, 1, 1, 2];
        let centers = vec![0, 1, 3];
        let clusters = vec![vec![0, 2], vec![1], vec![3, 4]];
        let r = exchange_and_partition(&centers, &clusters, &[1, 1, 1], &group_of).unwrap();
        assert_eq!(r.centers, vec![2, 1, 4]);
        assert_eq!(r.swaps, 2);
        assert_eq!(r.chains, 1);
        assert!(r.g_set.is_empty());
    }

    #[test]
    fn blocked_surplus_is_reported() {
        let group_of = vec![0, 0, 1];
        let centers = vec![0, 1];
        let clusters = [vec![0], vec![1], vec![2]];
        let r = exchange_and_partition(&centers, &clusters[..2], &[1, 1], &group_of).unwrap();
        assert_eq!(r.g_set, vec![0]);
        assert_eq!(r.swaps, 0);
        assert!(partition_invariants_hold(
            &r,
            &clusters[..2],
            &[1, 1],
            &group_of
        ));
    }

    #[test]
    fn g_set_includes_reachable_groups() {
        // 0 has surplus and reaches 1, but nothing reaches the deficit group 2.
        let group_of = vec![0, 0, 1, 2];
        let centers = vec![0, 1];
        let clusters = vec![vec![0, 2], vec![1]];
        let r = exchange_and_partition(&centers, &clusters, &[1, 0, 1], &group_of).unwrap();
        assert_eq!(r.centers, vec![0, 1]);
        assert_eq!(r.g_set, vec![0, 1]);
        assert!(partition_invariants_hold(
            &r,
            &clusters,
            &[1, 0, 1],
            &group_of
        ));
    }

    #[test]
    fn quota_sum_must_match() {
        let err = exchange_and_partition(&[0], &[vec![0]], &[2], &[0]).unwrap_err();
        assert!(matches!(
            err,
            Error::QuotaSumMismatch {
                quota_sum: 2,
                centers: 1
            }
        ));
    }

    #[test]
    fn shortest_path_prefers_low_ids() {
        let group_of = vec![0, 1, 2, 3];
        let g = SwapGraph::build(
            4,
            &[0, 1, 2],
            &[vec![0, 1, 2], vec![1, 3], vec![2, 3]],
            &group_of,
        );
        assert_eq!(g.shortest_path(0, 3), Some(vec![0, 1, 3]));
        assert_eq!(g.shortest_path(3, 0), None);
        assert!(!g.has_edge(0, 0));
    }
}
