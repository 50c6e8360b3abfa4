use std::collections::HashSet;

use super::{Algorithm, FairSolveConfig, Run, SolveReport, TraceEvent};
use crate::clustering::assign;
use crate::error::{Error, Result};
use crate::instance::Instance;

/// Fair k-center for exactly two groups; cost at most 5 times the optimum.
///
/// Runs greedy for `k1 + k2` centers, pushes surplus centers into the other
/// group inside their own clusters, and re-runs greedy inside the clusters
/// that still belong to the surplus group.
pub fn fair_two_groups(instance: &Instance, config: &FairSolveConfig) -> Result<SolveReport> {
    if instance.m() != 2 {
        return Err(Error::WrongGroupCount {
            expected: 2,
            found: instance.m(),
        });
    }
    Run::report(instance, config, Algorithm::Fair2, |run| {
        solve(run, instance)
    })
}

fn solve(run: &mut Run<'_>, instance: &Instance) -> Result<Vec<usize>> {
    let group = instance.groups();
    let quotas = instance.quotas();
    let c0 = instance.c0();
    let k = instance.k();
    let all: Vec<usize> = (0..instance.n()).collect();

    let mut centers = run.greedy(1, &all, k, c0)?;
    let mut counts = instance.group_counts(&centers);
    if counts == quotas || k == 0 {
        return Ok(centers);
    }
    let (a, b) = if counts[0] > quotas[0] {
        (0, 1)
    } else {
        (1, 0)
    };

    let with_fixed: Vec<usize> = centers.iter().chain(c0).copied().collect();
    let clusters = assign(run.metric, &all, &with_fixed).clusters;

    while counts[a] > quotas[a] {
        let swap = (0..k).filter(|&t| group[centers[t]] == a).find_map(|t| {
            clusters[t]
                .iter()
                .copied()
                .find(|&p| group[p] == b)
                .map(|y| (t, y))
        });
        let Some((t, y)) = swap else { break };
        let removed = centers[t];
        run.record(|| TraceEvent::Swap {
            level: 1,
            removed,
            added: y,
        });
        centers[t] = y;
        run.swaps += 1;
        counts[a] -= 1;
        counts[b] += 1;
    }
    if counts[a] == quotas[a] {
        return Ok(centers);
    }

    // Every cluster centered in `a` now lies entirely inside `a`.
    let kept_b: Vec<usize> = centers.iter().copied().filter(|&c| group[c] == b).collect();
    let fixed: Vec<usize> = c0.iter().chain(&kept_b).copied().collect();
    let mut region: Vec<usize> = (0..k)
        .filter(|&t| group[centers[t]] == a)
        .flat_map(|t| clusters[t].iter().copied())
        .chain(fixed.iter().copied())
        .collect();
    region.sort_unstable();
    region.dedup();

    let mut out = run.greedy(1, &region, quotas[a], &fixed)?;
    out.extend_from_slice(&kept_b);

    let taken: HashSet<usize> = c0.iter().chain(&kept_b).copied().collect();
    let pool: Vec<usize> = (0..instance.n())
        .filter(|&p| group[p] == b && !taken.contains(&p))
        .collect();
    run.fill(1, &pool, quotas[b] - kept_b.len(), &mut out)?;
    Ok(out)
}
