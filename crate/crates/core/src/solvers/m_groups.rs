use std::collections::HashSet;

use super::{Algorithm, FairSolveConfig, Run, SolveReport, TraceEvent};
use crate::clustering::assign;
use crate::error::Result;
use crate::exchange::exchange_and_partition;
use crate::instance::Instance;

/// Fair k-center for any number of groups; cost at most `3 * 2^(m-1) - 1`
/// times the optimum.
///
/// Runs greedy, balances quotas through the swap graph, and recurses on the
/// groups that could not be balanced. Centers of the balanced groups become
/// fixed centers of the recursive call.
pub fn fair_m_groups(instance: &Instance, config: &FairSolveConfig) -> Result<SolveReport> {
    Run::report(instance, config, Algorithm::FairM, |run| {
        let points: Vec<usize> = (0..instance.n()).collect();
        let names: Vec<usize> = (0..instance.m()).collect();
        let level = Level {
            depth: 1,
            points: &points,
            fixed: instance.c0(),
            group_of: instance.groups(),
            quotas: instance.quotas(),
            names: &names,
        };
        solve(run, level)
    })
}

/// Sub-problem handed to one recursive call.
///
/// `group_of` is indexed by global point id and uses this level's group ids;
/// `names[g]` is the original id of local group `g`.
struct Level<'l> {
    depth: usize,
    points: &'l [usize],
    fixed: &'l [usize],
    group_of: &'l [usize],
    quotas: &'l [usize],
    names: &'l [usize],
}

fn solve(run: &mut Run<'_>, lv: Level<'_>) -> Result<Vec<usize>> {
    run.depth = run.depth.max(lv.depth);
    let k: usize = lv.quotas.iter().sum();
    let m = lv.quotas.len();
    let greedy = run.greedy(lv.depth, lv.points, k, lv.fixed)?;
    if m == 1 || k == 0 {
        return Ok(greedy);
    }

    let with_fixed: Vec<usize> = greedy.iter().chain(lv.fixed).copied().collect();
    let mut clusters = assign(run.metric, lv.points, &with_fixed).clusters;
    clusters.truncate(k);
    let part = exchange_and_partition(&greedy, &clusters, lv.quotas, lv.group_of)?;
    run.swaps += part.swaps;
    for &(removed, added) in &part.replaced {
        run.record(|| TraceEvent::Swap {
            level: lv.depth,
            removed,
            added,
        });
    }
    if part.g_set.is_empty() {
        return Ok(part.centers);
    }

    let mut rank = vec![usize::MAX; m];
    for (r, &g) in part.g_set.iter().enumerate() {
        rank[g] = r;
    }
    let inside = |p: usize| rank[lv.group_of[p]] != usize::MAX;

    let settled: Vec<usize> = part
        .centers
        .iter()
        .copied()
        .filter(|&c| !inside(c))
        .collect();
    let fixed: Vec<usize> = lv.fixed.iter().chain(&settled).copied().collect();
    let region: Vec<usize> = part
        .centers
        .iter()
        .zip(&clusters)
        .filter(|(c, _)| inside(**c))
        .flat_map(|(_, members)| members.iter().copied())
        .collect();

    // Fixed points only act as centers below, so any label in range will do.
    let mut group_of = lv.group_of.to_vec();
    for &p in &region {
        group_of[p] = rank[lv.group_of[p]];
    }
    for &p in &fixed {
        group_of[p] = 0;
    }
    let mut points: Vec<usize> = region.iter().chain(&fixed).copied().collect();
    points.sort_unstable();
    points.dedup();
    let quotas: Vec<usize> = part.g_set.iter().map(|&g| lv.quotas[g]).collect();
    let names: Vec<usize> = part.g_set.iter().map(|&g| lv.names[g]).collect();
    run.record(|| TraceEvent::Recurse {
        level: lv.depth,
        groups: names.clone(),
    });

    let mut out = solve(
        run,
        Level {
            depth: lv.depth + 1,
            points: &points,
            fixed: &fixed,
            group_of: &group_of,
            quotas: &quotas,
            names: &names,
        },
    )?;
    out.extend_from_slice(&settled);

    let taken: HashSet<usize> = lv.fixed.iter().chain(&settled).copied().collect();
    for g in (0..m).filter(|&g| rank[g] == usize::MAX) {
        let have = settled.iter().filter(|&&c| lv.group_of[c] == g).count();
        let pool: Vec<usize> = lv
            .points
            .iter()
            .copied()
            .filter(|&p| lv.group_of[p] == g && !taken.contains(&p))
            .collect();
        run.fill(lv.depth, &pool, lv.quotas[g] - have, &mut out)?;
    }
    Ok(out)
}
