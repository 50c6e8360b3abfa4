use std::collections::HashSet;

use super::{Algorithm, FairSolveConfig, Run, SolveReport, TraceEvent};
use crate::error::Result;
use crate::greedy::Farthest;
use crate::instance::Instance;

/// Runs greedy separately inside each group, with that group's fixed centers.
///
/// No approximation guarantee.
pub fn heuristic_a(instance: &Instance, config: &FairSolveConfig) -> Result<SolveReport> {
    Run::report(instance, config, Algorithm::HeuristicA, |run| {
        let c0: HashSet<usize> = instance.c0().iter().copied().collect();
        let mut out = Vec::with_capacity(instance.k());
        for (g, &quota) in instance.quotas().iter().enumerate() {
            let members = instance.members(g);
            let fixed: Vec<usize> = members.iter().copied().filter(|p| c0.contains(p)).collect();
            out.extend(run.greedy(1, &members, quota, &fixed)?);
        }
        Ok(out)
    })
}

/// Greedy over the whole point set, restricted at each step to groups that
/// still have quota left.
///
/// No approximation guarantee.
pub fn heuristic_b(instance: &Instance, config: &FairSolveConfig) -> Result<SolveReport> {
    Run::report(instance, config, Algorithm::HeuristicB, |run| {
        let points: Vec<usize> = (0..instance.n()).collect();
        let group = instance.groups();
        let mut left = instance.quotas().to_vec();
        let mut state = Farthest::new(run.metric, &points, instance.c0());
        let mut out = Vec::with_capacity(instance.k());
        for _ in 0..instance.k() {
            let (pos, radius) = state
                .pick(&mut run.chooser, |p| left[group[p]] > 0)
                .expect("validated quotas leave an eligible point");
            let point = state.point(pos);
            run.record(|| TraceEvent::GreedyPick {
                level: 1,
                point,
                radius,
            });
            left[group[point]] -= 1;
            state.open(pos);
            out.push(point);
        }
        Ok(out)
    })
}
