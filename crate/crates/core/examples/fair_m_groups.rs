// Any number of groups: the recursive solver with its step trace.
//
// `cargo run --example fair_m_groups`

use fairkc::generators::erdos_renyi;
use fairkc::oracle::brute_force_fair;
use fairkc::solvers::TraceEvent;
use fairkc::{fair_m_groups, FairSolveConfig};

fn run_example() -> fairkc::Result<()> {
    let instance = erdos_renyi(20, &[1, 2, 1, 1], 1, 3)?;
    let report = fair_m_groups(&instance, &FairSolveConfig::seeded(8).with_trace())?;

    for event in report.trace.as_deref().unwrap_or_default() {
        match event {
            TraceEvent::Recurse { level, groups } => {
                println!("level {level}: recurse into groups {groups:?}")
            }
            TraceEvent::Swap {
                level,
                removed,
                added,
            } => println!("level {level}: swap {removed} -> {added}"),
            TraceEvent::Fill { level, point } => println!("level {level}: fill with {point}"),
            TraceEvent::GreedyPick { .. } => {}
        }
    }

    let opt = brute_force_fair(&instance)?.opt_value;
    let bound = (3 * (1 << (instance.m() - 1)) - 1) as f64;
    println!(
        "centers {:?}, counts {:?}, depth {}",
        report.centers.as_slice(),
        report.group_counts(&instance),
        report.recursion_depth
    );
    println!("cost {} vs optimum {opt} (bound {bound}x)", report.cost);
    assert!(report.cost <= bound * opt);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
