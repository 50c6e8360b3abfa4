// Two groups with a quota each, solved by the two-group algorithm and
// checked against the exact optimum.
//
// `cargo run --example fair_two_groups`

use fairkc::generators::erdos_renyi;
use fairkc::oracle::brute_force_fair;
use fairkc::{fair_two_groups, greedy, FairSolveConfig};

fn run_example() -> fairkc::Result<()> {
    let instance = erdos_renyi(18, &[3, 1], 2, 42)?;
    let config = FairSolveConfig::deterministic();

    let unfair = greedy::greedy_k_center(
        instance.metric(),
        &(0..instance.n()).collect::<Vec<_>>(),
        instance.k(),
        instance.c0(),
        &mut greedy::Chooser::deterministic(),
    )?;
    println!(
        "plain greedy picks {:?}, group counts {:?}",
        unfair.chosen,
        instance.group_counts(&unfair.chosen)
    );

    let report = fair_two_groups(&instance, &config)?;
    let opt = brute_force_fair(&instance)?.opt_value;
    println!(
        "fair2 picks {:?}, group counts {:?}, {} swap(s)",
        report.centers.as_slice(),
        report.group_counts(&instance),
        report.swaps_performed
    );
    println!(
        "cost {} against optimum {} (ratio {:.2}, bound 5)",
        report.cost,
        opt,
        report.cost / opt
    );
    assert_eq!(report.group_counts(&instance), instance.quotas());
    assert!(report.cost <= 5.0 * opt);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
