// Every solver on one random graph. The two-group solver needs exactly two
// groups, so it sits this one out.
//
// `cargo run --example heuristics`

use fairkc::generators::erdos_renyi;
use fairkc::{Algorithm, FairSolveConfig};

fn run_example() -> fairkc::Result<()> {
    let instance = erdos_renyi(2000, &[4; 10], 10, 1)?;
    let config = FairSolveConfig::seeded(1);
    for algorithm in Algorithm::ALL
        .into_iter()
        .filter(|&a| a != Algorithm::Fair2)
    {
        let report = algorithm.run(&instance, &config)?;
        println!(
            "{:<12} cost {:>5}  deviation {}  counts {:?}",
            algorithm.to_string(),
            report.cost,
            report.max_group_deviation(&instance),
            report.group_counts(&instance)
        );
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
