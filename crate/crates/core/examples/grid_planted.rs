// Planted clusters of radius 0.5 around grid points.
//
// `cargo run --example grid_planted`

use fairkc::generators::grid_clusters;
use fairkc::oracle::threshold_fair;
use fairkc::{fair_m_groups, FairSolveConfig};

fn run_example() -> fairkc::Result<()> {
    let small = grid_clusters(2, 40, 3, 0)?;
    let opt = threshold_fair(&small.instance)?.opt_value;
    println!(
        "2x2 grid, 40 points: exact optimum {opt}, planted {}",
        small.planted_cost
    );
    assert_eq!(opt, small.planted_cost);

    for m in [2, 5, 10] {
        let g = grid_clusters(5, 2500, m, 7)?;
        let r = fair_m_groups(&g.instance, &FairSolveConfig::seeded(7))?;
        println!(
            "m = {m:>2}: cost {:.3}, {:.2}x planted",
            r.cost,
            r.cost / g.planted_cost
        );
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
