// Farthest-first traversal on a small line, with and without fixed centers.
//
// `cargo run --example greedy`

use fairkc::oracle::brute_force_unfair;
use fairkc::{greedy_k_center, solution_cost, Chooser, DistanceMatrix, Instance};

fn run_example() -> fairkc::Result<()> {
    let xs: [f64; 8] = [0.0, 1.0, 2.0, 7.0, 8.0, 15.0, 16.0, 30.0];
    let metric = DistanceMatrix::from_fn(xs.len(), |i, j| (xs[i] - xs[j]).abs())?;
    let points: Vec<usize> = (0..xs.len()).collect();

    for fixed in [vec![], vec![7]] {
        let instance = Instance::new(metric.clone(), vec![0; xs.len()], vec![3], fixed.clone())?;
        let trace = greedy_k_center(
            instance.metric(),
            &points,
            3,
            &fixed,
            &mut Chooser::deterministic(),
        )?;
        let cost = solution_cost(&instance, &trace.chosen)?;
        let opt = brute_force_unfair(&instance, 3)?.opt_value;
        println!(
            "fixed {fixed:?}: picked {:?}, radii {:?}",
            trace.chosen, trace.radii
        );
        println!("  cost {cost}, optimum {opt}, ratio {:.2}", cost / opt);
        assert!(cost <= 2.0 * opt);
    }

    // Seeded mode draws ties uniformly; the same seed gives the same run.
    let mut a = Chooser::seeded(5);
    let mut b = Chooser::seeded(5);
    let x = greedy_k_center(&metric.clone().into(), &points, 3, &[], &mut a)?;
    let y = greedy_k_center(&metric.into(), &points, 3, &[], &mut b)?;
    assert_eq!(x.chosen, y.chosen);
    println!("seeded run: {:?}", x.chosen);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
