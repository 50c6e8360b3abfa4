// Instances on which the two fair solvers come close to their bounds.
//
// `cargo run --example adversarial`

use fairkc::generators::{adversarial, AdversarialKind};
use fairkc::{fair_m_groups, fair_two_groups, FairSolveConfig};

fn run_example() -> fairkc::Result<()> {
    let config = FairSolveConfig::deterministic();
    for delta in [0.05, 0.01, 0.001] {
        let two = adversarial(AdversarialKind::TwoGroups, delta)?;
        let three = adversarial(AdversarialKind::ThreeGroups, delta)?;
        let a = fair_two_groups(&two.instance, &config)?;
        let b = fair_m_groups(&three.instance, &config)?;
        println!(
            "delta {delta}: two groups {:.3}x, three groups {:.3}x",
            a.cost / two.opt_value,
            b.cost / three.opt_value
        );
        assert_eq!(a.centers.sorted(), two.expected.centers);
        assert_eq!(b.centers.sorted(), three.expected.centers);
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
