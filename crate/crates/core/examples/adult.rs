// The Adult census sample grouped by gender and by race.
//
// Reads `data/adult.data` from the workspace root, or the file named by
// `FAIRKC_ADULT_PATH`.
//
// `cargo run --release --example adult`

use std::path::PathBuf;

use fairkc::generators::{load_adult, AdultGrouping};
use fairkc::{fair_m_groups, FairSolveConfig};

fn run_example() -> fairkc::Result<()> {
    let path = std::env::var_os("FAIRKC_ADULT_PATH")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/adult.data"));

    for (grouping, quotas) in [
        (AdultGrouping::Gender, vec![20, 20]),
        (AdultGrouping::Race, vec![5; 5]),
    ] {
        let data = load_adult(&path, grouping)?;
        println!(
            "{grouping:?}: {:?} over {:?}",
            data.group_sizes(),
            grouping.group_names()
        );
        let instance = data.instance(&quotas, 10, 0)?;
        let r = fair_m_groups(&instance, &FairSolveConfig::seeded(0))?;
        println!(
            "  fairm cost {:.3} with counts {:?}",
            r.cost,
            r.group_counts(&instance)
        );
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
