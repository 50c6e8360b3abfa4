// The center exchange step on a hand-made clustering.
//
// Group 0 has two centers but a quota of one. Cluster 0 contains a group-1
// point, so one swap fixes the counts.
//
// `cargo run --example exchange`

use fairkc::exchange::partition_invariants_hold;
use fairkc::{exchange_and_partition, SwapGraph};

fn run_example() -> fairkc::Result<()> {
    let group_of = vec![0, 0, 1, 0, 2, 2];
    let centers = vec![0, 1, 4];
    let clusters = vec![vec![0, 2], vec![1, 3], vec![4, 5]];

    let graph = SwapGraph::build(3, &centers, &clusters, &group_of);
    println!("swap graph edges: {:?}", graph.edges());

    let quotas = vec![1, 1, 1];
    let r = exchange_and_partition(&centers, &clusters, &quotas, &group_of)?;
    println!(
        "replaced {:?}, centers now {:?}, groups left over {:?}",
        r.replaced, r.centers, r.g_set
    );
    assert!(partition_invariants_hold(&r, &clusters, &quotas, &group_of));
    assert!(r.g_set.is_empty());

    // Group 2 cannot be reached from group 0 here, so the surplus stays.
    let quotas = vec![1, 2, 0];
    let r = exchange_and_partition(&centers, &clusters, &quotas, &group_of)?;
    println!(
        "quotas {quotas:?}: centers {:?}, groups left over {:?}",
        r.centers, r.g_set
    );
    assert!(partition_invariants_hold(&r, &clusters, &quotas, &group_of));
    Ok(())
}

fn main() {
    run_example().unwrap();
}
