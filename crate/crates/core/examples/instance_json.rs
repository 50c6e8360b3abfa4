// Building instances from points, matrices and graphs, and the JSON format
// read by `fairkc solve`.
//
// `cargo run --example instance_json`

use fairkc::{
    fair_m_groups, FairSolveConfig, GraphMetric, Instance, Norm, PointSet, WeightedGraph,
};

fn run_example() -> fairkc::Result<()> {
    let points = PointSet::new(
        &[
            vec![0.0, 0.0],
            vec![3.0, 4.0],
            vec![6.0, 8.0],
            vec![0.0, 1.0],
        ],
        Norm::L2,
    )?;
    let by_points = Instance::new(points, vec![0, 1, 1, 0], vec![1, 1], vec![])?
        .with_group_names(vec!["a".into(), "b".into()])?;

    let graph = WeightedGraph::new(4, vec![(0, 1, 2.0), (1, 2, 3.0), (2, 3, 1.0)])?;
    let by_graph = Instance::new(
        GraphMetric::new(graph)?,
        vec![0, 1, 0, 1],
        vec![1, 1],
        vec![3],
    )?;

    for instance in [by_points, by_graph] {
        let text = instance.to_json_string()?;
        println!("{text}");
        let back = Instance::from_json_str(&text)?;
        let config = FairSolveConfig::deterministic();
        let a = fair_m_groups(&instance, &config)?;
        let b = fair_m_groups(&back, &config)?;
        assert_eq!(a.centers, b.centers);
        println!("  -> centers {:?}, cost {}", a.centers.as_slice(), a.cost);
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
