//! Rank the edges of the sample graph by betweenness, then check the hand-computable cases.
//!
//! ```bash
//! cargo run -p backbone-siege --example edge_betweenness
//! ```

use backbone_siege::{
    bfs_levels, edge_betweenness, edge_betweenness_with_workers, load_graph, AsnId, EdgeLabel,
    PeeringGraph, RecordFiles,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graph = load_graph(&RecordFiles::in_dir(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/sample"
    )))?;
    let scores = edge_betweenness(&graph);
    println!("top edges of the sample graph:");
    for (id, score) in scores.ranking().into_iter().take(8) {
        let e = graph.edge(id).unwrap();
        println!("  edge {id:>2}  AS{}–AS{}  {score:.3}", e.a, e.b);
    }

    // same numbers from a 4-thread pool
    let parallel = edge_betweenness_with_workers(&graph, 4)?;
    assert_eq!(scores, parallel);

    // each unordered pair spreads one unit over its shortest paths
    let distances: usize = graph
        .nodes()
        .iter()
        .map(|&s| bfs_levels(&graph, s).unwrap().into_values().sum::<usize>())
        .sum();
    println!(
        "Σ scores = {:.3}, Σ pairwise distances = {}",
        scores.total(),
        distances / 2
    );

    let asn = |v| AsnId::new(v).unwrap();
    let cycle = PeeringGraph::new(
        [],
        [(1, 2), (2, 3), (3, 4), (4, 1)].map(|(a, b)| (asn(a), asn(b), EdgeLabel::DirectLink)),
        [],
    )?;
    let c4: Vec<f64> = edge_betweenness(&cycle).iter().map(|(_, s)| s).collect();
    println!("4-cycle: {c4:?} (diagonal pairs split across two routes)");
    Ok(())
}
