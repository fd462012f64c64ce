//! Load the bundled sample records and describe the resulting peering graph.
//!
//! ```bash
//! cargo run -p backbone-siege --example build_graph [DIR]
//! ```

use std::collections::BTreeMap;

use backbone_siege::ingest::{build_graph, parse_records, RecordFiles};
use backbone_siege::EdgeLabel;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/sample").to_owned());
    let records = parse_records(&RecordFiles::in_dir(&dir))?;
    println!(
        "records: {} IXP memberships, {} facility memberships, {} direct links, {} providers",
        records.ixp_memberships.len(),
        records.facility_memberships.len(),
        records.direct_links.len(),
        records.providers.len()
    );

    let candidates = records.candidate_links();
    let mut per_rule: BTreeMap<EdgeLabel, usize> = BTreeMap::new();
    for (_, _, label) in &candidates {
        *per_rule.entry(*label).or_default() += 1;
    }
    println!("pairs before merging: {per_rule:?}");

    let graph = build_graph(&records)?;
    println!("graph: {} nodes, {} edges", graph.node_count(), graph.edge_count());
    for e in graph.edges().filter(|e| e.labels.len() > 1) {
        println!("  merged edge {} AS{}–AS{} {:?}", e.id, e.a, e.b, e.labels);
    }
    println!("providers: {:?}", graph.providers().map(|p| p.get()).collect::<Vec<_>>());

    println!("degree distribution:");
    for (degree, count) in graph.degree_distribution() {
        println!("  {degree:>3} {}", "#".repeat(count));
    }
    let components = graph.connected_components();
    println!(
        "{} component(s), largest holds {:.1}% of nodes",
        components.len(),
        100.0 * graph.largest_component_fraction()?
    );
    Ok(())
}
