//! Supply metrics relative to a provider set. The best-delivery view only sees the
//! provider's own component, so it can improve while the network falls apart; the
//! average-delivery view counts everyone and does not.
//!
//! ```bash
//! cargo run -p backbone-siege --example go_index
//! ```

use backbone_siege::{
    go_index, load_graph, run_attack, AsnId, AttackStrategy, EdgeId, EdgeLabel, PeeringGraph,
    RecordFiles,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // g–a–b–c–d with g the provider; cutting c–d drops the farthest node
    let asn = |v| AsnId::new(v).unwrap();
    let path = PeeringGraph::new(
        [],
        (1..5).map(|i| (asn(i), asn(i + 1), EdgeLabel::DirectLink)),
        [asn(1)],
    )?;
    let before = go_index(&path)?;
    let after = go_index(&path.remove_edge(EdgeId(3))?)?;
    println!("path g–a–b–c–d: BDE {:.2} -> {:.2}, ADE {:.4} -> {:.4}, SAR {:.2} -> {:.2}",
        before.bde, after.bde, before.ade, after.ade, before.sar, after.sar);

    let graph = load_graph(&RecordFiles::in_dir(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/sample"
    )))?;
    let trace = run_attack(&graph, AttackStrategy::BetweennessSequential, graph.edge_count() / 2)?;
    let start = go_index(&graph)?;
    println!("\nsample graph, providers {:?}", graph.providers().map(|p| p.get()).collect::<Vec<_>>());
    println!("strike   s(Q)    SAR   NetCON    BDE     ADE");
    println!("{:>6}  {:.3}  {:.3}  {:>4}   {:.4}  {:.4}", 0, 1.0, start.sar, start.netcon, start.bde, start.ade);
    for s in &trace.strikes {
        let g = s.go_index.unwrap();
        println!(
            "{:>6}  {:.3}  {:.3}  {:>4}   {:.4}  {:.4}",
            s.index, s.lcc_fraction, g.sar, g.netcon, g.bde, g.ade
        );
    }
    Ok(())
}
