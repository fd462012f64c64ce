//! Cut the sample graph edge by edge, always taking the current highest-betweenness edge, and
//! watch the largest component shrink.
//!
//! ```bash
//! cargo run -p backbone-siege --example sequential_attack
//! ```

use backbone_siege::export::checkpoint_strikes;
use backbone_siege::{load_graph, r_index, r_n_index, run_attack, AttackStrategy, RecordFiles};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graph = load_graph(&RecordFiles::in_dir(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/sample"
    )))?;
    let edges = graph.edge_count();
    let trace = run_attack(&graph, AttackStrategy::BetweennessSequential, edges)?;

    println!("strike  edge            betweenness  s(Q)");
    for s in trace.strikes.iter().take(15) {
        println!(
            "{:>6}  AS{}–AS{}  {:>10.3}  {:.3}",
            s.index,
            s.endpoints.0,
            s.endpoints.1,
            s.betweenness.unwrap(),
            s.lcc_fraction
        );
    }
    println!("   ...");

    for f in [0.01, 0.10, 0.20, 0.50] {
        let n = checkpoint_strikes(f, edges);
        println!("R_{:.0}% (n={n}) = {:.4}", f * 100.0, r_n_index(&trace, n)?);
    }
    println!("R over all {edges} strikes = {:.4}", r_index(&trace)?);

    let half = trace
        .strikes
        .iter()
        .find(|s| s.lcc_fraction <= 0.5)
        .map(|s| s.index);
    if let Some(q) = half {
        println!(
            "largest component at or below half the network after {q} strikes ({:.1}% of edges)",
            100.0 * q as f64 / edges as f64
        );
    }
    Ok(())
}
