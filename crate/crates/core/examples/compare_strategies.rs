//! Sequential vs simultaneous betweenness vs random removal on synthetic scale-free graphs.
//!
//! ```bash
//! cargo run --release -p backbone-siege --example compare_strategies [NODES] [SEEDS]
//! ```

use backbone_siege::{generate, r_n_index, run_attack, AttackStrategy};

fn main() {
    let mut args = std::env::args().skip(1);
    let nodes: usize = args.next().map_or(200, |a| a.parse().expect("node count"));
    let seeds: u64 = args.next().map_or(5, |a| a.parse().expect("seed count"));

    println!("seed  strategy          R_10%    R_20%    s@20%    R_30%");
    for seed in 0..seeds {
        let graph = generate::preferential_attachment(nodes, 2, seed);
        let edges = graph.edge_count();
        let (n10, n20, n30) = (edges / 10, edges / 5, edges * 3 / 10);
        for strategy in [
            AttackStrategy::BetweennessSequential,
            AttackStrategy::BetweennessSimultaneous,
            AttackStrategy::RandomUniform { seed },
        ] {
            let trace = run_attack(&graph, strategy, n30).unwrap();
            println!(
                "{seed:>4}  {:<16}  {:.4}   {:.4}   {:.4}   {:.4}",
                strategy.to_string(),
                r_n_index(&trace, n10).unwrap(),
                r_n_index(&trace, n20).unwrap(),
                trace.strikes[n20 - 1].lcc_fraction,
                r_n_index(&trace, n30).unwrap(),
            );
        }
    }
}
