//! Robustness of Internet peering graphs under edge-removal attacks.
//!
//! The crate builds an AS-level peering graph from IXP memberships, facility memberships and
//! direct links ([`ingest`]), scores edges by betweenness ([`centrality`]), removes them one
//! strike at a time ([`attack`]) and measures the damage ([`metrics`]): the R / R_n indices
//! over the largest-component curve, and supply metrics (SAR, NetCON, BDE, ADE) relative to a
//! designated set of provider ASs. [`export`] drives whole campaigns and writes CSV.
//!
//! ```
//! use backbone_siege::{generate, run_attack, r_n_index, AttackStrategy};
//!
//! let graph = generate::preferential_attachment(100, 2, 7);
//! let trace = run_attack(&graph, AttackStrategy::BetweennessSequential, 20).unwrap();
//! let r = r_n_index(&trace, 20).unwrap();
//! assert!(r > 0.0 && r <= 1.0);
//! ```
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod attack;
pub mod centrality;
pub mod error;
pub mod export;
pub mod generate;
pub mod graph;
pub mod ingest;
pub mod metrics;

pub use attack::{plan_simultaneous, run_attack, Attack, AttackStrategy, AttackTrace, Strike};
pub use centrality::{bfs_levels, edge_betweenness, edge_betweenness_with_workers, EdgeScore};
pub use error::{Error, Result};
pub use graph::{AsnId, EdgeId, EdgeLabel, EdgeLabels, EdgeRecord, PeeringGraph};
pub use ingest::{build_graph, load_graph, parse_records, PeeringRecordSet, RecordFiles};
pub use metrics::{
    average_delivery_efficiency, best_delivery_efficiency, go_index, network_connectivity,
    r_index, r_n_index, robustness_series, supply_availability, GoIndexSnapshot,
    RobustnessSeries,
};
