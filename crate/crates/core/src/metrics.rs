//! Robustness indices over attack traces and supply-network metrics over graph states.
//!
//! The supply metrics treat the graph's provider set as the content source and every other
//! node as a demand node:
//!
//! * **SAR** – fraction of demand nodes with a path to some provider.
//! * **NetCON** – size of the largest component holding at least one provider.
//! * **BDE** – reciprocal of the mean hop distance to the nearest provider, over demand nodes
//!   that can reach one. Zero when none can.
//! * **ADE** – mean over demand nodes of `Σ_p 1/d(v, p)`, unreachable providers adding zero.
//!   Ranges over `[0, P]` for `P` providers.

use crate::attack::AttackTrace;
use crate::centrality::{hop_distances, multi_source_distances};
use crate::error::{Error, Result};
use crate::graph::PeeringGraph;

/// Supply-network metrics of one graph state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GoIndexSnapshot {
    pub sar: f64,
    pub netcon: usize,
    pub netcon_fraction: f64,
    pub bde: f64,
    pub ade: f64,
}

fn require_providers(graph: &PeeringGraph) -> Result<()> {
    if graph.provider_count() == 0 {
        return Err(Error::EmptyProviders);
    }
    Ok(())
}

fn demand_count(graph: &PeeringGraph) -> Result<usize> {
    require_providers(graph)?;
    match graph.node_count() - graph.provider_count() {
        0 => Err(Error::NoDemandNodes),
        n => Ok(n),
    }
}

/// Nearest-provider hop distance of each demand node.
fn demand_distances(graph: &PeeringGraph) -> impl Iterator<Item = Option<usize>> + '_ {
    let providers = graph.provider_indices();
    multi_source_distances(graph, providers)
        .into_iter()
        .enumerate()
        .filter(move |(i, _)| providers.binary_search(i).is_err())
        .map(|(_, d)| d)
}

pub fn supply_availability(graph: &PeeringGraph) -> Result<f64> {
    let demand = demand_count(graph)?;
    let reached = demand_distances(graph).filter(Option::is_some).count();
    Ok(reached as f64 / demand as f64)
}

/// Largest provider-holding component, as a node count and as a fraction of all nodes.
pub fn network_connectivity(graph: &PeeringGraph) -> Result<(usize, f64)> {
    require_providers(graph)?;
    let (comp, sizes) = graph.component_ids();
    let count = graph
        .provider_indices()
        .iter()
        .map(|&p| sizes[comp[p]])
        .max()
        .unwrap_or(0);
    Ok((count, count as f64 / graph.node_count() as f64))
}

pub fn best_delivery_efficiency(graph: &PeeringGraph) -> Result<f64> {
    require_providers(graph)?;
    let (reached, total) = demand_distances(graph)
        .flatten()
        .fold((0usize, 0usize), |(n, sum), d| (n + 1, sum + d));
    if reached == 0 {
        return Ok(0.0);
    }
    Ok(reached as f64 / total as f64)
}

pub fn average_delivery_efficiency(graph: &PeeringGraph) -> Result<f64> {
    let demand = demand_count(graph)?;
    let providers = graph.provider_indices();
    let per_provider: Vec<Vec<Option<usize>>> =
        providers.iter().map(|&p| hop_distances(graph, p)).collect();
    let mut total = 0.0;
    for v in 0..graph.node_count() {
        if providers.binary_search(&v).is_ok() {
            continue;
        }
        for dist in &per_provider {
            if let Some(d) = dist[v] {
                total += 1.0 / d as f64;
            }
        }
    }
    Ok(total / demand as f64)
}

pub fn go_index(graph: &PeeringGraph) -> Result<GoIndexSnapshot> {
    let (netcon, netcon_fraction) = network_connectivity(graph)?;
    Ok(GoIndexSnapshot {
        sar: supply_availability(graph)?,
        netcon,
        netcon_fraction,
        bde: best_delivery_efficiency(graph)?,
        ade: average_delivery_efficiency(graph)?,
    })
}

/// Mean largest-component fraction over the first `n` strikes.
#[derive(Clone, Debug, PartialEq)]
pub struct RobustnessSeries {
    pub n: usize,
    pub r_n: f64,
    pub s: Vec<f64>,
}

pub fn robustness_series(trace: &AttackTrace, n: usize) -> Result<RobustnessSeries> {
    let len = trace.strikes.len();
    if n == 0 || n > len {
        return Err(Error::StrikeCountOutOfRange { n, len });
    }
    let s: Vec<f64> = trace.strikes[..n].iter().map(|q| q.lcc_fraction).collect();
    let r_n = s.iter().sum::<f64>() / n as f64;
    Ok(RobustnessSeries { n, r_n, s })
}

/// Mean largest-component fraction over the first `n` strikes.
pub fn r_n_index(trace: &AttackTrace, n: usize) -> Result<f64> {
    Ok(robustness_series(trace, n)?.r_n)
}

/// Mean largest-component fraction over a trace that removed every edge.
pub fn r_index(trace: &AttackTrace) -> Result<f64> {
    let strikes = trace.strikes.len();
    if strikes == 0 {
        return Err(Error::EmptyTrace);
    }
    if strikes != trace.initial_edge_count {
        return Err(Error::IncompleteTrace {
            strikes,
            edges: trace.initial_edge_count,
        });
    }
    r_n_index(trace, strikes)
}
