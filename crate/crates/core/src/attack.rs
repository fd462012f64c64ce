//! Edge-removal attacks under a strike budget.
//!
//! * [`AttackStrategy::BetweennessSequential`] recomputes edge betweenness on the current graph
//!   before every strike and cuts the top edge.
//! * [`AttackStrategy::BetweennessSimultaneous`] ranks edges once on the intact graph and cuts
//!   them in that order.
//! * [`AttackStrategy::RandomUniform`] cuts a uniformly chosen surviving edge, driven by a
//!   seeded ChaCha generator so runs are reproducible across platforms.
//!
//! Equal scores always resolve to the lowest edge id.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::centrality::{edge_betweenness_with_workers, EdgeScore};
use crate::error::{Error, Result};
use crate::graph::{AsnId, EdgeId, PeeringGraph};
use crate::metrics::{go_index, GoIndexSnapshot};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AttackStrategy {
    BetweennessSequential,
    BetweennessSimultaneous,
    RandomUniform { seed: u64 },
}

impl AttackStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            AttackStrategy::BetweennessSequential => "betweenness-seq",
            AttackStrategy::BetweennessSimultaneous => "betweenness-sim",
            AttackStrategy::RandomUniform { .. } => "random",
        }
    }
}

impl fmt::Display for AttackStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AttackStrategy::RandomUniform { seed } => write!(f, "random:{seed}"),
            other => f.write_str(other.name()),
        }
    }
}

/// Accepts `betweenness-seq`, `betweenness-sim`, `random` (seed 0) and `random:SEED`.
impl FromStr for AttackStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "betweenness-seq" => Ok(AttackStrategy::BetweennessSequential),
            "betweenness-sim" => Ok(AttackStrategy::BetweennessSimultaneous),
            "random" => Ok(AttackStrategy::RandomUniform { seed: 0 }),
            _ => s
                .strip_prefix("random:")
                .and_then(|seed| seed.parse().ok())
                .map(|seed| AttackStrategy::RandomUniform { seed })
                .ok_or_else(|| Error::UnknownStrategy(s.to_owned())),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Strike {
    /// 1-based strike number.
    pub index: usize,
    pub edge: EdgeId,
    pub endpoints: (AsnId, AsnId),
    /// Score of the removed edge when it was chosen; `None` for random strikes.
    pub betweenness: Option<f64>,
    /// Largest-component fraction of the original node count after this strike.
    pub lcc_fraction: f64,
    /// Supply metrics after this strike; `None` when the graph has no providers.
    pub go_index: Option<GoIndexSnapshot>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AttackTrace {
    pub strategy: AttackStrategy,
    pub initial_node_count: usize,
    pub initial_edge_count: usize,
    pub strikes: Vec<Strike>,
}

impl AttackTrace {
    pub fn lcc_fractions(&self) -> impl Iterator<Item = f64> + '_ {
        self.strikes.iter().map(|s| s.lcc_fraction)
    }
}

fn check_budget(graph: &PeeringGraph, budget: usize) -> Result<()> {
    if graph.node_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    if budget > graph.edge_count() {
        return Err(Error::BudgetExceedsEdgeCount {
            budget,
            edges: graph.edge_count(),
        });
    }
    Ok(())
}

/// Top `budget` edges by betweenness on the intact graph, best first.
pub fn plan_simultaneous(graph: &PeeringGraph, budget: usize) -> Result<Vec<EdgeId>> {
    Ok(plan_scored(&Attack::new(graph.clone()), budget)?
        .into_iter()
        .map(|(e, _)| e)
        .collect())
}

fn plan_scored(attack: &Attack, budget: usize) -> Result<Vec<(EdgeId, f64)>> {
    if budget > attack.graph.edge_count() {
        return Err(Error::BudgetExceedsEdgeCount {
            budget,
            edges: attack.graph.edge_count(),
        });
    }
    let mut ranking = attack.scores()?.ranking();
    ranking.truncate(budget);
    Ok(ranking)
}

/// Attack driver with an explicit worker count for betweenness recomputation.
#[derive(Clone, Debug)]
pub struct Attack {
    graph: PeeringGraph,
    workers: usize,
}

impl Attack {
    pub fn new(graph: PeeringGraph) -> Self {
        Attack { graph, workers: 1 }
    }

    /// Worker threads used per betweenness evaluation. Results do not depend on this value.
    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    fn scores(&self) -> Result<EdgeScore> {
        edge_betweenness_with_workers(&self.graph, self.workers)
    }

    pub fn run(&self, strategy: AttackStrategy, budget: usize) -> Result<AttackTrace> {
        check_budget(&self.graph, budget)?;
        let mut graph = self.graph.clone();
        let n0 = graph.node_count();
        let mut trace = AttackTrace {
            strategy,
            initial_node_count: n0,
            initial_edge_count: graph.edge_count(),
            strikes: Vec::with_capacity(budget),
        };

        let plan = match strategy {
            AttackStrategy::BetweennessSimultaneous => Some(plan_scored(self, budget)?),
            _ => None,
        };
        let mut rng = match strategy {
            AttackStrategy::RandomUniform { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };

        for q in 0..budget {
            let (edge, score) = match (&plan, &mut rng) {
                (Some(plan), _) => (plan[q].0, Some(plan[q].1)),
                (None, Some(rng)) => {
                    let pick = rng.gen_range(0..graph.edge_count());
                    (graph.edges().nth(pick).unwrap().id, None)
                }
                (None, None) => {
                    let scores = edge_betweenness_with_workers(&graph, self.workers)?;
                    let (e, s) = scores.argmax().expect("budget checked against edge count");
                    (e, Some(s))
                }
            };
            let rec = *graph.edge(edge).ok_or(Error::NoSuchEdge(edge))?;
            graph.remove_edge_in_place(edge)?;
            let go = if graph.provider_count() > 0 {
                Some(go_index(&graph)?)
            } else {
                None
            };
            trace.strikes.push(Strike {
                index: q + 1,
                edge,
                endpoints: (rec.a, rec.b),
                betweenness: score,
                lcc_fraction: graph.largest_component_size() as f64 / n0 as f64,
                go_index: go,
            });
        }
        Ok(trace)
    }
}

/// Runs `strategy` for `budget` strikes on a single worker.
pub fn run_attack(
    graph: &PeeringGraph,
    strategy: AttackStrategy,
    budget: usize,
) -> Result<AttackTrace> {
    Attack::new(graph.clone()).run(strategy, budget)
}
