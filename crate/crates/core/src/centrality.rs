//! Exact edge betweenness over hop-count shortest paths.
//!
//! Scores use the unordered-pair convention without normalization: an edge scores
//! `Σ_{s<t} σ_st(e) / σ_st`. On a path `a–b–c` both edges score 2.
//!
//! The per-source dependency accumulation follows Brandes. Sources are processed in fixed
//! blocks; within a block they may run on any number of workers, and their contributions are
//! always added into the totals in ascending source order. The result is therefore identical
//! bit for bit whatever the worker count.

use std::cmp::Ordering;
use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{AsnId, EdgeId, PeeringGraph};

const SOURCE_BLOCK: usize = 64;

/// Centrality value per present edge.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeScore {
    scores: BTreeMap<EdgeId, f64>,
}

impl EdgeScore {
    pub fn get(&self, id: EdgeId) -> Option<f64> {
        self.scores.get(&id).copied()
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    /// Scores in ascending edge id order.
    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, f64)> + '_ {
        self.scores.iter().map(|(&e, &s)| (e, s))
    }

    pub fn total(&self) -> f64 {
        self.scores.values().sum()
    }

    /// Highest-scoring edge; equal scores go to the lowest edge id.
    pub fn argmax(&self) -> Option<(EdgeId, f64)> {
        self.iter().fold(None, |best, (e, s)| match best {
            Some((_, bs)) if s.total_cmp(&bs) != Ordering::Greater => best,
            _ => Some((e, s)),
        })
    }

    /// All edges by descending score, ties by ascending id.
    pub fn ranking(&self) -> Vec<(EdgeId, f64)> {
        let mut out: Vec<_> = self.iter().collect();
        out.sort_by(|x, y| y.1.total_cmp(&x.1).then(x.0.cmp(&y.0)));
        out
    }
}

struct Workspace {
    dist: Vec<usize>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    order: Vec<usize>,
    preds: Vec<Vec<(usize, EdgeId)>>,
    queue: VecDeque<usize>,
}

impl Workspace {
    fn new(n: usize) -> Self {
        Workspace {
            dist: vec![usize::MAX; n],
            sigma: vec![0.0; n],
            delta: vec![0.0; n],
            order: Vec::with_capacity(n),
            preds: vec![Vec::new(); n],
            queue: VecDeque::with_capacity(n),
        }
    }

    /// Dependency of `source` on every shortest-path DAG edge, one entry per edge.
    fn single_source(&mut self, graph: &PeeringGraph, source: usize) -> Vec<(EdgeId, f64)> {
        for &v in &self.order {
            self.dist[v] = usize::MAX;
            self.sigma[v] = 0.0;
            self.delta[v] = 0.0;
            self.preds[v].clear();
        }
        self.order.clear();

        self.dist[source] = 0;
        self.sigma[source] = 1.0;
        self.queue.push_back(source);
        while let Some(v) = self.queue.pop_front() {
            self.order.push(v);
            for &(w, e) in graph.adjacent(v) {
                if self.dist[w] == usize::MAX {
                    self.dist[w] = self.dist[v] + 1;
                    self.queue.push_back(w);
                }
                if self.dist[w] == self.dist[v] + 1 {
                    self.sigma[w] += self.sigma[v];
                    self.preds[w].push((v, e));
                }
            }
        }

        let mut out = Vec::new();
        for &w in self.order.iter().rev() {
            let coeff = (1.0 + self.delta[w]) / self.sigma[w];
            for &(v, e) in &self.preds[w] {
                let c = self.sigma[v] * coeff;
                out.push((e, c));
                self.delta[v] += c;
            }
        }
        out
    }
}

fn accumulate(graph: &PeeringGraph, parallel: bool) -> EdgeScore {
    let n = graph.node_count();
    let mut totals = vec![0.0_f64; graph.edge_id_bound()];
    let mut ws = Workspace::new(n);
    let mut start = 0;
    while start < n {
        let end = (start + SOURCE_BLOCK).min(n);
        let partials: Vec<Vec<(EdgeId, f64)>> = if parallel {
            (start..end)
                .into_par_iter()
                .map_init(|| Workspace::new(n), |ws, s| ws.single_source(graph, s))
                .collect()
        } else {
            (start..end).map(|s| ws.single_source(graph, s)).collect()
        };
        for part in partials {
            for (e, c) in part {
                totals[e.0] += c;
            }
        }
        start = end;
    }
    // every unordered pair was counted from both ends
    let scores = graph
        .edges()
        .map(|e| (e.id, totals[e.id.0] * 0.5))
        .collect();
    EdgeScore { scores }
}

/// Edge betweenness on the calling thread.
pub fn edge_betweenness(graph: &PeeringGraph) -> EdgeScore {
    accumulate(graph, false)
}

/// Edge betweenness on a dedicated pool of `workers` threads. `workers <= 1` runs inline.
pub fn edge_betweenness_with_workers(graph: &PeeringGraph, workers: usize) -> Result<EdgeScore> {
    if workers <= 1 {
        return Ok(edge_betweenness(graph));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::WorkerPool(e.to_string()))?;
    Ok(pool.install(|| accumulate(graph, true)))
}

/// Hop distance from node index `source` to every node; `None` when unreachable.
pub(crate) fn hop_distances(graph: &PeeringGraph, source: usize) -> Vec<Option<usize>> {
    multi_source_distances(graph, &[source])
}

/// Hop distance to the nearest of `sources`.
pub(crate) fn multi_source_distances(graph: &PeeringGraph, sources: &[usize]) -> Vec<Option<usize>> {
    let mut dist = vec![None; graph.node_count()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s].is_none() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap() + 1;
        for &(w, _) in graph.adjacent(v) {
            if dist[w].is_none() {
                dist[w] = Some(d);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Breadth-first hop distances from `source`. Unreachable nodes are absent.
pub fn bfs_levels(graph: &PeeringGraph, source: AsnId) -> Result<BTreeMap<AsnId, usize>> {
    let idx = graph.index_of(source).ok_or(Error::UnknownNode(source))?;
    Ok(hop_distances(graph, idx)
        .into_iter()
        .enumerate()
        .filter_map(|(i, d)| d.map(|d| (graph.asn_at(i), d)))
        .collect())
}
