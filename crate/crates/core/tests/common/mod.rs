//! Brute-force oracles shared by the integration suites. Nothing here calls the crate's BFS,
//! betweenness or metric code: distances come from Floyd–Warshall over the edge list and
//! betweenness from explicit enumeration of every shortest path.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::Path;

use backbone_siege::{generate, AsnId, EdgeId, PeeringGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const INF: usize = usize::MAX;

pub struct Dense {
    pub nodes: Vec<AsnId>,
    pub dist: Vec<Vec<usize>>,
    /// (u, v, edge id) per present edge, node indices into `nodes`
    pub edges: Vec<(usize, usize, EdgeId)>,
    pub providers: Vec<usize>,
}

pub fn dense(g: &PeeringGraph) -> Dense {
    let nodes: Vec<AsnId> = g.nodes().to_vec();
    let pos = |a: AsnId| nodes.iter().position(|&x| x == a).unwrap();
    let n = nodes.len();
    let mut dist = vec![vec![INF; n]; n];
    for (i, row) in dist.iter_mut().enumerate() {
        row[i] = 0;
    }
    let edges: Vec<_> = g.edges().map(|e| (pos(e.a), pos(e.b), e.id)).collect();
    for &(u, v, _) in &edges {
        dist[u][v] = 1;
        dist[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if dist[i][k] != INF && dist[k][j] != INF && dist[i][k] + dist[k][j] < dist[i][j] {
                    dist[i][j] = dist[i][k] + dist[k][j];
                }
            }
        }
    }
    let providers = g.providers().map(pos).collect();
    Dense {
        nodes,
        dist,
        edges,
        providers,
    }
}

/// Enumerates every shortest s–t path explicitly and splits each pair's unit weight evenly
/// across them.
pub fn brute_betweenness(g: &PeeringGraph) -> BTreeMap<EdgeId, f64> {
    let d = dense(g);
    let n = d.nodes.len();
    let mut adj: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
    for &(u, v, e) in &d.edges {
        adj[u].push((v, e));
        adj[v].push((u, e));
    }
    let mut score: BTreeMap<EdgeId, f64> = d.edges.iter().map(|&(_, _, e)| (e, 0.0)).collect();
    for s in 0..n {
        for t in s + 1..n {
            if d.dist[s][t] == INF {
                continue;
            }
            let mut paths: Vec<Vec<EdgeId>> = Vec::new();
            let mut stack = vec![(s, Vec::new())];
            while let Some((u, path)) = stack.pop() {
                if u == t {
                    paths.push(path);
                    continue;
                }
                for &(w, e) in &adj[u] {
                    if d.dist[s][w] == d.dist[s][u] + 1 && d.dist[w][t] != INF && d.dist[w][t] + 1 == d.dist[u][t] {
                        let mut p = path.clone();
                        p.push(e);
                        stack.push((w, p));
                    }
                }
            }
            let share = 1.0 / paths.len() as f64;
            for p in &paths {
                for e in p {
                    *score.get_mut(e).unwrap() += share;
                }
            }
        }
    }
    score
}

/// Σ over connected unordered pairs of their hop distance.
pub fn distance_sum(g: &PeeringGraph) -> f64 {
    let d = dense(g);
    let n = d.nodes.len();
    let mut total = 0usize;
    for s in 0..n {
        for t in s + 1..n {
            if d.dist[s][t] != INF {
                total += d.dist[s][t];
            }
        }
    }
    total as f64
}

pub struct OracleGo {
    pub sar: f64,
    pub netcon: usize,
    pub netcon_fraction: f64,
    pub bde: f64,
    pub ade: f64,
}

/// Supply metrics straight from the all-pairs distance matrix.
pub fn oracle_go(g: &PeeringGraph) -> OracleGo {
    let d = dense(g);
    let n = d.nodes.len();
    let demand: Vec<usize> = (0..n).filter(|v| !d.providers.contains(v)).collect();
    let nearest = |v: usize| d.providers.iter().map(|&p| d.dist[v][p]).min().unwrap();

    let reached: Vec<usize> = demand.iter().map(|&v| nearest(v)).filter(|&x| x != INF).collect();
    let sar = reached.len() as f64 / demand.len() as f64;
    let bde = if reached.is_empty() {
        0.0
    } else {
        1.0 / (reached.iter().sum::<usize>() as f64 / reached.len() as f64)
    };
    let netcon = d
        .providers
        .iter()
        .map(|&p| (0..n).filter(|&v| d.dist[p][v] != INF).count())
        .max()
        .unwrap();
    let mut ade = 0.0;
    for &v in &demand {
        for &p in &d.providers {
            if d.dist[v][p] != INF {
                ade += 1.0 / d.dist[v][p] as f64;
            }
        }
    }
    ade /= demand.len() as f64;
    OracleGo {
        sar,
        netcon,
        netcon_fraction: netcon as f64 / n as f64,
        bde,
        ade,
    }
}

pub fn oracle_lcc_fraction(g: &PeeringGraph) -> f64 {
    let d = dense(g);
    let n = d.nodes.len();
    let best = (0..n)
        .map(|s| (0..n).filter(|&t| d.dist[s][t] != INF).count())
        .max()
        .unwrap();
    best as f64 / n as f64
}

/// 200 G(n, 0.4) graphs with 2..=10 nodes, each with one or two providers.
pub fn corpus() -> Vec<PeeringGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..200)
        .map(|i| {
            let n = rng.gen_range(2..=10);
            let g = generate::erdos_renyi(n, 0.4, 1000 + i);
            let p1 = rng.gen_range(1..=n as u32);
            let mut providers = vec![AsnId::new(p1).unwrap()];
            if n > 2 && rng.gen_bool(0.5) {
                let p2 = rng.gen_range(1..=n as u32);
                providers.push(AsnId::new(p2).unwrap());
            }
            g.with_providers(providers).unwrap()
        })
        .collect()
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

pub fn write(path: &Path, body: &str) {
    std::fs::write(path, body).unwrap();
}

/// Writes the four record files into `dir`.
pub fn write_records(dir: &Path, ixp: &str, facility: &str, links: &str, providers: &str) {
    write(&dir.join("ixp.csv"), &format!("asn,ixp_id\n{ixp}"));
    write(&dir.join("facility.csv"), &format!("asn,facility_id\n{facility}"));
    write(&dir.join("links.csv"), &format!("asn_a,asn_b\n{links}"));
    write(&dir.join("providers.csv"), &format!("asn\n{providers}"));
}

/// Record files describing `g` entirely through direct links.
pub fn write_graph_records(dir: &Path, g: &PeeringGraph) {
    let links: String = g.edges().map(|e| format!("{},{}\n", e.a, e.b)).collect();
    let providers: String = g.providers().map(|p| format!("{p}\n")).collect();
    write_records(dir, "", "", &links, &providers);
}
