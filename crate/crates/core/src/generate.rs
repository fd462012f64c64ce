//! Seeded synthetic topologies for experiments and tests. Nodes are numbered `1..=n` and every
//! edge is labeled as a direct link. Generated graphs have no providers; attach some with
//! [`PeeringGraph::with_providers`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{AsnId, EdgeLabel, PeeringGraph};

fn asn(i: usize) -> AsnId {
    AsnId::new(u32::try_from(i).expect("node count fits in u32")).expect("ids start at 1")
}

fn assemble(n: usize, pairs: Vec<(usize, usize)>) -> PeeringGraph {
    PeeringGraph::new(
        (1..=n).map(asn),
        pairs
            .into_iter()
            .map(|(a, b)| (asn(a), asn(b), EdgeLabel::DirectLink)),
        [],
    )
    .expect("generated pairs are valid")
}

/// Preferential-attachment graph: a clique on `m + 1` seed nodes, then each new node links to
/// `m` distinct existing nodes picked with probability proportional to their degree.
///
/// # Panics
/// If `m == 0` or `n < m + 1`.
pub fn preferential_attachment(n: usize, m: usize, seed: u64) -> PeeringGraph {
    assert!(m >= 1, "each new node needs at least one edge");
    assert!(n > m, "need more than m nodes");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity((n - m) * m + m * (m + 1) / 2);
    // each node appears once per incident edge end
    let mut ends: Vec<usize> = Vec::new();
    for a in 1..=m + 1 {
        for b in a + 1..=m + 1 {
            pairs.push((a, b));
            ends.extend([a, b]);
        }
    }
    let mut targets = Vec::with_capacity(m);
    for v in m + 2..=n {
        targets.clear();
        while targets.len() < m {
            let t = ends[rng.gen_range(0..ends.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            pairs.push((t, v));
            ends.extend([t, v]);
        }
    }
    assemble(n, pairs)
}

/// G(n, p) random graph: each of the `n(n-1)/2` pairs is an edge with probability `p`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> PeeringGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.gen_bool(p) {
                pairs.push((a, b));
            }
        }
    }
    assemble(n, pairs)
}
