//! Undirected peering graph over autonomous systems.
//!
//! A [`PeeringGraph`] is a simple graph: at most one edge record per unordered AS pair,
//! carrying the set of rules ([`EdgeLabel`]) that produced it. Edge identifiers are assigned
//! once, densely, in ascending `(endpoint_a, endpoint_b)` order, and survive edge removal, so
//! an attack trace can always refer back to the original edge.
//!
//! Graphs behave as values. [`PeeringGraph::remove_edge`] returns a new graph and keeps every
//! node, including ones left isolated.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Autonomous system number. Always positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AsnId(u32);

impl AsnId {
    pub fn new(value: u32) -> Result<Self> {
        if value == 0 {
            return Err(Error::InvalidAsn(0));
        }
        Ok(AsnId(value))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<i64> for AsnId {
    type Error = Error;

    fn try_from(value: i64) -> Result<Self> {
        match u32::try_from(value) {
            Ok(v) if v > 0 => Ok(AsnId(v)),
            _ => Err(Error::InvalidAsn(value)),
        }
    }
}

impl fmt::Display for AsnId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Stable identifier of an edge record within one graph lineage.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The rule that connected two ASs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeLabel {
    /// Both ASs are members of the same IXP.
    PublicPeering,
    /// Both ASs are present in the same facility.
    PrivatePeering,
    /// The ASs are physically linked.
    DirectLink,
}

impl EdgeLabel {
    pub const ALL: [EdgeLabel; 3] = [
        EdgeLabel::PublicPeering,
        EdgeLabel::PrivatePeering,
        EdgeLabel::DirectLink,
    ];

    fn bit(self) -> u8 {
        match self {
            EdgeLabel::PublicPeering => 0b001,
            EdgeLabel::PrivatePeering => 0b010,
            EdgeLabel::DirectLink => 0b100,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EdgeLabel::PublicPeering => "public",
            EdgeLabel::PrivatePeering => "private",
            EdgeLabel::DirectLink => "direct",
        }
    }
}

/// Non-empty set of labels attached to one edge record.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeLabels(u8);

impl EdgeLabels {
    pub fn single(label: EdgeLabel) -> Self {
        EdgeLabels(label.bit())
    }

    pub fn insert(&mut self, label: EdgeLabel) {
        self.0 |= label.bit();
    }

    pub fn contains(self, label: EdgeLabel) -> bool {
        self.0 & label.bit() != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = EdgeLabel> {
        EdgeLabel::ALL.into_iter().filter(move |l| self.contains(*l))
    }
}

impl fmt::Debug for EdgeLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeRecord {
    pub id: EdgeId,
    /// Smaller endpoint.
    pub a: AsnId,
    /// Larger endpoint.
    pub b: AsnId,
    pub labels: EdgeLabels,
}

#[derive(Debug)]
struct Topology {
    nodes: Vec<AsnId>,
    index: BTreeMap<AsnId, usize>,
    edges: Vec<EdgeRecord>,
    endpoints: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct PeeringGraph {
    topo: Arc<Topology>,
    alive: Vec<bool>,
    live_edges: usize,
    // neighbor node index and connecting edge, sorted by neighbor index
    adjacency: Vec<Vec<(usize, EdgeId)>>,
    providers: Vec<usize>,
}

impl PeeringGraph {
    /// Builds a graph from a node set, labeled links and a provider set.
    ///
    /// Link endpoints are added to the node set. Links between the same unordered pair are
    /// merged into one record with the union of their labels.
    pub fn new(
        nodes: impl IntoIterator<Item = AsnId>,
        links: impl IntoIterator<Item = (AsnId, AsnId, EdgeLabel)>,
        providers: impl IntoIterator<Item = AsnId>,
    ) -> Result<Self> {
        let mut node_set: BTreeSet<AsnId> = nodes.into_iter().collect();
        let mut pairs: BTreeMap<(AsnId, AsnId), EdgeLabels> = BTreeMap::new();
        for (x, y, label) in links {
            if x == y {
                return Err(Error::SelfLoop(x));
            }
            let key = if x < y { (x, y) } else { (y, x) };
            node_set.insert(x);
            node_set.insert(y);
            pairs
                .entry(key)
                .and_modify(|l| l.insert(label))
                .or_insert_with(|| EdgeLabels::single(label));
        }

        let nodes: Vec<AsnId> = node_set.into_iter().collect();
        let index: BTreeMap<AsnId, usize> =
            nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
        let mut edges = Vec::with_capacity(pairs.len());
        let mut endpoints = Vec::with_capacity(pairs.len());
        let mut adjacency = vec![Vec::new(); nodes.len()];
        for (i, ((a, b), labels)) in pairs.into_iter().enumerate() {
            let id = EdgeId(i);
            let (ia, ib) = (index[&a], index[&b]);
            edges.push(EdgeRecord { id, a, b, labels });
            endpoints.push((ia, ib));
            adjacency[ia].push((ib, id));
            adjacency[ib].push((ia, id));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        let topo = Topology {
            nodes,
            index,
            edges,
            endpoints,
        };
        let live_edges = topo.edges.len();
        let mut graph = PeeringGraph {
            alive: vec![true; live_edges],
            live_edges,
            adjacency,
            providers: Vec::new(),
            topo: Arc::new(topo),
        };
        graph.providers = graph.resolve_providers(providers)?;
        Ok(graph)
    }

    fn resolve_providers(&self, providers: impl IntoIterator<Item = AsnId>) -> Result<Vec<usize>> {
        let mut out = providers
            .into_iter()
            .map(|p| self.index_of(p).ok_or(Error::UnknownProvider(p)))
            .collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Returns the same graph with a replaced provider set.
    pub fn with_providers(&self, providers: impl IntoIterator<Item = AsnId>) -> Result<Self> {
        let providers = self.resolve_providers(providers)?;
        Ok(PeeringGraph {
            providers,
            ..self.clone()
        })
    }

    pub fn node_count(&self) -> usize {
        self.topo.nodes.len()
    }

    /// Number of edges still present.
    pub fn edge_count(&self) -> usize {
        self.live_edges
    }

    /// Nodes in ascending ASN order.
    pub fn nodes(&self) -> &[AsnId] {
        &self.topo.nodes
    }

    /// Present edges in ascending id order.
    pub fn edges(&self) -> impl Iterator<Item = &EdgeRecord> + '_ {
        self.topo
            .edges
            .iter()
            .filter(move |e| self.alive[e.id.0])
    }

    pub fn edge(&self, id: EdgeId) -> Option<&EdgeRecord> {
        match self.alive.get(id.0) {
            Some(true) => Some(&self.topo.edges[id.0]),
            _ => None,
        }
    }

    pub fn contains(&self, asn: AsnId) -> bool {
        self.topo.index.contains_key(&asn)
    }

    pub fn providers(&self) -> impl ExactSizeIterator<Item = AsnId> + '_ {
        self.providers.iter().map(move |&i| self.topo.nodes[i])
    }

    pub fn provider_count(&self) -> usize {
        self.providers.len()
    }

    pub fn is_provider(&self, asn: AsnId) -> bool {
        self.index_of(asn)
            .is_some_and(|i| self.providers.binary_search(&i).is_ok())
    }

    pub fn degree(&self, asn: AsnId) -> Option<usize> {
        self.index_of(asn).map(|i| self.adjacency[i].len())
    }

    /// Neighbors of `asn` in ascending order.
    pub fn neighbors(&self, asn: AsnId) -> Option<impl Iterator<Item = AsnId> + '_> {
        let i = self.index_of(asn)?;
        Some(self.adjacency[i].iter().map(move |&(j, _)| self.topo.nodes[j]))
    }

    pub(crate) fn index_of(&self, asn: AsnId) -> Option<usize> {
        self.topo.index.get(&asn).copied()
    }

    pub(crate) fn asn_at(&self, idx: usize) -> AsnId {
        self.topo.nodes[idx]
    }

    pub(crate) fn adjacent(&self, idx: usize) -> &[(usize, EdgeId)] {
        &self.adjacency[idx]
    }

    pub(crate) fn provider_indices(&self) -> &[usize] {
        &self.providers
    }

    /// Size of the edge id space, including removed edges.
    pub(crate) fn edge_id_bound(&self) -> usize {
        self.topo.edges.len()
    }

    /// Returns a graph without edge `id`. Every node is kept.
    pub fn remove_edge(&self, id: EdgeId) -> Result<Self> {
        let mut next = self.clone();
        next.remove_edge_in_place(id)?;
        Ok(next)
    }

    pub(crate) fn remove_edge_in_place(&mut self, id: EdgeId) -> Result<()> {
        if self.edge(id).is_none() {
            return Err(Error::NoSuchEdge(id));
        }
        let (ia, ib) = self.topo.endpoints[id.0];
        self.alive[id.0] = false;
        self.live_edges -= 1;
        self.adjacency[ia].retain(|&(_, e)| e != id);
        self.adjacency[ib].retain(|&(_, e)| e != id);
        Ok(())
    }

    /// Component id per node index; ids are assigned in order of each component's smallest node.
    pub(crate) fn component_ids(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.node_count();
        let mut comp = vec![usize::MAX; n];
        let mut sizes = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            comp[start] = id;
            queue.push_back(start);
            let mut size = 0;
            while let Some(v) = queue.pop_front() {
                size += 1;
                for &(w, _) in &self.adjacency[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        queue.push_back(w);
                    }
                }
            }
            sizes.push(size);
        }
        (comp, sizes)
    }

    /// Partition of the nodes into connected components, largest first, ties by smallest ASN.
    /// Each component lists its nodes in ascending order.
    pub fn connected_components(&self) -> Vec<Vec<AsnId>> {
        let (comp, sizes) = self.component_ids();
        let mut groups: Vec<Vec<AsnId>> = sizes.iter().map(|&s| Vec::with_capacity(s)).collect();
        for (idx, &c) in comp.iter().enumerate() {
            groups[c].push(self.topo.nodes[idx]);
        }
        groups.sort_by(|x, y| y.len().cmp(&x.len()).then(x[0].cmp(&y[0])));
        groups
    }

    pub(crate) fn largest_component_size(&self) -> usize {
        self.component_ids().1.into_iter().max().unwrap_or(0)
    }

    /// Fraction of all nodes that sit in the largest connected component.
    pub fn largest_component_fraction(&self) -> Result<f64> {
        if self.node_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(self.largest_component_size() as f64 / self.node_count() as f64)
    }

    /// Histogram of node degrees. Multi-labeled edges count once.
    pub fn degree_distribution(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for list in &self.adjacency {
            *hist.entry(list.len()).or_insert(0) += 1;
        }
        hist
    }

    /// Number of present edges carrying each label.
    pub fn label_counts(&self) -> BTreeMap<EdgeLabel, usize> {
        let mut counts: BTreeMap<EdgeLabel, usize> =
            EdgeLabel::ALL.into_iter().map(|l| (l, 0)).collect();
        for e in self.edges() {
            for l in e.labels.iter() {
                *counts.get_mut(&l).unwrap() += 1;
            }
        }
        counts
    }
}

impl PartialEq for PeeringGraph {
    fn eq(&self, other: &Self) -> bool {
        self.nodes() == other.nodes()
            && self.edges().eq(other.edges())
            && self.providers == other.providers
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn asn(v: u32) -> AsnId {
        AsnId::new(v).unwrap()
    }

    fn plain(nodes: &[u32], edges: &[(u32, u32)]) -> PeeringGraph {
        PeeringGraph::new(
            nodes.iter().map(|&n| asn(n)),
            edges
                .iter()
                .map(|&(a, b)| (asn(a), asn(b), EdgeLabel::DirectLink)),
            [],
        )
        .unwrap()
    }

    #[test]
    fn asn_must_be_positive() {
        assert!(AsnId::new(0).is_err());
        assert!(AsnId::try_from(-3_i64).is_err());
        assert!(AsnId::try_from(1_i64 << 40).is_err());
        assert_eq!(AsnId::try_from(15169_i64).unwrap().get(), 15169);
    }

    #[test]
    fn edges_are_canonical_and_dense() {
        let g = plain(&[], &[(3, 1), (2, 1), (3, 2), (1, 3)]);
        let recs: Vec<_> = g.edges().map(|e| (e.id.0, e.a.get(), e.b.get())).collect();
        assert_eq!(recs, vec![(0, 1, 2), (1, 1, 3), (2, 2, 3)]);
    }

    #[test]
    fn labels_merge_into_one_record() {
        let g = PeeringGraph::new(
            [],
            [
                (asn(1), asn(2), EdgeLabel::PublicPeering),
                (asn(2), asn(1), EdgeLabel::PrivatePeering),
            ],
            [],
        )
        .unwrap();
        assert_eq!(g.edge_count(), 1);
        let e = g.edge(EdgeId(0)).unwrap();
        assert_eq!(e.labels.len(), 2);
        assert!(e.labels.contains(EdgeLabel::PublicPeering));
        assert!(!e.labels.contains(EdgeLabel::DirectLink));
        assert_eq!(g.degree(asn(1)), Some(1));
    }

    #[test]
    fn self_loop_rejected() {
        let err = PeeringGraph::new([], [(asn(4), asn(4), EdgeLabel::DirectLink)], []);
        assert!(matches!(err, Err(Error::SelfLoop(_))));
    }

    #[test]
    fn provider_must_be_node() {
        let err = PeeringGraph::new([asn(1)], [], [asn(2)]);
        assert!(matches!(err, Err(Error::UnknownProvider(_))));
    }

    #[test]
    fn components_of_empty_graph() {
        assert!(plain(&[], &[]).connected_components().is_empty());
    }

    #[test]
    fn components_of_path() {
        let g = plain(&[], &[(1, 2), (2, 3)]);
        assert_eq!(g.connected_components(), vec![vec![asn(1), asn(2), asn(3)]]);
    }

    #[test]
    fn components_sorted_by_size_then_smallest() {
        let g = plain(&[1, 2, 3, 4], &[(1, 2)]);
        assert_eq!(
            g.connected_components(),
            vec![vec![asn(1), asn(2)], vec![asn(3)], vec![asn(4)]]
        );
        let g = plain(&[1, 2, 3, 4, 5], &[(4, 5), (2, 3), (3, 5)]);
        assert_eq!(
            g.connected_components(),
            vec![vec![asn(2), asn(3), asn(4), asn(5)], vec![asn(1)]]
        );
    }

    #[test]
    fn lcc_fraction_examples() {
        assert_eq!(plain(&[7], &[]).largest_component_fraction().unwrap(), 1.0);
        assert_eq!(plain(&[1, 2, 3, 4], &[(1, 2)]).largest_component_fraction().unwrap(), 0.5);
        let k5: Vec<_> = (1..=5).flat_map(|a| (a + 1..=5).map(move |b| (a, b))).collect();
        assert_eq!(plain(&[], &k5).largest_component_fraction().unwrap(), 1.0);
        assert!(matches!(
            plain(&[], &[]).largest_component_fraction(),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn degree_distribution_examples() {
        assert_eq!(plain(&[1, 2, 3], &[]).degree_distribution(), BTreeMap::from([(0, 3)]));
        assert_eq!(
            plain(&[], &[(1, 2), (2, 3)]).degree_distribution(),
            BTreeMap::from([(1, 2), (2, 1)])
        );
        assert_eq!(
            plain(&[], &[(1, 2), (1, 3), (1, 4), (1, 5)]).degree_distribution(),
            BTreeMap::from([(1, 4), (4, 1)])
        );
    }

    #[test]
    fn remove_bridge_splits_path() {
        let g = plain(&[], &[(1, 2), (2, 3)]);
        let h = g.remove_edge(EdgeId(0)).unwrap();
        assert_eq!(h.connected_components(), vec![vec![asn(2), asn(3)], vec![asn(1)]]);
        // the original value is untouched
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.connected_components().len(), 1);
        assert_eq!(h.node_count(), 3);
        assert!(h.edge(EdgeId(0)).is_none());
        assert_eq!(h.edge(EdgeId(1)).unwrap().a, asn(2));
    }

    #[test]
    fn remove_from_triangle_keeps_it_connected() {
        let g = plain(&[], &[(1, 2), (2, 3), (1, 3)]);
        for id in 0..3 {
            let h = g.remove_edge(EdgeId(id)).unwrap();
            assert_eq!(h.connected_components().len(), 1);
        }
    }

    #[test]
    fn remove_unknown_edge() {
        let g = plain(&[], &[(1, 2), (2, 3), (1, 3)]);
        let err = g.remove_edge(EdgeId(99)).unwrap_err();
        assert_eq!(err.to_string(), "no such edge: 99");
        let h = g.remove_edge(EdgeId(1)).unwrap();
        assert!(matches!(h.remove_edge(EdgeId(1)), Err(Error::NoSuchEdge(_))));
    }

    fn arb_graph() -> impl Strategy<Value = PeeringGraph> {
        (1u32..12).prop_flat_map(|n| {
            proptest::collection::vec((1..=n, 1..=n), 0..30).prop_map(move |pairs| {
                let links = pairs
                    .into_iter()
                    .filter(|(a, b)| a != b)
                    .map(|(a, b)| (asn(a), asn(b), EdgeLabel::DirectLink));
                PeeringGraph::new((1..=n).map(asn), links, []).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn removal_never_grows_lcc(g in arb_graph(), pick in any::<prop::sample::Index>()) {
            prop_assume!(g.edge_count() > 0);
            let ids: Vec<_> = g.edges().map(|e| e.id).collect();
            let h = g.remove_edge(*pick.get(&ids)).unwrap();
            prop_assert!(h.largest_component_fraction().unwrap() <= g.largest_component_fraction().unwrap());
            prop_assert_eq!(h.node_count(), g.node_count());
            prop_assert_eq!(h.edge_count() + 1, g.edge_count());
        }

        #[test]
        fn components_partition_nodes(g in arb_graph()) {
            let comps = g.connected_components();
            let mut all: Vec<AsnId> = comps.iter().flatten().copied().collect();
            all.sort();
            prop_assert_eq!(&all[..], g.nodes());
            for w in comps.windows(2) {
                prop_assert!(w[0].len() > w[1].len() || (w[0].len() == w[1].len() && w[0][0] < w[1][0]));
            }
            // endpoints of every edge share a component
            for e in g.edges() {
                prop_assert!(comps.iter().any(|c| c.contains(&e.a) && c.contains(&e.b)));
            }
        }

        #[test]
        fn degree_histogram_sums(g in arb_graph()) {
            let hist = g.degree_distribution();
            prop_assert_eq!(hist.values().sum::<usize>(), g.node_count());
            prop_assert_eq!(hist.iter().map(|(d, c)| d * c).sum::<usize>(), 2 * g.edge_count());
        }
    }
}
