//! Immutable simple undirected graphs, vertex sets and the neighborhood algebra
//! the solver is built on.
//!
//! Vertices are dense ids `0..n`. Every [`VertexSet`] is a bitset sized to its
//! host graph, so subsets of the host can be combined without id translation.
//! Adjacency is kept twice: as sorted neighbor lists for ordered iteration and
//! as bitset rows for set algebra.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({v}, {v}) is a self-loop")]
    SelfLoop { v: usize },
    #[error("vertex {v} is not in a graph with {n} vertices")]
    UnknownVertex { v: usize, n: usize },
    #[error("vertex set of capacity {got} does not belong to a graph with {n} vertices")]
    ForeignSet { got: usize, n: usize },
    #[error("weight map has {got} entries, graph has {n} vertices")]
    WeightLength { got: usize, n: usize },
}

/// A set of vertex ids of one host graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(capacity: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(capacity),
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(capacity: usize, ids: I) -> Self {
        let mut set = Self::empty(capacity);
        for v in ids {
            set.insert(v);
        }
        set
    }

    pub fn singleton(capacity: usize, v: usize) -> Self {
        Self::from_ids(capacity, [v])
    }

    /// Size of the host id space, not the number of members.
    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    /// Panics if `v` is outside the capacity.
    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.bits.len() {
            self.bits.set(v, false);
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.ones().next()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.bits.union_with(&other.bits);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.bits.intersect_with(&other.bits);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.bits.difference_with(&other.bits);
        out
    }

    /// All host ids not in `self`.
    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        out.bits.toggle_range(..);
        out
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Non-negative integer vertex weights, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMap(Vec<u64>);

impl WeightMap {
    pub fn new(weights: Vec<u64>) -> Self {
        WeightMap(weights)
    }

    pub fn unit(n: usize) -> Self {
        WeightMap(vec![1; n])
    }

    pub fn get(&self, v: usize) -> u64 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn check(&self, g: &Graph) -> Result<(), GraphError> {
        if self.0.len() != g.vertex_count() {
            return Err(GraphError::WeightLength {
                got: self.0.len(),
                n: g.vertex_count(),
            });
        }
        Ok(())
    }
}

/// A proper 2-coloring of an induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

/// Outcome of a bipartiteness test: a 2-coloring, or an odd cycle listed in
/// traversal order (consecutive entries adjacent, last adjacent to first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartiteCheck {
    Bipartite(Bipartition),
    OddCycle(Vec<usize>),
}

impl BipartiteCheck {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, BipartiteCheck::Bipartite(_))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<VertexSet>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph on `0..n`. Duplicate edges collapse; self-loops and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut rows = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    fn from_rows(rows: Vec<VertexSet>) -> Graph {
        let adj: Vec<Vec<usize>> = rows.iter().map(VertexSet::to_vec).collect();
        let degree_sum: usize = adj.iter().map(Vec::len).sum();
        Graph {
            adj,
            rows,
            edge_count: degree_sum / 2,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.vertex_count())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor ids of `v`.
    pub fn neighbor_list(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// N(v) as a bitset row. Panics on an unknown id; see [`Graph::neighborhood`].
    pub fn row(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.vertex_count() {
            return Err(GraphError::UnknownVertex {
                v,
                n: self.vertex_count(),
            });
        }
        Ok(())
    }

    fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        if s.capacity() != self.vertex_count() {
            return Err(GraphError::ForeignSet {
                got: s.capacity(),
                n: self.vertex_count(),
            });
        }
        Ok(())
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.rows[v].clone())
    }

    /// A(v): every vertex other than `v` that is not adjacent to `v`.
    pub fn anti_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        let mut out = self.rows[v].complement();
        out.remove(v);
        Ok(out)
    }

    /// N(v) restricted to `within`.
    pub fn neighbors_in(&self, v: usize, within: &VertexSet) -> VertexSet {
        self.rows[v].intersection(within)
    }

    /// A(v) restricted to `within`.
    pub fn anti_neighbors_in(&self, v: usize, within: &VertexSet) -> VertexSet {
        let mut out = within.difference(&self.rows[v]);
        out.remove(v);
        out
    }

    /// Union of N(v) over `set`.
    pub fn neighborhood_of_set(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in set.iter() {
            out.union_with(&self.rows[v]);
        }
        out
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        self.check_set(s)?;
        let to_parent = s.to_vec();
        let mut from_parent = vec![None; self.vertex_count()];
        for (i, &v) in to_parent.iter().enumerate() {
            from_parent[v] = Some(i);
        }
        let k = to_parent.len();
        let rows = to_parent
            .iter()
            .map(|&v| VertexSet::from_ids(k, self.adj[v].iter().filter_map(|&u| from_parent[u])))
            .collect();
        Ok(InducedSubgraph {
            graph: Graph::from_rows(rows),
            to_parent,
            from_parent,
        })
    }

    /// Connected components of G, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.all())
    }

    /// Connected components of G[s], ordered by their smallest vertex.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut unseen = s.clone();
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let comp = self.reach(start, &unseen);
            unseen.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices of `within` reachable from `start` inside G[within].
    pub fn reach(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(self.vertex_count(), start);
        let mut frontier = seen.clone();
        loop {
            let mut next = self.neighborhood_of_set(&frontier);
            next.intersect_with(within);
            next.difference_with(&seen);
            if next.is_empty() {
                return seen;
            }
            seen.union_with(&next);
            frontier = next;
        }
    }

    pub fn is_connected_within(&self, s: &VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.reach(v, s).len() == s.len(),
        }
    }

    /// 2-colors G[s] by BFS from the smallest vertex of each component; side A
    /// holds the even-depth vertices. On failure returns an odd cycle.
    pub fn bipartition(&self, s: &VertexSet) -> BipartiteCheck {
        let n = self.vertex_count();
        let mut depth: Vec<Option<usize>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut side_a = self.empty_set();
        let mut side_b = self.empty_set();
        for root in s.iter() {
            if depth[root].is_some() {
                continue;
            }
            depth[root] = Some(0);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let du = depth[u].unwrap_or_default();
                if du.is_multiple_of(2) {
                    side_a.insert(u);
                } else {
                    side_b.insert(u);
                }
                for &v in &self.adj[u] {
                    if !s.contains(v) {
                        continue;
                    }
                    match depth[v] {
                        None => {
                            depth[v] = Some(du + 1);
                            parent[v] = u;
                            queue.push_back(v);
                        }
                        Some(dv) if dv % 2 == du % 2 => {
                            return BipartiteCheck::OddCycle(odd_cycle(u, v, &depth, &parent));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        BipartiteCheck::Bipartite(Bipartition { side_a, side_b })
    }

    pub fn is_bipartite_within(&self, s: &VertexSet) -> bool {
        self.bipartition(s).is_bipartite()
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.rows[v].is_disjoint(s))
    }

    /// Number of edges with one endpoint in `a` and the other in `b`.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|v| self.rows[v].intersection_len(b)).sum()
    }
}

/// Closes the BFS-tree paths from `u` and `v` (same depth parity, adjacent)
/// into an odd cycle.
fn odd_cycle(u: usize, v: usize, depth: &[Option<usize>], parent: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    let d = |x: usize| depth[x].unwrap_or_default();
    while d(a) > d(b) {
        a = parent[a];
        left.push(a);
    }
    while d(b) > d(a) {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

pub fn set_weight(w: &WeightMap, s: &VertexSet) -> u64 {
    s.iter().map(|v| w.get(v)).sum()
}

/// An induced subgraph together with its vertex map into the parent.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// Child id -> parent id.
    pub to_parent: Vec<usize>,
    /// Parent id -> child id, `None` for vertices outside the subgraph.
    pub from_parent: Vec<Option<usize>>,
}

impl InducedSubgraph {
    pub fn lift(&self, child: &VertexSet) -> VertexSet {
        VertexSet::from_ids(
            self.from_parent.len(),
            child.iter().map(|v| self.to_parent[v]),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, ids.iter().copied())
    }

    #[test]
    fn build_basics() {
        let g = Graph::new(0, &[]).unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert!(g.components().is_empty());

        let c5 = cycle(5);
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));
        assert_eq!(c5.edge_count(), 5);

        let g = Graph::new(3, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::EndpointOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(2, 2)]), Err(GraphError::SelfLoop { v: 2 }));
    }

    #[test]
    fn neighborhoods() {
        let c5 = cycle(5);
        assert_eq!(c5.neighborhood(0).unwrap(), set(5, &[1, 4]));
        assert_eq!(c5.anti_neighborhood(0).unwrap(), set(5, &[2, 3]));
        assert!(c5.neighborhood(5).is_err());

        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(g.neighborhood(2).unwrap().is_empty());
        assert_eq!(g.anti_neighborhood(2).unwrap(), set(3, &[0, 1]));

        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(k3
            .vertices()
            .all(|v| k3.anti_neighborhood(v).unwrap().is_empty()));
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle(5);
        let sub = c5.induced_subgraph(&set(5, &[1, 2, 3])).unwrap();
        assert_eq!(sub.graph.edge_count(), 2);
        assert_eq!(sub.graph.degree(1), 2);
        assert_eq!(sub.to_parent, vec![1, 2, 3]);
        assert_eq!(sub.lift(&set(3, &[0, 2])), set(5, &[1, 3]));

        let empty = c5.induced_subgraph(&c5.empty_set()).unwrap();
        assert_eq!(empty.graph.vertex_count(), 0);

        let pair = c5.induced_subgraph(&set(5, &[0, 2])).unwrap();
        assert_eq!(pair.graph.edge_count(), 0);

        assert!(c5.induced_subgraph(&VertexSet::empty(4)).is_err());
    }

    #[test]
    fn components_are_ordered() {
        let g = Graph::new(4, &[(2, 3), (0, 1)]).unwrap();
        assert_eq!(g.components(), vec![set(4, &[0, 1]), set(4, &[2, 3])]);
        assert_eq!(cycle(5).components().len(), 1);
    }

    #[test]
    fn bipartition_cases() {
        match cycle(4).bipartition(&VertexSet::full(4)) {
            BipartiteCheck::Bipartite(b) => {
                assert_eq!(b.side_a, set(4, &[0, 2]));
                assert_eq!(b.side_b, set(4, &[1, 3]));
            }
            other => panic!("{other:?}"),
        }
        match cycle(5).bipartition(&VertexSet::full(5)) {
            BipartiteCheck::OddCycle(c) => assert_eq!(c.len(), 5),
            other => panic!("{other:?}"),
        }
        let g = Graph::new(3, &[]).unwrap();
        match g.bipartition(&g.all()) {
            BipartiteCheck::Bipartite(b) => assert_eq!(b.side_a.len(), 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn independence_and_weight() {
        let c5 = cycle(5);
        let w = WeightMap::unit(5);
        assert!(c5.is_independent(&set(5, &[0, 2])));
        assert_eq!(set_weight(&w, &set(5, &[0, 2])), 2);
        assert!(!c5.is_independent(&set(5, &[0, 1])));
        assert!(c5.is_independent(&c5.empty_set()));
        assert_eq!(set_weight(&w, &c5.empty_set()), 0);
    }
}
