//! Exact maximum weight independent set on bipartite induced subgraphs.
//!
//! A minimum weight vertex cover of a bipartite graph is a minimum s-t cut in
//! the network source -> A (capacity w), A -> B (capacity "infinite"),
//! B -> sink (capacity w). The independent set is the complement of the cover:
//! side-A vertices still reachable from the source in the residual network
//! plus side-B vertices that are not.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{BipartiteCheck, Bipartition, Graph, VertexSet, WeightMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BipartiteError {
    #[error("vertex set is not bipartite; odd cycle {0:?}")]
    NotBipartite(Vec<usize>),
    #[error("total weight does not fit the flow capacities")]
    WeightOverflow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteSolution {
    pub weight: u64,
    pub witness: VertexSet,
    /// Weight of a minimum vertex cover of G[s]; equals the max-flow value.
    pub cover_weight: u64,
    pub bipartition: Bipartition,
}

impl BipartiteSolution {
    /// The vertex cover the witness is the complement of (within `s`).
    pub fn vertex_cover(&self, s: &VertexSet) -> VertexSet {
        s.difference(&self.witness)
    }
}

#[derive(Debug, Clone, Copy)]
struct Arc {
    to: usize,
    cap: u64,
}

/// Integral flow network solved with Dinic's algorithm.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
            source,
            sink,
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: u64) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    fn levels(&self) -> Option<Vec<u32>> {
        let mut level = vec![u32::MAX; self.out.len()];
        level[self.source] = 0;
        let mut queue = VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.out[u] {
                let arc = self.arcs[a];
                if arc.cap > 0 && level[arc.to] == u32::MAX {
                    level[arc.to] = level[u] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        (level[self.sink] != u32::MAX).then_some(level)
    }

    fn augment(&mut self, u: usize, limit: u64, level: &[u32], next: &mut [usize]) -> u64 {
        if u == self.sink {
            return limit;
        }
        while next[u] < self.out[u].len() {
            let a = self.out[u][next[u]];
            let Arc { to, cap } = self.arcs[a];
            if cap > 0 && level[to] == level[u] + 1 {
                let pushed = self.augment(to, limit.min(cap), level, next);
                if pushed > 0 {
                    self.arcs[a].cap -= pushed;
                    self.arcs[a ^ 1].cap += pushed;
                    return pushed;
                }
            }
            next[u] += 1;
        }
        0
    }

    /// Runs to a maximum flow and returns its value.
    pub fn max_flow(&mut self) -> u64 {
        let mut total = 0;
        while let Some(level) = self.levels() {
            let mut next = vec![0; self.out.len()];
            loop {
                let pushed = self.augment(self.source, u64::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    /// Nodes reachable from the source through arcs with residual capacity.
    pub fn source_side(&self) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.out[u] {
                let arc = self.arcs[a];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    queue.push_back(arc.to);
                }
            }
        }
        seen
    }
}

/// MWIS of G[s]; fails with the odd cycle when G[s] is not bipartite.
pub fn solve_bipartite(
    g: &Graph,
    s: &VertexSet,
    w: &WeightMap,
) -> Result<BipartiteSolution, BipartiteError> {
    match g.bipartition(s) {
        BipartiteCheck::Bipartite(b) => solve_with_bipartition(g, s, w, b),
        BipartiteCheck::OddCycle(c) => Err(BipartiteError::NotBipartite(c)),
    }
}

/// MWIS of G[s] for a caller-supplied 2-coloring of G[s].
pub fn solve_with_bipartition(
    g: &Graph,
    s: &VertexSet,
    w: &WeightMap,
    bipartition: Bipartition,
) -> Result<BipartiteSolution, BipartiteError> {
    let members = s.to_vec();
    let total: u128 = members.iter().map(|&v| u128::from(w.get(v))).sum();
    if total >= u128::from(u64::MAX) {
        return Err(BipartiteError::WeightOverflow);
    }
    let total = total as u64;
    let infinite = total + 1;

    let mut local = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in members.iter().enumerate() {
        local[v] = i + 2;
    }
    let (source, sink) = (0, 1);
    let mut net = FlowNetwork::new(members.len() + 2, source, sink);
    for &v in &members {
        if bipartition.side_a.contains(v) {
            net.add_arc(source, local[v], w.get(v));
            for &u in g.neighbor_list(v) {
                if s.contains(u) {
                    net.add_arc(local[v], local[u], infinite);
                }
            }
        } else {
            net.add_arc(local[v], sink, w.get(v));
        }
    }
    let cut = net.max_flow();
    let reach = net.source_side();

    let mut witness = g.empty_set();
    for &v in &members {
        let reached = reach[local[v]];
        if bipartition.side_a.contains(v) == reached {
            witness.insert(v);
        }
    }
    // Only zero-weight vertices can still be free to join.
    let mut blocked = g.neighborhood_of_set(&witness);
    for &v in &members {
        if !witness.contains(v) && !blocked.contains(v) {
            witness.insert(v);
            blocked.union_with(g.row(v));
        }
    }
    Ok(BipartiteSolution {
        weight: total - cut,
        witness,
        cover_weight: cut,
        bipartition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::set_weight;

    fn check(g: &Graph, w: &WeightMap, expect: u64) -> BipartiteSolution {
        let sol = solve_bipartite(g, &g.all(), w).unwrap();
        assert_eq!(sol.weight, expect);
        assert!(g.is_independent(&sol.witness));
        assert_eq!(set_weight(w, &sol.witness), expect);
        sol
    }

    #[test]
    fn single_edge_takes_heavier_end() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let sol = check(&g, &WeightMap::new(vec![3, 5]), 5);
        assert_eq!(sol.witness.to_vec(), vec![1]);
        assert_eq!(sol.cover_weight, 3);
    }

    #[test]
    fn path_p4_unit() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        check(&g, &WeightMap::unit(4), 2);
    }

    #[test]
    fn weighted_star_and_c4() {
        // frozen from a 2^4 subset enumeration
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        check(&star, &WeightMap::new(vec![10, 3, 3, 3]), 10);
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        check(&c4, &WeightMap::new(vec![1, 9, 1, 9]), 18);
    }

    #[test]
    fn zero_weight_and_isolated_vertices_join() {
        let g = Graph::new(5, &[(0, 1), (1, 2)]).unwrap();
        let sol = check(&g, &WeightMap::new(vec![0, 4, 0, 7, 0]), 11);
        assert!(sol.witness.contains(3));
        assert!(sol.witness.contains(4));
    }

    #[test]
    fn odd_cycle_is_rejected() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        match solve_bipartite(&g, &g.all(), &WeightMap::unit(5)) {
            Err(BipartiteError::NotBipartite(c)) => assert_eq!(c.len(), 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn restricted_to_subset() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let s = VertexSet::from_ids(5, [0, 1, 2, 3]);
        let sol = solve_bipartite(&g, &s, &WeightMap::new(vec![1, 1, 1, 1, 100])).unwrap();
        assert_eq!(sol.weight, 2);
        assert!(sol.witness.is_subset(&s));
    }
}
