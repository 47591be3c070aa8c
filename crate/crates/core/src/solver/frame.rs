use crate::graph::{Graph, VertexSet};
use crate::recognition::find_induced_path_from;

use super::{violation, Rule, SolveError};

/// The frame `(c, d, K, H, Z)`: `c` misses all of `K`, `d` is a neighbor of
/// `c`, `H = K ∩ N(d)` and `Z = K \ N(d)`.
///
/// `K` need not be connected. Branches narrow `K` while keeping `c` and `d`,
/// and every structural fact about frames only uses the induced paths that
/// run through `c` and `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KContext {
    pub c: usize,
    pub d: usize,
    pub k: VertexSet,
    pub h: VertexSet,
    pub z: VertexSet,
}

impl KContext {
    pub fn new(g: &Graph, c: usize, d: usize, k: VertexSet) -> Result<Self, SolveError> {
        let n = g.vertex_count();
        if c >= n || d >= n || k.capacity() != n {
            return Err(SolveError::Internal(format!(
                "frame ({c}, {d}) outside a graph with {n} vertices"
            )));
        }
        if !g.has_edge(c, d) || k.contains(c) || k.contains(d) || g.row(c).intersects(&k) {
            return Err(SolveError::Internal(format!(
                "({c}, {d}) does not frame {k:?}"
            )));
        }
        let h = k.intersection(g.row(d));
        let z = k.difference(g.row(d));
        for a in h.iter() {
            if let Some(b) = g.neighbors_in(a, &h).first() {
                return Err(violation(Rule::FrameTriangle, vec![d, a, b]));
            }
        }
        Ok(KContext { c, d, k, h, z })
    }

    /// The same frame restricted to `K ∩ keep`.
    pub fn restrict(&self, keep: &VertexSet) -> KContext {
        KContext {
            c: self.c,
            d: self.d,
            k: self.k.intersection(keep),
            h: self.h.intersection(keep),
            z: self.z.intersection(keep),
        }
    }

    /// The frame on `K \ drop`.
    pub fn without(&self, drop: &VertexSet) -> KContext {
        KContext {
            c: self.c,
            d: self.d,
            k: self.k.difference(drop),
            h: self.h.difference(drop),
            z: self.z.difference(drop),
        }
    }

    /// The frame on `K \ N(v)`.
    pub fn without_neighbors(&self, g: &Graph, v: usize) -> KContext {
        self.without(g.row(v))
    }

    /// Induced P3s `(h, z1, z2)` with `z1, z2 ∈ Z`.
    pub fn p3s_from(&self, g: &Graph, h: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for z1 in g.neighbors_in(h, &self.z).iter() {
            for z2 in g.neighbors_in(z1, &self.z).difference(g.row(h)).iter() {
                out.push((z1, z2));
            }
        }
        out
    }

    /// Checks the two forbidden patterns every frame of a (P7, triangle)-free
    /// graph avoids: two H-vertices starting disjoint, mutually anticomplete
    /// P3s into Z (with `d` they span a P7), and an H-vertex starting an
    /// induced P5 into Z (with `d` and `c` a P7).
    pub fn check_path_patterns(&self, g: &Graph) -> Result<(), SolveError> {
        let hs = self.h.to_vec();
        let p3s: Vec<Vec<(usize, usize)>> = hs.iter().map(|&h| self.p3s_from(g, h)).collect();
        for (i, &h1) in hs.iter().enumerate() {
            for (j, &h2) in hs.iter().enumerate().skip(i + 1) {
                for &(a1, a2) in &p3s[i] {
                    for &(b1, b2) in &p3s[j] {
                        let left = VertexSet::from_ids(g.vertex_count(), [h1, a1, a2]);
                        let right = VertexSet::from_ids(g.vertex_count(), [h2, b1, b2]);
                        if left.is_disjoint(&right) && g.edges_between(&left, &right) == 0 {
                            return Err(violation(
                                Rule::DisjointP3Pair,
                                vec![a2, a1, h1, self.d, h2, b1, b2],
                            ));
                        }
                    }
                }
            }
        }
        for &h in &hs {
            let mut within = self.z.clone();
            within.insert(h);
            if let Some(p) = find_induced_path_from(g, h, 5, &within) {
                let mut vs = vec![self.c, self.d];
                vs.extend(p.vertices);
                return Err(violation(Rule::P5FromH, vs));
            }
        }
        Ok(())
    }
}
