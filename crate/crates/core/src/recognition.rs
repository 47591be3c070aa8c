//! Detection of the forbidden induced subgraphs of the (P7, triangle)-free
//! class: triangles, induced paths and induced 5-cycles.
//!
//! All searches scan vertices in ascending id order, so witnesses are
//! reproducible.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Triangle,
    InducedPathK,
    InducedC5,
}

/// Vertices that induce a forbidden pattern, in pattern order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenWitness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
}

impl ForbiddenWitness {
    /// Re-checks the witness against `g`: consecutive vertices adjacent (and
    /// last-first for cycles), every other pair nonadjacent, no repeats.
    pub fn verify(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        let k = vs.len();
        if vs.iter().any(|&v| v >= g.vertex_count()) {
            return false;
        }
        let distinct = VertexSet::from_ids(g.vertex_count(), vs.iter().copied()).len() == k;
        if !distinct {
            return false;
        }
        let cyclic = match self.kind {
            WitnessKind::Triangle if k == 3 => true,
            WitnessKind::InducedC5 if k == 5 => true,
            WitnessKind::InducedPathK if k > 0 => false,
            _ => return false,
        };
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (cyclic && i == 0 && j == k - 1);
                if g.has_edge(vs[i], vs[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }
}

/// Lexicographically smallest triangle `(a, b, c)` with `a < b < c`.
pub fn find_triangle(g: &Graph) -> Option<ForbiddenWitness> {
    for a in g.vertices() {
        for &b in g.neighbor_list(a).iter().filter(|&&b| b > a) {
            let common = g.row(a).intersection(g.row(b));
            let third = common.iter().find(|&c| c > b);
            if let Some(c) = third {
                return Some(ForbiddenWitness {
                    kind: WitnessKind::Triangle,
                    vertices: vec![a, b, c],
                });
            }
        }
    }
    None
}

/// An induced path on `k` vertices, found by exhaustive backtracking over
/// partial induced paths.
pub fn find_induced_path(g: &Graph, k: usize) -> Option<ForbiddenWitness> {
    find_induced_path_within(g, k, &g.all())
}

pub fn find_induced_path_within(
    g: &Graph,
    k: usize,
    within: &VertexSet,
) -> Option<ForbiddenWitness> {
    if k == 0 {
        return None;
    }
    within
        .iter()
        .find_map(|start| find_induced_path_from(g, start, k, within))
}

/// An induced path on `k` vertices of G[within] that starts at `start`.
pub fn find_induced_path_from(
    g: &Graph,
    start: usize,
    k: usize,
    within: &VertexSet,
) -> Option<ForbiddenWitness> {
    if k == 0 || !within.contains(start) {
        return None;
    }
    let mut path = Vec::with_capacity(k);
    path.push(start);
    // Vertices that may not extend the path: the closed neighborhoods of
    // every vertex except the current endpoint, plus the endpoint itself.
    let blocked = VertexSet::singleton(g.vertex_count(), start);
    extend_path(g, k, within, &mut path, &blocked).then_some(ForbiddenWitness {
        kind: WitnessKind::InducedPathK,
        vertices: path,
    })
}

fn extend_path(
    g: &Graph,
    k: usize,
    within: &VertexSet,
    path: &mut Vec<usize>,
    blocked: &VertexSet,
) -> bool {
    if path.len() == k {
        return true;
    }
    let last = *path.last().expect("path is never empty");
    let mut candidates = g.neighbors_in(last, within);
    candidates.difference_with(blocked);
    if candidates.is_empty() {
        return false;
    }
    // `last` is already blocked; its neighbors (including the next endpoint)
    // become blocked one step later.
    let next_blocked = blocked.union(g.row(last));
    for v in candidates.iter() {
        path.push(v);
        if extend_path(g, k, within, path, &next_blocked) {
            return true;
        }
        path.pop();
    }
    false
}

/// An induced C5 inside `within`, listed in cycle order.
///
/// Every induced 5-cycle `a b x y e` has `x, y` outside N[a], `b` in
/// N(a) ∩ N(x) \ N(y), `e` in N(a) ∩ N(y) \ N(x) and `b`, `e` nonadjacent,
/// which is exactly what is searched for. Chords are always excluded, so the
/// result is correct on graphs with triangles as well.
pub fn find_induced_c5(g: &Graph, within: &VertexSet) -> Option<ForbiddenWitness> {
    for a in within.iter() {
        if let Some(cycle) = induced_c5_through(g, within, a) {
            return Some(ForbiddenWitness {
                kind: WitnessKind::InducedC5,
                vertices: cycle,
            });
        }
    }
    None
}

pub fn has_induced_c5(g: &Graph, within: &VertexSet) -> bool {
    find_induced_c5(g, within).is_some()
}

fn induced_c5_through(g: &Graph, within: &VertexSet, a: usize) -> Option<Vec<usize>> {
    let near = g.neighbors_in(a, within);
    if near.len() < 2 {
        return None;
    }
    let mut far = within.difference(g.row(a));
    far.remove(a);
    // Only vertices at distance exactly two can sit opposite `a`.
    far.intersect_with(&g.neighborhood_of_set(&near));
    for x in far.iter() {
        let bs = near.intersection(g.row(x));
        for y in g.neighbors_in(x, &far).iter().filter(|&y| y > x) {
            let b_opts = bs.difference(g.row(y));
            if b_opts.is_empty() {
                continue;
            }
            let mut e_opts = near.intersection(g.row(y));
            e_opts.difference_with(g.row(x));
            for b in b_opts.iter() {
                if let Some(e) = e_opts.difference(g.row(b)).iter().find(|&e| e != b) {
                    return Some(vec![a, b, x, y, e]);
                }
            }
        }
    }
    None
}

/// Every induced C5 inside `within`, each reported once with its smallest
/// vertex first and its second vertex smaller than its last.
pub fn induced_c5s(g: &Graph, within: &VertexSet) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in within.iter() {
        let mut rest = within.clone();
        for v in 0..=a {
            rest.remove(v);
        }
        let near = g.neighbors_in(a, &rest);
        for b in near.iter() {
            for e in near.iter().filter(|&e| e > b && !g.has_edge(b, e)) {
                let xs = g
                    .neighbors_in(b, &rest)
                    .difference(g.row(a))
                    .difference(g.row(e));
                for x in xs.iter().filter(|&x| x != e) {
                    let ys = g
                        .neighbors_in(x, &rest)
                        .intersection(g.row(e))
                        .difference(g.row(a))
                        .difference(g.row(b));
                    for y in ys.iter() {
                        out.push(vec![a, b, x, y, e]);
                    }
                }
            }
        }
    }
    out
}

/// `Ok(())` iff `g` is (P7, triangle)-free; the triangle check runs first.
pub fn check_class(g: &Graph) -> Result<(), ForbiddenWitness> {
    if let Some(w) = find_triangle(g) {
        return Err(w);
    }
    if let Some(w) = find_induced_path(g, 7) {
        return Err(w);
    }
    Ok(())
}

pub fn is_in_class(g: &Graph) -> bool {
    check_class(g).is_ok()
}
