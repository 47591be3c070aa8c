//! Exponential-time ground truth for small graphs: exact MWIS by
//! include/exclude branching and enumeration of all maximal independent sets.
//!
//! Both routines work on `u64` vertex masks and share nothing with the
//! polynomial solver.

use thiserror::Error;

use crate::graph::{Graph, VertexSet, WeightMap};

pub const MAX_ORACLE_VERTICES: usize = 64;
pub const DEFAULT_MWIS_LIMIT: usize = 30;
pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the oracle limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub weight: u64,
    pub witness: VertexSet,
    /// Search-tree nodes visited.
    pub node_count: u64,
}

fn masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbor_list(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect()
}

fn check_limit(g: &Graph, limit: usize) -> Result<(), OracleError> {
    let limit = limit.min(MAX_ORACLE_VERTICES);
    if g.vertex_count() > limit {
        return Err(OracleError::TooLarge {
            n: g.vertex_count(),
            limit,
        });
    }
    Ok(())
}

pub fn brute_force_mwis(g: &Graph, w: &WeightMap) -> Result<OracleResult, OracleError> {
    brute_force_mwis_limited(g, w, DEFAULT_MWIS_LIMIT)
}

pub fn brute_force_mwis_limited(
    g: &Graph,
    w: &WeightMap,
    limit: usize,
) -> Result<OracleResult, OracleError> {
    check_limit(g, limit)?;
    let n = g.vertex_count();
    let mut search = Branching {
        adj: masks(g),
        w: w.as_slice(),
        nodes: 0,
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let (weight, chosen) = search.best(all);
    Ok(OracleResult {
        weight,
        witness: VertexSet::from_ids(n, bits(chosen)),
        node_count: search.nodes,
    })
}

struct Branching<'a> {
    adj: Vec<u64>,
    w: &'a [u64],
    nodes: u64,
}

impl Branching<'_> {
    fn best(&mut self, mut alive: u64) -> (u64, u64) {
        self.nodes += 1;
        let mut taken = 0u64;
        let mut gain = 0u64;
        // Isolated vertices always join.
        for v in bits(alive) {
            if self.adj[v] & alive == 0 {
                taken |= 1 << v;
                gain += self.w[v];
            }
        }
        alive &= !taken;
        if alive == 0 {
            return (gain, taken);
        }
        let pivot = bits(alive)
            .max_by_key(|&v| ((self.adj[v] & alive).count_ones(), std::cmp::Reverse(v)))
            .expect("alive is nonempty");
        let (with_w, with_set) = self.best(alive & !self.adj[pivot] & !(1 << pivot));
        let with_w = with_w + self.w[pivot];
        let (without_w, without_set) = self.best(alive & !(1 << pivot));
        if with_w >= without_w {
            (gain + with_w, taken | with_set | 1 << pivot)
        } else {
            (gain + without_w, taken | without_set)
        }
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

pub fn enumerate_maximal_is(g: &Graph) -> Result<Vec<VertexSet>, OracleError> {
    enumerate_maximal_is_limited(g, DEFAULT_ENUMERATION_LIMIT)
}

/// All maximal independent sets, sorted by their ascending member lists.
/// Bron-Kerbosch with pivoting, run on the complement adjacency.
pub fn enumerate_maximal_is_limited(
    g: &Graph,
    limit: usize,
) -> Result<Vec<VertexSet>, OracleError> {
    check_limit(g, limit)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(vec![VertexSet::empty(0)]);
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let adj = masks(g);
    let compatible: Vec<u64> = (0..n).map(|v| all & !adj[v] & !(1 << v)).collect();
    let mut found = Vec::new();
    bron_kerbosch(&compatible, 0, all, 0, &mut found);
    let mut sets: Vec<Vec<usize>> = found.into_iter().map(|m| bits(m).collect()).collect();
    sets.sort();
    Ok(sets
        .into_iter()
        .map(|s| VertexSet::from_ids(n, s))
        .collect())
}

fn bron_kerbosch(compatible: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| (p & compatible[u]).count_ones())
        .expect("p | x is nonempty");
    for v in bits(p & !compatible[pivot]) {
        bron_kerbosch(
            compatible,
            r | 1 << v,
            p & compatible[v],
            x & compatible[v],
            out,
        );
        p &= !(1 << v);
        x |= 1 << v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(sets: &[VertexSet]) -> Vec<Vec<usize>> {
        sets.iter().map(VertexSet::to_vec).collect()
    }

    #[test]
    fn small_optima() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            brute_force_mwis(&k3, &WeightMap::unit(3)).unwrap().weight,
            1
        );
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let r = brute_force_mwis(&p3, &WeightMap::new(vec![1, 5, 1])).unwrap();
        assert_eq!(r.weight, 5);
        assert_eq!(r.witness.to_vec(), vec![1]);
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(
            brute_force_mwis(&c5, &WeightMap::unit(5)).unwrap().weight,
            2
        );
    }

    #[test]
    fn refuses_large_graphs() {
        let g = Graph::new(31, &[]).unwrap();
        assert_eq!(
            brute_force_mwis(&g, &WeightMap::unit(31)),
            Err(OracleError::TooLarge { n: 31, limit: 30 })
        );
        assert!(brute_force_mwis_limited(&g, &WeightMap::unit(31), 40).is_ok());
        assert!(enumerate_maximal_is(&Graph::new(21, &[]).unwrap()).is_err());
    }

    #[test]
    fn maximal_sets() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            ids(&enumerate_maximal_is(&k3).unwrap()),
            vec![vec![0], vec![1], vec![2]]
        );
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            ids(&enumerate_maximal_is(&c4).unwrap()),
            vec![vec![0, 2], vec![1, 3]]
        );
        let e3 = Graph::new(3, &[]).unwrap();
        assert_eq!(
            ids(&enumerate_maximal_is(&e3).unwrap()),
            vec![vec![0, 1, 2]]
        );
    }
}
