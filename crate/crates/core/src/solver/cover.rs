use crate::graph::VertexSet;

/// Vertex sets (original ids) that each induce a bipartite subgraph and that
/// jointly contain every maximal independent set of the solved graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoverFamily {
    members: Vec<VertexSet>,
}

impl CoverFamily {
    pub fn single(set: VertexSet) -> Self {
        CoverFamily { members: vec![set] }
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn push(&mut self, set: VertexSet) {
        self.members.push(set);
    }

    pub fn extend(&mut self, other: &CoverFamily) {
        self.members.extend(other.members.iter().cloned());
        self.prune();
    }

    pub fn insert_everywhere(&mut self, v: usize) {
        for m in &mut self.members {
            m.insert(v);
        }
    }

    /// Pairwise unions; used for vertex-disjoint, mutually nonadjacent parts.
    pub fn product(&self, other: &CoverFamily) -> CoverFamily {
        let mut out = CoverFamily {
            members: Vec::with_capacity(self.len() * other.len()),
        };
        for a in &self.members {
            for b in &other.members {
                out.members.push(a.union(b));
            }
        }
        out.prune();
        out
    }

    /// Drops duplicates and members contained in another member; the
    /// containment property is unaffected.
    pub fn prune(&mut self) {
        self.members.sort_by_key(|m| std::cmp::Reverse(m.len()));
        let mut kept: Vec<VertexSet> = Vec::with_capacity(self.members.len());
        for m in self.members.drain(..) {
            if !kept.iter().any(|k| m.is_subset(k)) {
                kept.push(m);
            }
        }
        kept.sort_by_key(VertexSet::to_vec);
        self.members = kept;
    }

    /// True if some member contains `set`.
    pub fn covers(&self, set: &VertexSet) -> bool {
        self.members.iter().any(|m| set.is_subset(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(6, ids.iter().copied())
    }

    #[test]
    fn prune_drops_contained_members() {
        let mut f = CoverFamily::single(s(&[0, 1]));
        f.push(s(&[0]));
        f.push(s(&[0, 1]));
        f.push(s(&[2]));
        f.prune();
        assert_eq!(f.members(), &[s(&[0, 1]), s(&[2])]);
    }

    #[test]
    fn product_unions_pairs() {
        let mut a = CoverFamily::single(s(&[0]));
        a.push(s(&[1]));
        let b = CoverFamily::single(s(&[4, 5]));
        let p = a.product(&b);
        assert_eq!(p.members(), &[s(&[0, 4, 5]), s(&[1, 4, 5])]);
        assert!(p.covers(&s(&[1, 5])));
        assert!(!p.covers(&s(&[0, 1])));
    }
}
