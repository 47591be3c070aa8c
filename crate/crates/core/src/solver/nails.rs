//! C5s with exactly one H-vertex (the nail) and four Z-vertices.

use crate::graph::{Graph, VertexSet};

use super::{violation, KContext, Rule, SolveError, SolveResult, Solver};

/// Nails of a frame and, per nail `h`, the set `L(h)` of Z-vertices that lie
/// on a C5 nailed at `h` and miss `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NailStructure {
    pub nails: VertexSet,
    pub l_sets: Vec<(usize, VertexSet)>,
}

impl NailStructure {
    pub fn compute(g: &Graph, ctx: &KContext) -> NailStructure {
        let mut nails = VertexSet::empty(g.vertex_count());
        let mut l_sets = Vec::new();
        for h in ctx.h.iter() {
            let (l, _) = nailed_at(g, ctx, h);
            if !l.is_empty() {
                nails.insert(h);
                l_sets.push((h, l));
            }
        }
        NailStructure { nails, l_sets }
    }

    pub fn l_of(&self, h: usize) -> Option<&VertexSet> {
        self.l_sets.iter().find(|(v, _)| *v == h).map(|(_, l)| l)
    }
}

/// `L(h)` and one C5 `(h, z1, z2, z3, z4)` nailed at `h`, if any.
///
/// A C5 nailed at `h` is `h z1 z2 z3 z4` with `z1, z4 ∈ N(h)` and the edge
/// `z2 z3` among the Z-vertices missing `h`; `z2, z3` are exactly the members
/// of `L(h)` it contributes.
pub fn nailed_at(g: &Graph, ctx: &KContext, h: usize) -> (VertexSet, Option<Vec<usize>>) {
    let near = g.neighbors_in(h, &ctx.z);
    let far = ctx.z.difference(g.row(h));
    let mut l = VertexSet::empty(g.vertex_count());
    let mut first = None;
    for z2 in far.iter() {
        let z1s = near.intersection(g.row(z2));
        if z1s.is_empty() {
            continue;
        }
        for z3 in g.neighbors_in(z2, &far).iter() {
            let z1_opts = z1s.difference(g.row(z3));
            if z1_opts.is_empty() {
                continue;
            }
            let z4_opts = near.intersection(g.row(z3)).difference(g.row(z2));
            let pair = z1_opts
                .iter()
                .find_map(|z1| z4_opts.difference(g.row(z1)).first().map(|z4| (z1, z4)));
            if let Some((z1, z4)) = pair {
                l.insert(z2);
                l.insert(z3);
                first.get_or_insert(vec![h, z1, z2, z3, z4]);
            }
        }
    }
    (l, first)
}

/// Any C5 of the frame with exactly one H-vertex.
pub fn find_nailed_c5(g: &Graph, ctx: &KContext) -> Option<Vec<usize>> {
    ctx.h.iter().find_map(|h| nailed_at(g, ctx, h).1)
}

impl Solver<'_> {
    /// Frame with G[Z] bipartite. Without nailed C5s this is the no-nail
    /// routine; otherwise branch on K \ N(a) for each nail `a` and finish on
    /// K \ {nails}.
    pub fn solve_bipartite_z(&mut self, ctx: &KContext) -> Result<SolveResult, SolveError> {
        if let crate::graph::BipartiteCheck::OddCycle(c) = self.g.bipartition(&ctx.z) {
            return Err(violation(Rule::NonBipartiteZ, c));
        }
        let nails = NailStructure::compute(self.g, ctx);
        if nails.nails.is_empty() {
            return self.solve_no_nailed_c5(ctx);
        }
        let mut split = self.split();
        for (a, l) in &nails.l_sets {
            let r = self.solve_nail_antineighborhood(ctx, *a, l)?;
            self.offer(&mut split, r);
        }
        let rest = self.solve_no_nailed_c5(&ctx.without(&nails.nails))?;
        self.offer(&mut split, rest);
        Ok(split.finish())
    }

    /// α(G[K \ N(h)]) for a nail `h`, branching on each `x ∈ L(h)`
    /// (K \ (N(h) ∪ N(x))) and finishing on K \ (N(h) ∪ L(h)). None of these
    /// sets may contain a nailed C5.
    pub fn solve_nail_antineighborhood(
        &mut self,
        ctx: &KContext,
        h: usize,
        l: &VertexSet,
    ) -> Result<SolveResult, SolveError> {
        let base = ctx.without_neighbors(self.g, h);
        let mut split = self.split();
        for x in l.iter() {
            self.stats.nail_branches += 1;
            let r = self.solve_no_nailed_c5(&base.without_neighbors(self.g, x))?;
            self.offer(&mut split, r);
        }
        let rest = self.solve_no_nailed_c5(&base.without(l))?;
        self.offer(&mut split, rest);
        Ok(split.finish())
    }
}
