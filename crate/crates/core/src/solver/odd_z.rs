//! Frames whose Z-part is not bipartite.

use crate::graph::VertexSet;
use crate::recognition::find_induced_c5;

use super::{violation, KContext, Rule, SolveError, SolveResult, Solver};

impl Solver<'_> {
    /// G[Z] has exactly one odd component Z*; H* are the H-vertices touching
    /// it. Branches: K \ N(h) for h ∈ H* (Z-part now bipartite), then
    /// K \ H*, whose components are Z* itself (re-framed around `d` and a
    /// vertex of H*) and the rest of K.
    pub fn solve_odd_z(&mut self, ctx: &KContext) -> Result<SolveResult, SolveError> {
        self.stats.odd_z_frames += 1;
        let g = self.g;
        let z_star = self.odd_z_component(ctx)?;
        let h_star = ctx.h.intersection(&g.neighborhood_of_set(&z_star));
        let Some(anchor) = h_star.first() else {
            return Err(violation(Rule::DetachedOddComponent, z_star.to_vec()));
        };

        let mut split = self.split();
        for h in h_star.iter() {
            let sub = ctx.without_neighbors(g, h);
            let r = self.solve_bipartite_z(&sub)?;
            self.offer(&mut split, r);
        }

        let rest = ctx.k.difference(&h_star);
        let mut acc = SolveResult::empty(self.n(), self.record());
        for q in g.components_within(&rest) {
            let r = if q == z_star {
                // d misses Z* and sees the anchor, so (d, anchor) frames Z*.
                self.stats.reframes += 1;
                let inner = KContext::new(g, ctx.d, anchor, z_star.clone())?;
                self.solve_bipartite_z(&inner)?
            } else if find_induced_c5(g, &q).is_none() {
                self.nearly_bipartite_solve(&q)?
            } else {
                self.solve_component(&ctx.restrict(&q))?
            };
            acc = acc.join(r);
        }
        self.offer(&mut split, acc);
        Ok(split.finish())
    }

    /// The unique component of G[Z] holding a C5, or failing that the unique
    /// non-bipartite one.
    fn odd_z_component(&self, ctx: &KContext) -> Result<VertexSet, SolveError> {
        let g = self.g;
        let odd: Vec<VertexSet> = g
            .components_within(&ctx.z)
            .into_iter()
            .filter(|t| !g.is_bipartite_within(t))
            .collect();
        let mut with_c5 = odd
            .iter()
            .filter_map(|t| find_induced_c5(g, t).map(|w| (t, w.vertices)));
        match (with_c5.next(), with_c5.next()) {
            (Some((_, a)), Some((_, b))) => {
                let mut vs = a;
                vs.extend(b);
                Err(violation(Rule::MultipleC5Components, vs))
            }
            (Some((t, _)), None) => Ok(t.clone()),
            (None, _) if odd.len() == 1 => Ok(odd[0].clone()),
            (None, _) => Err(violation(
                Rule::AmbiguousOddComponent,
                odd.iter().flat_map(VertexSet::iter).collect(),
            )),
        }
    }
}
