//! Frames without green components: order the H-vertices that start a P3
//! into Z so that each one kills every remaining C5 in its anti-neighborhood.

use crate::graph::{Graph, VertexSet};

use super::{violation, KContext, Rule, SolveError, SolveResult, Solver};

/// H': H-vertices that are the endpoint of an induced P3 with two Z-vertices.
pub fn p3_endpoints(g: &Graph, ctx: &KContext) -> VertexSet {
    VertexSet::from_ids(
        g.vertex_count(),
        ctx.h.iter().filter(|&h| {
            g.neighbors_in(h, &ctx.z).iter().any(|z1| {
                g.neighbors_in(z1, &ctx.z)
                    .difference(g.row(h))
                    .first()
                    .is_some()
            })
        }),
    )
}

/// `a ≥ b`: `a == b`, or `a` sees a vertex of every induced P3 `(b, z1, z2)`
/// with `z1, z2 ∈ Z`.
pub fn order_geq(g: &Graph, ctx: &KContext, a: usize, b: usize) -> bool {
    a == b
        || ctx
            .p3s_from(g, b)
            .into_iter()
            .all(|(z1, z2)| g.has_edge(a, z1) || g.has_edge(a, z2))
}

/// Orders H' as h1 ≥ h2 ≥ … by repeatedly taking the smallest-id vertex that
/// dominates all remaining ones. Fails if two vertices are incomparable or no
/// remaining vertex dominates the rest.
pub fn dominance_order(
    g: &Graph,
    ctx: &KContext,
    endpoints: &VertexSet,
) -> Result<Vec<usize>, SolveError> {
    let hs = endpoints.to_vec();
    let m = hs.len();
    let mut geq = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            geq[i][j] = order_geq(g, ctx, hs[i], hs[j]);
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            if !geq[i][j] && !geq[j][i] {
                return Err(violation(Rule::OrderNotTotal, vec![hs[i], hs[j]]));
            }
        }
    }
    let mut left: Vec<usize> = (0..m).collect();
    let mut order = Vec::with_capacity(m);
    while !left.is_empty() {
        let pos = left
            .iter()
            .position(|&i| left.iter().all(|&j| geq[i][j]))
            .ok_or_else(|| {
                violation(Rule::OrderNoMaximum, left.iter().map(|&i| hs[i]).collect())
            })?;
        order.push(hs[left.remove(pos)]);
    }
    Ok(order)
}

impl Solver<'_> {
    /// Frame with G[Z] bipartite, no nailed C5 and no green component. With
    /// H' ordered h1 ≥ … ≥ hl, the sets (K \ {h1..h(i-1)}) \ N(hi) and
    /// K \ H' are C5-free and solved as nearly bipartite.
    pub fn solve_no_green(&mut self, ctx: &KContext) -> Result<SolveResult, SolveError> {
        let endpoints = p3_endpoints(self.g, ctx);
        if endpoints.is_empty() {
            return self.c5_free_solve(&ctx.k);
        }
        let order = dominance_order(self.g, ctx, &endpoints)?;
        let mut split = self.split();
        let mut rest = ctx.k.clone();
        for h in order {
            self.stats.order_branches += 1;
            let branch = rest.difference(self.g.row(h));
            let r = self.c5_free_solve(&branch)?;
            self.offer(&mut split, r);
            rest.remove(h);
        }
        let r = self.c5_free_solve(&rest)?;
        self.offer(&mut split, r);
        Ok(split.finish())
    }
}
