//! Polynomial-time MWIS for (P7, triangle)-free graphs.
//!
//! The solver repeatedly applies the anti-neighborhood split
//! `α(G) = max(α(G - v), α(G - N(v)))` along carefully chosen vertex
//! sequences until every leaf is either bipartite (solved by a min-cut) or
//! nearly bipartite (every anti-neighborhood bipartite).
//!
//! At the top level, a connected graph that is neither bipartite nor C5-free
//! is split on every vertex `c`: `α(G) = max_c w(c) + Σ_K α(K)` over the
//! components `K` of G[A(c)]. Each `K` is handled in a [`KContext`] frame
//! `(c, d, K, H, Z)` where `d` is a neighbor of `c` contacting `K`,
//! `H = K ∩ N(d)` and `Z = K \ N(d)`.
//!
//! Every structural claim the decomposition relies on (a branch is C5-free,
//! has no green component, a critical vertex exists, ...) is checked at run
//! time. A failed check is reported as [`SolveError::ClassViolation`]; the
//! solver never returns a non-optimal weight, because every leaf is exact and
//! every split covers all independent sets of its frame.

mod cover;
mod frame;
mod green;
mod nails;
mod odd_z;
mod order;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bipartite::{self, BipartiteError};
use crate::graph::{set_weight, BipartiteCheck, Graph, GraphError, VertexSet, WeightMap};
use crate::recognition::find_induced_c5;

pub use cover::CoverFamily;
pub use frame::KContext;
pub use green::{Critical, GreenStructure, Side, TComponent};
pub use nails::NailStructure;

/// Which structural claim failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// Two adjacent vertices of H: with `d` they form a triangle.
    FrameTriangle,
    /// An anti-neighborhood of a nearly-bipartite leaf has an odd cycle.
    OddAntiNeighborhood,
    /// A branch that must be C5-free contains an induced C5.
    C5InBranch,
    /// A branch that must have no C5 with exactly one H-vertex has one.
    NailedC5InBranch,
    /// A branch that must have no green component has one.
    GreenInBranch,
    /// An H-vertex sees both sides of a bipartite Z-component.
    TwoSidedContact,
    /// An H-vertex properly one-side contacts two Z-components.
    MultipleProperContacts,
    /// Green components exist but no critical vertex does.
    NoCriticalVertex,
    /// Vertices outside a maximal contactor's reach disagree on their
    /// neighborhood in the opposite side.
    OppositeSideMismatch,
    /// Two P3-endpoints in H are incomparable.
    OrderNotTotal,
    /// No P3-endpoint dominates all remaining ones.
    OrderNoMaximum,
    /// Z must be bipartite here but is not.
    NonBipartiteZ,
    /// Two components of G[Z] contain a C5.
    MultipleC5Components,
    /// G[Z] has several non-bipartite components, none distinguished by a C5.
    AmbiguousOddComponent,
    /// A C5-carrying Z-component is contacted by no H-vertex.
    DetachedOddComponent,
    /// Two H-vertices start disjoint, mutually anticomplete P3s into Z.
    DisjointP3Pair,
    /// An H-vertex starts an induced P5 into Z.
    P5FromH,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    /// Vertices exhibiting the failure (a cycle, a path, or the offending
    /// vertices), in original ids.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("class violation ({:?}) at vertices {:?}", .0.rule, .0.vertices)]
    ClassViolation(Violation),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("total weight overflows 64-bit flow capacities")]
    WeightOverflow,
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub(crate) fn violation(rule: Rule, vertices: Vec<usize>) -> SolveError {
    SolveError::ClassViolation(Violation { rule, vertices })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Record the family of bipartite-inducing sets covering every maximal
    /// independent set.
    pub record_cover: bool,
    /// Enumerate the forbidden paired-P3 and P5 patterns on every frame.
    /// Polynomial but expensive; on by default only in debug builds.
    pub check_path_patterns: bool,
    /// Evaluate the top-level vertex branches on the rayon pool.
    pub parallel: bool,
    /// Report a class violation when a critical-vertex branch still has a
    /// green component, instead of peeling it again.
    pub strict: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            record_cover: false,
            check_path_patterns: cfg!(debug_assertions),
            parallel: false,
            strict: false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    /// Branches evaluated by anti-neighborhood splits.
    pub branch_count: u64,
    pub bipartite_calls: u64,
    pub nearly_bipartite_calls: u64,
    pub frames: u64,
    pub odd_z_frames: u64,
    pub nail_branches: u64,
    pub green_peels: u64,
    pub critical_x_branches: u64,
    pub critical_y_branches: u64,
    pub order_branches: u64,
    pub reframes: u64,
    /// Critical-vertex branches that still had a green component.
    pub green_reentries: u64,
}

impl Stats {
    fn merge(&mut self, o: &Stats) {
        self.branch_count += o.branch_count;
        self.bipartite_calls += o.bipartite_calls;
        self.nearly_bipartite_calls += o.nearly_bipartite_calls;
        self.frames += o.frames;
        self.odd_z_frames += o.odd_z_frames;
        self.nail_branches += o.nail_branches;
        self.green_peels += o.green_peels;
        self.critical_x_branches += o.critical_x_branches;
        self.critical_y_branches += o.critical_y_branches;
        self.order_branches += o.order_branches;
        self.reframes += o.reframes;
        self.green_reentries += o.green_reentries;
    }
}

/// Optimal weight with an attaining independent set in original ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub weight: u64,
    pub witness: VertexSet,
    pub cover: Option<CoverFamily>,
}

impl SolveResult {
    fn empty(n: usize, record_cover: bool) -> Self {
        SolveResult {
            weight: 0,
            witness: VertexSet::empty(n),
            cover: record_cover.then(|| CoverFamily::single(VertexSet::empty(n))),
        }
    }

    /// Combines results on vertex-disjoint, mutually nonadjacent sets.
    fn join(mut self, other: SolveResult) -> SolveResult {
        self.weight += other.weight;
        self.witness.union_with(&other.witness);
        self.cover = match (self.cover, other.cover) {
            (Some(a), Some(b)) => Some(a.product(&b)),
            _ => None,
        };
        self
    }
}

/// Max-combination of branches whose vertex sets jointly contain every
/// maximal independent set of the frame. The empty set is always a
/// candidate; ties keep the earliest branch.
#[derive(Debug)]
pub struct AntiSplit {
    best: SolveResult,
    cover: Option<CoverFamily>,
}

impl AntiSplit {
    pub fn new(n: usize, record_cover: bool) -> Self {
        AntiSplit {
            best: SolveResult::empty(n, false),
            cover: record_cover.then(CoverFamily::default),
        }
    }

    pub fn offer(&mut self, r: SolveResult) {
        if let (Some(acc), Some(c)) = (self.cover.as_mut(), r.cover.as_ref()) {
            acc.extend(c);
        }
        if r.weight > self.best.weight {
            self.best = SolveResult { cover: None, ..r };
        }
    }

    pub fn finish(self) -> SolveResult {
        SolveResult {
            cover: self.cover.map(|mut c| {
                if c.is_empty() {
                    c.push(self.best.witness.clone());
                }
                c
            }),
            ..self.best
        }
    }
}

/// Combines finished branch results as an anti-neighborhood split.
pub fn anti_split<I>(n: usize, record_cover: bool, branches: I) -> SolveResult
where
    I: IntoIterator<Item = SolveResult>,
{
    let mut split = AntiSplit::new(n, record_cover);
    for b in branches {
        split.offer(b);
    }
    split.finish()
}

/// Runs the recursion over one graph and weight map, collecting statistics.
pub struct Solver<'g> {
    g: &'g Graph,
    w: &'g WeightMap,
    cfg: SolverConfig,
    stats: Stats,
}

/// Result and counters of one top-level run.
#[derive(Debug, Clone)]
pub struct Solution {
    pub result: SolveResult,
    pub stats: Stats,
}

/// α_w(g) with a witness. The input is expected to be (P7, triangle)-free;
/// out-of-class inputs either solve exactly or fail with a class violation.
pub fn solve(g: &Graph, w: &WeightMap, record_cover: bool) -> Result<SolveResult, SolveError> {
    let cfg = SolverConfig {
        record_cover,
        ..SolverConfig::default()
    };
    solve_with(g, w, &cfg).map(|s| s.result)
}

pub fn solve_with(g: &Graph, w: &WeightMap, cfg: &SolverConfig) -> Result<Solution, SolveError> {
    w.check(g)?;
    let mut solver = Solver::new(g, w, cfg.clone());
    let result = solver.solve_set(&g.all())?;
    if !g.is_independent(&result.witness) || set_weight(w, &result.witness) != result.weight {
        return Err(SolveError::Internal(format!(
            "witness {:?} does not attain weight {}",
            result.witness, result.weight
        )));
    }
    Ok(Solution {
        result,
        stats: solver.stats,
    })
}

/// Family of vertex sets, each inducing a bipartite subgraph, such that every
/// maximal independent set of `g` lies inside one of them.
pub fn bipartite_cover(g: &Graph, w: &WeightMap) -> Result<CoverFamily, SolveError> {
    let r = solve(g, w, true)?;
    r.cover
        .ok_or_else(|| SolveError::Internal("cover was not recorded".into()))
}

impl<'g> Solver<'g> {
    pub fn new(g: &'g Graph, w: &'g WeightMap, cfg: SolverConfig) -> Self {
        Solver {
            g,
            w,
            cfg,
            stats: Stats::default(),
        }
    }

    pub fn stats(&self) -> &Stats {
        &self.stats
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    fn n(&self) -> usize {
        self.g.vertex_count()
    }

    fn record(&self) -> bool {
        self.cfg.record_cover
    }

    fn split(&self) -> AntiSplit {
        AntiSplit::new(self.n(), self.record())
    }

    fn offer(&mut self, split: &mut AntiSplit, r: SolveResult) {
        self.stats.branch_count += 1;
        debug_assert!(self.g.is_independent(&r.witness));
        debug_assert_eq!(set_weight(self.w, &r.witness), r.weight);
        split.offer(r);
    }

    /// α_w(G[s]) for an arbitrary vertex set: components are solved
    /// separately and summed.
    pub fn solve_set(&mut self, s: &VertexSet) -> Result<SolveResult, SolveError> {
        let mut acc = SolveResult::empty(self.n(), self.record());
        for comp in self.g.components_within(s) {
            let r = self.solve_connected(&comp)?;
            acc = acc.join(r);
        }
        Ok(acc)
    }

    fn solve_connected(&mut self, q: &VertexSet) -> Result<SolveResult, SolveError> {
        if let BipartiteCheck::Bipartite(b) = self.g.bipartition(q) {
            return self.kernel_with(q, b);
        }
        if find_induced_c5(self.g, q).is_none() {
            return self.nearly_bipartite_solve(q);
        }
        let vertices = q.to_vec();
        let branches: Vec<(SolveResult, Stats)> = if self.cfg.parallel {
            vertices
                .par_iter()
                .map(|&c| {
                    let mut sub = Solver::new(self.g, self.w, self.cfg.clone());
                    sub.vertex_branch(q, c).map(|r| (r, sub.stats))
                })
                .collect::<Result<_, _>>()?
        } else {
            let mut out = Vec::with_capacity(vertices.len());
            for &c in &vertices {
                let mut sub = Solver::new(self.g, self.w, self.cfg.clone());
                let r = sub.vertex_branch(q, c)?;
                out.push((r, sub.stats));
            }
            out
        };
        let mut split = self.split();
        for (r, stats) in branches {
            self.stats.merge(&stats);
            self.offer(&mut split, r);
        }
        Ok(split.finish())
    }

    /// w(c) + Σ α(K) over the components K of G[A(c) ∩ q], each solved in
    /// its frame.
    fn vertex_branch(&mut self, q: &VertexSet, c: usize) -> Result<SolveResult, SolveError> {
        let n = self.n();
        let mut acc = SolveResult {
            weight: self.w.get(c),
            witness: VertexSet::singleton(n, c),
            cover: self
                .record()
                .then(|| CoverFamily::single(VertexSet::singleton(n, c))),
        };
        let anti = self.g.anti_neighbors_in(c, q);
        for k in self.g.components_within(&anti) {
            let reach = self.g.neighborhood_of_set(&k);
            let d = self
                .g
                .neighbors_in(c, q)
                .iter()
                .find(|&d| reach.contains(d))
                .ok_or_else(|| {
                    SolveError::Internal(format!("no neighbor of {c} contacts {k:?}"))
                })?;
            let ctx = KContext::new(self.g, c, d, k)?;
            let r = self.solve_component(&ctx)?;
            acc = acc.join(r);
        }
        Ok(acc)
    }

    fn kernel(&mut self, s: &VertexSet) -> Result<SolveResult, SolveError> {
        match self.g.bipartition(s) {
            BipartiteCheck::Bipartite(b) => self.kernel_with(s, b),
            BipartiteCheck::OddCycle(c) => Err(violation(Rule::OddAntiNeighborhood, c)),
        }
    }

    fn kernel_with(
        &mut self,
        s: &VertexSet,
        b: crate::graph::Bipartition,
    ) -> Result<SolveResult, SolveError> {
        self.stats.bipartite_calls += 1;
        let sol = bipartite::solve_with_bipartition(self.g, s, self.w, b).map_err(|e| match e {
            BipartiteError::NotBipartite(c) => violation(Rule::OddAntiNeighborhood, c),
            BipartiteError::WeightOverflow => SolveError::WeightOverflow,
        })?;
        if set_weight(self.w, &sol.witness) != sol.weight {
            return Err(SolveError::Internal(format!(
                "min-cut witness on {s:?} misses the reported weight {}",
                sol.weight
            )));
        }
        Ok(SolveResult {
            weight: sol.weight,
            witness: sol.witness,
            cover: self.record().then(|| CoverFamily::single(s.clone())),
        })
    }

    /// MWIS on a set whose components are nearly bipartite:
    /// `max(0, max_v w(v) + α(A(v)))` per non-bipartite component.
    pub fn nearly_bipartite_solve(&mut self, s: &VertexSet) -> Result<SolveResult, SolveError> {
        self.stats.nearly_bipartite_calls += 1;
        let mut acc = SolveResult::empty(self.n(), self.record());
        for q in self.g.components_within(s) {
            let r = match self.g.bipartition(&q) {
                BipartiteCheck::Bipartite(b) => self.kernel_with(&q, b)?,
                BipartiteCheck::OddCycle(_) => {
                    let mut split = self.split();
                    for v in q.iter() {
                        let anti = self.g.anti_neighbors_in(v, &q);
                        let mut r = self.kernel(&anti)?;
                        r.weight += self.w.get(v);
                        r.witness.insert(v);
                        if let Some(c) = r.cover.as_mut() {
                            c.insert_everywhere(v);
                        }
                        self.offer(&mut split, r);
                    }
                    split.finish()
                }
            };
            acc = acc.join(r);
        }
        Ok(acc)
    }

    /// Nearly-bipartite solve on a set that must contain no induced C5.
    fn c5_free_solve(&mut self, s: &VertexSet) -> Result<SolveResult, SolveError> {
        if let Some(c5) = find_induced_c5(self.g, s) {
            return Err(violation(Rule::C5InBranch, c5.vertices));
        }
        self.nearly_bipartite_solve(s)
    }

    /// α_w(G[K]) for a frame: dispatches on whether G[Z] is bipartite.
    pub fn solve_component(&mut self, ctx: &KContext) -> Result<SolveResult, SolveError> {
        self.stats.frames += 1;
        if self.cfg.check_path_patterns {
            ctx.check_path_patterns(self.g)?;
        }
        if self.g.is_bipartite_within(&ctx.z) {
            self.solve_bipartite_z(ctx)
        } else {
            self.solve_odd_z(ctx)
        }
    }
}

#[cfg(test)]
mod tests;
