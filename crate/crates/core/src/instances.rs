//! Seeded generators of (P7, triangle)-free test graphs.
//!
//! Randomness comes from SplitMix64 (`rand_xoshiro::SplitMix64`): state
//! advances by the odd constant `0x9E3779B97F4A7C15`, outputs are mixed with
//! multipliers `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB` (shifts 30, 27,
//! 31). The algorithm is platform independent, so a [`GenSpec`] fully
//! determines its graph. Every generator draws all edge decisions first, in
//! lexicographic pair order, and the weights last, in vertex order.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet, WeightMap};
use crate::recognition::{check_class, find_induced_path};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("edge probability {0} permille is above 1000")]
    Probability(u32),
    #[error("a blow-up needs exactly 5 bag sizes, each at least 1 (got {0:?})")]
    Bags(Vec<usize>),
    #[error("weight range [{0}, {1}] is empty")]
    WeightRange(u64, u64),
    #[error("no in-class sample after {0} attempts; lower n or the edge probability")]
    RetriesExhausted(u32),
    #[error("generator kind {0} does not match this operation")]
    WrongKind(GenKind),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenKind {
    BipartiteRandom,
    C5Blowup,
    Rejection,
    FrameGadget,
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenKind::BipartiteRandom => "bipartite_random",
            GenKind::C5Blowup => "c5_blowup",
            GenKind::Rejection => "rejection",
            GenKind::FrameGadget => "frame_gadget",
        })
    }
}

impl FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bipartite_random" | "bipartite" => Ok(GenKind::BipartiteRandom),
            "c5_blowup" | "blowup" => Ok(GenKind::C5Blowup),
            "rejection" | "rejection_triangle_p7_free" => Ok(GenKind::Rejection),
            "frame_gadget" | "gadget" => Ok(GenKind::FrameGadget),
            other => Err(format!("unknown generator kind `{other}`")),
        }
    }
}

/// Which frame case a gadget is built to exercise. In every gadget vertex 0
/// plays `c` and vertex 1 plays `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GadgetCase {
    /// A C5 with one vertex seen by `d` (the nail).
    Type1C5,
    /// A C5 with two vertices seen by `d`.
    Type2C5,
    /// A bipartite Z-component properly one-side contacted from H.
    Green,
    /// Only half-joins from H into Z, with P3-endpoints in H.
    NoGreen,
    /// Z is a C5 contacted by one H-vertex.
    Case2,
}

impl GadgetCase {
    pub const ALL: [GadgetCase; 5] = [
        GadgetCase::Type1C5,
        GadgetCase::Type2C5,
        GadgetCase::Green,
        GadgetCase::NoGreen,
        GadgetCase::Case2,
    ];

    /// The hand-built base graph.
    pub fn base(self) -> (usize, Vec<(usize, usize)>) {
        match self {
            GadgetCase::Type1C5 => (
                7,
                vec![(0, 1), (1, 6), (2, 3), (3, 4), (4, 5), (5, 6), (6, 2)],
            ),
            GadgetCase::Type2C5 => (
                7,
                vec![
                    (0, 1),
                    (1, 2),
                    (1, 4),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (6, 2),
                ],
            ),
            GadgetCase::Green => (
                7,
                vec![
                    (0, 1),
                    (1, 2),
                    (1, 3),
                    (2, 4),
                    (3, 4),
                    (3, 6),
                    (4, 5),
                    (5, 6),
                ],
            ),
            GadgetCase::NoGreen => (
                7,
                vec![
                    (0, 1),
                    (1, 2),
                    (1, 3),
                    (2, 4),
                    (3, 5),
                    (4, 5),
                    (2, 6),
                    (3, 6),
                ],
            ),
            GadgetCase::Case2 => (
                8,
                vec![
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (2, 5),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (6, 7),
                    (7, 3),
                ],
            ),
        }
    }
}

impl FromStr for GadgetCase {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "type1_c5" => Ok(GadgetCase::Type1C5),
            "type2_c5" => Ok(GadgetCase::Type2C5),
            "green" => Ok(GadgetCase::Green),
            "no_green" => Ok(GadgetCase::NoGreen),
            "case2" => Ok(GadgetCase::Case2),
            other => Err(format!("unknown gadget case `{other}`")),
        }
    }
}

impl fmt::Display for GadgetCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GadgetCase::Type1C5 => "type1_c5",
            GadgetCase::Type2C5 => "type2_c5",
            GadgetCase::Green => "green",
            GadgetCase::NoGreen => "no_green",
            GadgetCase::Case2 => "case2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub kind: GenKind,
    /// Vertex count; for gadgets the target size after random growth (a value
    /// at or below the base size yields the bare gadget).
    pub n: usize,
    pub bags: Vec<usize>,
    pub p_permille: u32,
    pub seed: u64,
    pub wmin: u64,
    pub wmax: u64,
    pub case: GadgetCase,
    pub max_retries: u32,
}

impl GenSpec {
    pub fn new(kind: GenKind) -> Self {
        GenSpec {
            kind,
            n: 0,
            bags: vec![1; 5],
            p_permille: 0,
            seed: 0,
            wmin: 1,
            wmax: 1,
            case: GadgetCase::Type1C5,
            max_retries: 10_000,
        }
    }

    pub fn bipartite(n: usize, p_permille: u32, seed: u64) -> Self {
        GenSpec {
            n,
            p_permille,
            seed,
            ..Self::new(GenKind::BipartiteRandom)
        }
    }

    pub fn blowup(bags: [usize; 5], seed: u64) -> Self {
        GenSpec {
            bags: bags.to_vec(),
            seed,
            ..Self::new(GenKind::C5Blowup)
        }
    }

    pub fn rejection(n: usize, p_permille: u32, seed: u64) -> Self {
        GenSpec {
            n,
            p_permille,
            seed,
            ..Self::new(GenKind::Rejection)
        }
    }

    pub fn gadget(case: GadgetCase, n: usize, seed: u64) -> Self {
        GenSpec {
            case,
            n,
            seed,
            ..Self::new(GenKind::FrameGadget)
        }
    }

    pub fn weights(mut self, wmin: u64, wmax: u64) -> Self {
        self.wmin = wmin;
        self.wmax = wmax;
        self
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.p_permille > 1000 {
            return Err(GenError::Probability(self.p_permille));
        }
        if self.wmin > self.wmax {
            return Err(GenError::WeightRange(self.wmin, self.wmax));
        }
        if self.kind == GenKind::C5Blowup && (self.bags.len() != 5 || self.bags.contains(&0)) {
            return Err(GenError::Bags(self.bags.clone()));
        }
        Ok(())
    }

    /// One line per field, for echoing into generated files.
    pub fn describe(&self) -> Vec<String> {
        let mut out = vec![format!("kind {}", self.kind), format!("seed {}", self.seed)];
        match self.kind {
            GenKind::C5Blowup => out.push(format!(
                "bags {}",
                self.bags
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            )),
            GenKind::FrameGadget => out.push(format!("case {} n {}", self.case, self.n)),
            _ => out.push(format!("n {} p_permille {}", self.n, self.p_permille)),
        }
        out.push(format!("weights {}..={}", self.wmin, self.wmax));
        out
    }
}

/// Dispatches on `spec.kind`.
pub fn generate(spec: &GenSpec) -> Result<(Graph, WeightMap), GenError> {
    match spec.kind {
        GenKind::BipartiteRandom => gen_bipartite(spec),
        GenKind::C5Blowup => gen_c5_blowup(spec),
        GenKind::Rejection => gen_rejection(spec),
        GenKind::FrameGadget => gen_frame_gadget(spec),
    }
}

fn rng_for(spec: &GenSpec) -> SplitMix64 {
    SplitMix64::seed_from_u64(spec.seed)
}

fn draw_weights(rng: &mut SplitMix64, n: usize, spec: &GenSpec) -> WeightMap {
    WeightMap::new(
        (0..n)
            .map(|_| rng.gen_range(spec.wmin..=spec.wmax))
            .collect(),
    )
}

fn coin(rng: &mut SplitMix64, permille: u32) -> bool {
    rng.gen_range(0..1000u32) < permille
}

fn require(spec: &GenSpec, kind: GenKind) -> Result<(), GenError> {
    spec.validate()?;
    if spec.kind != kind {
        return Err(GenError::WrongKind(spec.kind));
    }
    Ok(())
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("generators emit in-range simple edges")
}

/// Random bipartite graph with sides `0..⌊n/2⌋` and `⌊n/2⌋..n`. Triangle-free
/// by construction; P7-freeness is not guaranteed.
pub fn gen_bipartite(spec: &GenSpec) -> Result<(Graph, WeightMap), GenError> {
    require(spec, GenKind::BipartiteRandom)?;
    let mut rng = rng_for(spec);
    let half = spec.n / 2;
    let mut edges = Vec::new();
    for u in 0..half {
        for v in half..spec.n {
            if coin(&mut rng, spec.p_permille) {
                edges.push((u, v));
            }
        }
    }
    let w = draw_weights(&mut rng, spec.n, spec);
    Ok((build(spec.n, &edges), w))
}

/// Five independent bags, consecutive bags (cyclically) completely joined.
pub fn gen_c5_blowup(spec: &GenSpec) -> Result<(Graph, WeightMap), GenError> {
    require(spec, GenKind::C5Blowup)?;
    let mut rng = rng_for(spec);
    let mut starts = vec![0];
    for &b in &spec.bags {
        starts.push(starts.last().copied().unwrap_or(0) + b);
    }
    let n = starts[5];
    let bag = |i: usize| starts[i]..starts[i + 1];
    let mut edges = Vec::new();
    for i in 0..5 {
        for u in bag(i) {
            for v in bag((i + 1) % 5) {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    let w = draw_weights(&mut rng, n, spec);
    Ok((build(n, &edges), w))
}

/// G(n, p) samples with triangles broken (drop the smallest edge of the
/// lexicographically smallest triangle until none is left), kept once they
/// are P7-free.
pub fn gen_rejection(spec: &GenSpec) -> Result<(Graph, WeightMap), GenError> {
    require(spec, GenKind::Rejection)?;
    let mut rng = rng_for(spec);
    let n = spec.n;
    for _ in 0..spec.max_retries.max(1) {
        let mut rows = vec![VertexSet::empty(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if coin(&mut rng, spec.p_permille) {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
            }
        }
        while let Some((a, b)) = smallest_triangle_edge(&rows) {
            rows[a].remove(b);
            rows[b].remove(a);
        }
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect();
        let g = build(n, &edges);
        if find_induced_path(&g, 7).is_none() {
            let w = draw_weights(&mut rng, n, spec);
            return Ok((g, w));
        }
    }
    Err(GenError::RetriesExhausted(spec.max_retries))
}

fn smallest_triangle_edge(rows: &[VertexSet]) -> Option<(usize, usize)> {
    for a in 0..rows.len() {
        for b in rows[a].iter().filter(|&b| b > a) {
            if rows[a].intersection(&rows[b]).iter().any(|c| c > b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// A base gadget for `spec.case`, grown to `spec.n` vertices by attaching new
/// vertices to small random independent sets and then trying `n` random extra
/// edges, keeping every step (P7, triangle)-free.
pub fn gen_frame_gadget(spec: &GenSpec) -> Result<(Graph, WeightMap), GenError> {
    require(spec, GenKind::FrameGadget)?;
    let mut rng = rng_for(spec);
    let (base_n, base_edges) = spec.case.base();
    let mut n = base_n;
    let mut edges = base_edges;
    let mut failures = 0u32;
    while n < spec.n {
        let want = rng.gen_range(1..=3usize);
        let g = build(n, &edges);
        let mut nbrs: Vec<usize> = Vec::new();
        for _ in 0..want {
            let v = rng.gen_range(0..n);
            if !nbrs.contains(&v) && nbrs.iter().all(|&u| !g.has_edge(u, v)) {
                nbrs.push(v);
            }
        }
        let mut trial = edges.clone();
        trial.extend(nbrs.iter().map(|&u| (u, n)));
        if check_class(&build(n + 1, &trial)).is_ok() {
            edges = trial;
            n += 1;
        } else {
            failures += 1;
            if failures >= spec.max_retries.max(1) {
                return Err(GenError::RetriesExhausted(spec.max_retries));
            }
        }
    }
    if spec.n > base_n {
        for _ in 0..n {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let g = build(n, &edges);
            if u == v || g.has_edge(u, v) {
                continue;
            }
            let mut trial = edges.clone();
            trial.push((u.min(v), u.max(v)));
            if check_class(&build(n, &trial)).is_ok() {
                edges = trial;
            }
        }
    }
    let g = build(n, &edges);
    debug_assert!(check_class(&g).is_ok());
    let w = draw_weights(&mut rng, n, spec);
    Ok((g, w))
}
