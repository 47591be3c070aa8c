//! Oracle-equivalence and property checks, shared by the `selftest`
//! subcommand and the acceptance tests.
//!
//! Each suite is deterministic for a given seed. Samples run on the rayon
//! pool and are merged by sample index, so the first failure reported is
//! always the lowest-indexed one regardless of thread count.

use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;

use crate::bipartite::solve_bipartite;
use crate::graph::{set_weight, Graph, VertexSet, WeightMap};
use crate::instances::{
    gen_bipartite, gen_c5_blowup, gen_frame_gadget, gen_rejection, GadgetCase, GenSpec,
};
use crate::io::write_graph;
use crate::oracle::{brute_force_mwis, enumerate_maximal_is};
use crate::recognition::{check_class, find_induced_c5, induced_c5s};
use crate::solver::{solve, solve_with, SolveError, SolverConfig, Stats};

/// A graph that broke a check, with a description of what went wrong.
#[derive(Debug, Clone)]
pub struct Failure {
    pub label: String,
    pub detail: String,
    pub graph: Graph,
    pub weights: WeightMap,
}

/// Counts for one suite plus the first failure, if any.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checked: u64,
    pub failed: u64,
    pub first_failure: Option<Box<Failure>>,
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    fn new(name: &'static str) -> Self {
        SuiteOutcome {
            name,
            checked: 0,
            failed: 0,
            first_failure: None,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn absorb(&mut self, result: Check) {
        self.checked += 1;
        if let Err(f) = result {
            self.failed += 1;
            self.first_failure.get_or_insert(f);
        }
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} checked, {} failed",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.checked,
            self.failed
        )?;
        for n in &self.notes {
            write!(f, "\n    {n}")?;
        }
        if let Some(x) = &self.first_failure {
            write!(f, "\n    first failure [{}]: {}", x.label, x.detail)?;
        }
        Ok(())
    }
}

fn failure(
    label: impl Into<String>,
    detail: impl Into<String>,
    g: &Graph,
    w: &WeightMap,
) -> Box<Failure> {
    Box::new(Failure {
        label: label.into(),
        detail: detail.into(),
        graph: g.clone(),
        weights: w.clone(),
    })
}

/// Outcome of one sample.
pub type Check = Result<(), Box<Failure>>;

fn rng_for(seed: u64, index: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Runs `samples` independent checks in parallel and merges them by index.
fn run_samples<F>(name: &'static str, samples: u64, check: F) -> SuiteOutcome
where
    F: Fn(u64) -> Check + Sync,
{
    let results: Vec<Check> = (0..samples).into_par_iter().map(&check).collect();
    let mut out = SuiteOutcome::new(name);
    for r in results {
        out.absorb(r);
    }
    out
}

/// Solver weight against the brute-force oracle, plus witness validity.
/// `perturb` adds to the solver's answer, simulating a broken solver.
pub fn check_against_oracle(label: &str, g: &Graph, w: &WeightMap, perturb: u64) -> Check {
    let expected = brute_force_mwis(g, w)
        .map_err(|e| failure(label, format!("oracle: {e}"), g, w))?
        .weight;
    let r = solve(g, w, false).map_err(|e| failure(label, format!("solver: {e}"), g, w))?;
    if !g.is_independent(&r.witness) || set_weight(w, &r.witness) != r.weight {
        return Err(failure(
            label,
            "witness is not independent or misweighted",
            g,
            w,
        ));
    }
    let got = r.weight + perturb;
    if got != expected {
        return Err(failure(
            label,
            format!("solver {got}, oracle {expected}"),
            g,
            w,
        ));
    }
    Ok(())
}

/// Adjacency bitmasks for the `mask`-th labeled graph on `n` vertices, pairs
/// taken in lexicographic order.
fn graph_from_mask(n: usize, mask: u64) -> (Vec<u8>, Vec<(usize, usize)>) {
    let mut rows = vec![0u8; n];
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    (rows, edges)
}

/// Every labeled graph on at most `n_max` (≤ 8) vertices that is in the
/// class, with unit weights and one seeded weight draw in 0..=9 each.
pub fn exhaustive(n_max: usize, seed: u64, perturb: u64) -> SuiteOutcome {
    assert!(n_max <= 8, "exhaustive sweep is limited to 8 vertices");
    let mut out = SuiteOutcome::new("exhaustive");
    let mut in_class_total = 0u64;
    for n in 0..=n_max {
        let pairs = n * n.saturating_sub(1) / 2;
        let results: Vec<Option<[Check; 2]>> = (0..1u64 << pairs)
            .into_par_iter()
            .map(|mask| {
                let (rows, edges) = graph_from_mask(n, mask);
                let has_triangle = edges.iter().any(|&(u, v)| rows[u] & rows[v] != 0);
                if has_triangle {
                    return None;
                }
                let g = Graph::new(n, &edges).expect("valid edges");
                if check_class(&g).is_err() {
                    return None;
                }
                let label = format!("n={n} mask={mask:#x}");
                let unit = check_against_oracle(&label, &g, &WeightMap::unit(n), perturb);
                let mut rng = rng_for(seed, (n as u64) << 32 | mask);
                let w = WeightMap::new((0..n).map(|_| rng.gen_range(0..=9)).collect());
                Some([unit, check_against_oracle(&label, &g, &w, perturb)])
            })
            .collect();
        for pair in results.into_iter().flatten() {
            in_class_total += 1;
            for r in pair {
                out.absorb(r);
            }
        }
    }
    out.notes.push(format!(
        "{in_class_total} in-class labeled graphs on 0..={n_max} vertices, two weightings each"
    ));
    out
}

/// One in-class instance: a rejection sample, a C5 blow-up or a grown frame
/// gadget, chosen by `index % 3`, with `1..=n_max` vertices and weights in
/// `wmin..=wmax`.
pub fn random_instance(
    seed: u64,
    index: u64,
    n_max: usize,
    wmin: u64,
    wmax: u64,
) -> (String, Graph, WeightMap) {
    let mut rng = rng_for(seed, index);
    let n_max = n_max.max(1);
    let sub_seed: u64 = rng.gen();
    match index % 3 {
        1 if n_max >= 5 => {
            let n = rng.gen_range(5..=n_max);
            let mut bags = [1usize; 5];
            for _ in 5..n {
                bags[rng.gen_range(0..5)] += 1;
            }
            let spec = GenSpec::blowup(bags, sub_seed).weights(wmin, wmax);
            let (g, w) = gen_c5_blowup(&spec).expect("valid bags");
            (format!("blowup {bags:?} seed {sub_seed}"), g, w)
        }
        2 if n_max >= 8 => {
            let case = GadgetCase::ALL[rng.gen_range(0..GadgetCase::ALL.len())];
            let n = rng.gen_range(8..=n_max);
            let spec = GenSpec::gadget(case, n, sub_seed).weights(wmin, wmax);
            let (g, w) = gen_frame_gadget(&spec).expect("gadget growth succeeds");
            (format!("gadget {case} n={n} seed {sub_seed}"), g, w)
        }
        _ => {
            let mut n = rng.gen_range(1..=n_max);
            loop {
                for _ in 0..20 {
                    let p = rng.gen_range(100..=450);
                    let s: u64 = rng.gen();
                    let spec = GenSpec {
                        max_retries: 200,
                        ..GenSpec::rejection(n, p, s).weights(wmin, wmax)
                    };
                    if let Ok((g, w)) = gen_rejection(&spec) {
                        return (format!("rejection n={n} p={p} seed {s}"), g, w);
                    }
                }
                n -= 1;
            }
        }
    }
}

/// Random in-class instances (n ≤ `n_max`, weights 0..=100) against the
/// oracle.
pub fn random_equivalence(samples: u64, n_max: usize, seed: u64, perturb: u64) -> SuiteOutcome {
    run_samples("random equivalence", samples, |i| {
        let (label, g, w) = random_instance(seed, i, n_max, 0, 100);
        check_against_oracle(&label, &g, &w, perturb)
    })
}

/// Maximum matching by augmenting paths, independent of the flow code.
pub fn max_matching(g: &Graph, left: &VertexSet) -> usize {
    fn augment(g: &Graph, u: usize, seen: &mut [bool], mate: &mut [Option<usize>]) -> bool {
        for &v in g.neighbor_list(u) {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if mate[v].is_none_or(|m| augment(g, m, seen, mate)) {
                mate[v] = Some(u);
                return true;
            }
        }
        false
    }
    let n = g.vertex_count();
    let mut mate = vec![None; n];
    left.iter()
        .filter(|&u| augment(g, u, &mut vec![false; n], &mut mate))
        .count()
}

/// Bipartite kernel: optimum plus minimum cover equals the total weight, the
/// witness complement covers every edge, and the unit-weight optimum equals
/// n minus a maximum matching.
pub fn bipartite_duality(samples: u64, n_max: usize, seed: u64) -> SuiteOutcome {
    run_samples("bipartite duality", samples, |i| {
        let mut rng = rng_for(seed, i);
        let n = rng.gen_range(1..=n_max.max(1));
        let p = rng.gen_range(0..=1000);
        let spec = GenSpec::bipartite(n, p, rng.gen()).weights(0, 100);
        let (g, w) = gen_bipartite(&spec).expect("valid spec");
        let label = format!("bipartite n={n} p={p} seed {}", spec.seed);
        let all = g.all();
        let sol =
            solve_bipartite(&g, &all, &w).map_err(|e| failure(&label, e.to_string(), &g, &w))?;
        let total = set_weight(&w, &all);
        if sol.weight + sol.cover_weight != total {
            return Err(failure(
                &label,
                "optimum + cover weight != total weight",
                &g,
                &w,
            ));
        }
        let cover = sol.vertex_cover(&all);
        if g.edges()
            .any(|(u, v)| !cover.contains(u) && !cover.contains(v))
        {
            return Err(failure(&label, "witness complement misses an edge", &g, &w));
        }
        if set_weight(&w, &cover) != sol.cover_weight {
            return Err(failure(
                &label,
                "cover weight disagrees with its set",
                &g,
                &w,
            ));
        }
        let unit = WeightMap::unit(n);
        let u =
            solve_bipartite(&g, &all, &unit).map_err(|e| failure(&label, e.to_string(), &g, &w))?;
        let left = VertexSet::from_ids(n, 0..n / 2);
        let matching = max_matching(&g, &left);
        if u.weight as usize != n - matching {
            return Err(failure(
                &label,
                format!(
                    "unit optimum {} but n - matching = {}",
                    u.weight,
                    n - matching
                ),
                &g,
                &w,
            ));
        }
        Ok(())
    })
}

/// Blow-up of C7 (bags of the given sizes, consecutive bags joined).
pub fn c7_blowup(bags: &[usize; 7]) -> Graph {
    let mut start = [0usize; 8];
    for i in 0..7 {
        start[i + 1] = start[i] + bags[i];
    }
    let mut edges = Vec::new();
    for i in 0..7 {
        for u in start[i]..start[i + 1] {
            let j = (i + 1) % 7;
            for v in start[j]..start[j + 1] {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    Graph::new(start[7], &edges).expect("valid blow-up")
}

/// Connected (P7, triangle, C5)-free graphs: C7 blow-ups and connected,
/// C5-free rejection samples with at least one odd cycle where possible.
pub fn c5_free_instance(seed: u64, index: u64, n_max: usize) -> (String, Graph) {
    let mut rng = rng_for(seed, index);
    if index.is_multiple_of(2) || n_max < 7 {
        let mut bags = [1usize; 7];
        let extra = rng.gen_range(0..=n_max.saturating_sub(7).min(14));
        for _ in 0..extra {
            bags[rng.gen_range(0..7)] += 1;
        }
        return (format!("c7 blowup {bags:?}"), c7_blowup(&bags));
    }
    loop {
        let n = rng.gen_range(3..=n_max.max(3));
        let spec = GenSpec {
            max_retries: 50,
            ..GenSpec::rejection(n, rng.gen_range(100..=500), rng.gen())
        };
        if let Ok((g, _)) = gen_rejection(&spec) {
            if g.is_connected_within(&g.all()) && find_induced_c5(&g, &g.all()).is_none() {
                return (format!("rejection n={n} seed {}", spec.seed), g);
            }
        }
    }
}

/// Every anti-neighborhood of a connected (P7, triangle, C5)-free graph is
/// bipartite.
pub fn nearly_bipartite_property(samples: u64, n_max: usize, seed: u64) -> SuiteOutcome {
    let mut out = run_samples("anti-neighborhoods bipartite", samples, |i| {
        let (label, g) = c5_free_instance(seed, i, n_max);
        let w = WeightMap::unit(g.vertex_count());
        if check_class(&g).is_err() || find_induced_c5(&g, &g.all()).is_some() {
            return Err(failure(&label, "generator left the C5-free class", &g, &w));
        }
        for v in g.vertices() {
            let anti = g.anti_neighborhood(v).expect("vertex in range");
            if !g.is_bipartite_within(&anti) {
                return Err(failure(&label, format!("A({v}) is not bipartite"), &g, &w));
            }
        }
        Ok(())
    });
    let odd = (0..samples)
        .filter(|&i| {
            let (_, g) = c5_free_instance(seed, i, n_max);
            !g.is_bipartite_within(&g.all())
        })
        .count();
    out.notes
        .push(format!("{odd} of {samples} graphs are non-bipartite"));
    out
}

/// Instances likely to hold two vertex-disjoint C5s (blow-ups with doubled
/// bags, grown gadgets), interleaved with the general random corpus.
fn multi_c5_instance(seed: u64, index: u64, n_max: usize) -> (String, Graph) {
    let mut rng = rng_for(seed, index);
    if index % 3 == 2 {
        let (label, g, _) = random_instance(seed, index / 3, n_max, 1, 1);
        return (label, g);
    }
    if index.is_multiple_of(3) {
        let mut bags = [2usize; 5];
        for _ in 10..rng.gen_range(10..=n_max.max(10)) {
            bags[rng.gen_range(0..5)] += 1;
        }
        let (g, _) = gen_c5_blowup(&GenSpec::blowup(bags, 0)).expect("valid bags");
        (format!("blowup {bags:?}"), g)
    } else {
        let case = GadgetCase::ALL[rng.gen_range(0..GadgetCase::ALL.len())];
        let n = rng.gen_range(10..=n_max.max(10));
        let s = rng.gen();
        let (g, _) =
            gen_frame_gadget(&GenSpec::gadget(case, n, s)).expect("gadget growth succeeds");
        (format!("gadget {case} n={n} seed {s}"), g)
    }
}

/// Any two vertex-disjoint induced C5s of an in-class graph are joined by at
/// least two edges.
pub fn disjoint_c5_edges(samples: u64, n_max: usize, seed: u64) -> SuiteOutcome {
    let pairs = std::sync::atomic::AtomicU64::new(0);
    let graphs = std::sync::atomic::AtomicU64::new(0);
    let mut out = run_samples("disjoint C5 crossing edges", samples, |i| {
        let (label, g) = multi_c5_instance(seed, i, n_max);
        let w = WeightMap::unit(g.vertex_count());
        if check_class(&g).is_err() {
            return Err(failure(&label, "instance is not in class", &g, &w));
        }
        let n = g.vertex_count();
        let cycles: Vec<VertexSet> = induced_c5s(&g, &g.all())
            .into_iter()
            .map(|c| VertexSet::from_ids(n, c))
            .collect();
        let mut found = 0;
        for (a, ca) in cycles.iter().enumerate() {
            for cb in &cycles[a + 1..] {
                if !ca.is_disjoint(cb) {
                    continue;
                }
                found += 1;
                if g.edges_between(ca, cb) < 2 {
                    return Err(failure(
                        &label,
                        format!(
                            "C5s {:?} and {:?} share fewer than 2 edges",
                            ca.to_vec(),
                            cb.to_vec()
                        ),
                        &g,
                        &w,
                    ));
                }
            }
        }
        if found > 0 {
            graphs.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            pairs.fetch_add(found, std::sync::atomic::Ordering::Relaxed);
        }
        Ok(())
    });
    out.notes.push(format!(
        "{} graphs held disjoint C5 pairs, {} pairs checked",
        graphs.into_inner(),
        pairs.into_inner()
    ));
    out
}

/// Every maximal independent set lies in some cover member and every member
/// induces a bipartite graph. Notes record the largest family per n.
pub fn cover_property(samples: u64, n_max: usize, seed: u64) -> SuiteOutcome {
    let n_max = n_max.min(20);
    let sizes: Vec<(usize, usize)> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let (_, g, w) = random_instance(seed, i, n_max, 1, 1);
            let size = solve(&g, &w, true)
                .ok()
                .and_then(|r| r.cover)
                .map_or(0, |c| c.len());
            (g.vertex_count(), size)
        })
        .collect();
    let mut out = run_samples("cover family", samples, |i| {
        let (label, g, w) = random_instance(seed, i, n_max, 1, 1);
        let r = solve(&g, &w, true).map_err(|e| failure(&label, e.to_string(), &g, &w))?;
        let cover = r
            .cover
            .ok_or_else(|| failure(&label, "no cover recorded", &g, &w))?;
        if let Some(m) = cover.members().iter().find(|m| !g.is_bipartite_within(m)) {
            return Err(failure(
                &label,
                format!("member {:?} is not bipartite", m.to_vec()),
                &g,
                &w,
            ));
        }
        let mis = enumerate_maximal_is(&g).map_err(|e| failure(&label, e.to_string(), &g, &w))?;
        if let Some(s) = mis.iter().find(|s| !cover.covers(s)) {
            return Err(failure(
                &label,
                format!("maximal set {:?} is uncovered", s.to_vec()),
                &g,
                &w,
            ));
        }
        Ok(())
    });
    let mut by_n: std::collections::BTreeMap<usize, (usize, usize, usize)> = Default::default();
    for (n, s) in sizes {
        let e = by_n.entry(n).or_insert((0, 0, 0));
        e.0 += 1;
        e.1 += s;
        e.2 = e.2.max(s);
    }
    out.notes.push(
        by_n.iter()
            .map(|(n, (c, sum, max))| {
                format!("n={n}: mean {:.1} max {max}", *sum as f64 / *c as f64)
            })
            .collect::<Vec<_>>()
            .join(", "),
    );
    let max_points: Vec<(f64, f64)> = by_n
        .iter()
        .filter(|(&n, _)| n >= 5)
        .map(|(&n, &(_, _, max))| (n as f64, max as f64))
        .collect();
    if let Some(slope) = log_log_slope(&max_points) {
        out.notes.push(format!(
            "log-log slope of the largest family against n: {slope:.2}"
        ));
    }
    out
}

/// A random graph outside the class: a triangle or an induced P7 is planted
/// if the sample happens to be in class.
pub fn out_of_class_instance(seed: u64, index: u64, n_max: usize) -> (String, Graph, WeightMap) {
    let mut rng = rng_for(seed, index);
    let n = rng.gen_range(7..=n_max.max(7));
    let p = rng.gen_range(50..=500);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_range(0..1000) < p {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(n, &edges).expect("valid edges");
    let w = WeightMap::new((0..n).map(|_| rng.gen_range(0..=20)).collect());
    if check_class(&g).is_err() {
        return (format!("random n={n} p={p}"), g, w);
    }
    // plant a triangle on 0, 1, 2, or on odd indices an induced P7 on 0..7
    if index.is_multiple_of(2) {
        for e in [(0, 1), (1, 2), (0, 2)] {
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
        (
            format!("random n={n} p={p} + triangle"),
            Graph::new(n, &edges).expect("valid"),
            w,
        )
    } else {
        // only the edges inside 0..7 decide whether 0-1-...-6 is induced
        let planted: Vec<(usize, usize)> = (0..6)
            .map(|i| (i, i + 1))
            .chain(edges.iter().copied().filter(|&(_, v)| v >= 7))
            .collect();
        let g = Graph::new(n, &planted).expect("valid");
        (format!("random n={n} p={p} + induced P7"), g, w)
    }
}

/// Out-of-class graphs: the class check produces a verifiable witness, and
/// the solver without the check is exact or reports a class violation.
pub fn out_of_class(samples: u64, n_max: usize, seed: u64) -> SuiteOutcome {
    let flagged = std::sync::atomic::AtomicU64::new(0);
    let mut out = run_samples("out-of-class inputs", samples, |i| {
        let (label, g, w) = out_of_class_instance(seed, i, n_max);
        let witness = match check_class(&g) {
            Ok(()) => return Err(failure(&label, "instance is unexpectedly in class", &g, &w)),
            Err(x) => x,
        };
        if !witness.verify(&g) {
            return Err(failure(
                &label,
                format!("witness {witness:?} does not verify"),
                &g,
                &w,
            ));
        }
        let expected = brute_force_mwis(&g, &w)
            .map_err(|e| failure(&label, e.to_string(), &g, &w))?
            .weight;
        match solve(&g, &w, false) {
            Ok(r) if r.weight == expected && g.is_independent(&r.witness) => Ok(()),
            Ok(r) => Err(failure(
                &label,
                format!("solver {} vs oracle {expected}", r.weight),
                &g,
                &w,
            )),
            Err(SolveError::ClassViolation(_)) => {
                flagged.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                Ok(())
            }
            Err(e) => Err(failure(&label, format!("unexpected error {e}"), &g, &w)),
        }
    });
    out.notes.push(format!(
        "{} raised a class violation, the rest were solved exactly",
        flagged.into_inner()
    ));
    out
}

/// One timed solve of a unit-weight balanced C5 blow-up.
#[derive(Debug, Clone)]
pub struct ScalingPoint {
    pub n: usize,
    pub millis: f64,
    pub stats: Stats,
    pub weight: u64,
}

/// Times unit-weight C5 blow-ups with `n / 5` vertices per bag.
pub fn scaling(sizes: &[usize], parallel: bool) -> Result<Vec<ScalingPoint>, SolveError> {
    sizes
        .iter()
        .map(|&n| {
            let bag = (n / 5).max(1);
            let (g, w) = gen_c5_blowup(&GenSpec::blowup([bag; 5], 0)).expect("valid bags");
            let cfg = SolverConfig {
                parallel,
                ..SolverConfig::default()
            };
            let start = Instant::now();
            let sol = solve_with(&g, &w, &cfg)?;
            Ok(ScalingPoint {
                n: g.vertex_count(),
                millis: start.elapsed().as_secs_f64() * 1e3,
                stats: sol.stats,
                weight: sol.result.weight,
            })
        })
        .collect()
}

/// Least-squares slope of log(time) against log(n).
pub fn log_log_slope(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = pts.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Greedily deletes vertices while `still_fails` keeps holding.
pub fn minimize<F>(g: &Graph, w: &WeightMap, still_fails: F) -> (Graph, WeightMap)
where
    F: Fn(&Graph, &WeightMap) -> bool,
{
    let mut cur = (g.clone(), w.clone());
    let mut v = 0;
    while v < cur.0.vertex_count() {
        let mut keep = cur.0.all();
        keep.remove(v);
        let sub = cur.0.induced_subgraph(&keep).expect("subset of the graph");
        let sw = WeightMap::new(sub.to_parent.iter().map(|&p| cur.1.get(p)).collect());
        if still_fails(&sub.graph, &sw) {
            cur = (sub.graph, sw);
        } else {
            v += 1;
        }
    }
    cur
}

/// Settings of a full self-test run.
#[derive(Debug, Clone)]
pub struct SelftestConfig {
    pub n_max: usize,
    pub samples: u64,
    pub seed: u64,
    /// Adds one to every solver answer, to exercise the failure path.
    pub inject_mismatch: bool,
    /// Where reproductions are written; the system temp dir by default.
    pub dump_dir: Option<PathBuf>,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            n_max: 7,
            samples: 200,
            seed: 1,
            inject_mismatch: false,
            dump_dir: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SelftestReport {
    pub suites: Vec<SuiteOutcome>,
    /// Minimized reproduction of the first failure, written as a graph file.
    pub reproduction: Option<PathBuf>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteOutcome::passed)
    }
}

/// Thread cap from `MWIS_THREADS`, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var("MWIS_THREADS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&t| t > 0)
}

/// Runs every suite at the requested scale: the exhaustive sweep up to
/// `min(n_max, 7)` vertices, and `samples` instances with up to `n_max`
/// vertices for the sampled suites (cover checks cap n at 14).
pub fn run(cfg: &SelftestConfig) -> std::io::Result<SelftestReport> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = thread_cap() {
        builder = builder.num_threads(t);
    }
    let pool = builder
        .build()
        .map_err(|e| std::io::Error::other(e.to_string()))?;
    let perturb = u64::from(cfg.inject_mismatch);
    let suites = pool.install(|| {
        vec![
            exhaustive(cfg.n_max.min(7), cfg.seed, perturb),
            random_equivalence(cfg.samples, cfg.n_max, cfg.seed, perturb),
            bipartite_duality(cfg.samples, cfg.n_max, cfg.seed),
            nearly_bipartite_property(cfg.samples, cfg.n_max.max(7), cfg.seed),
            disjoint_c5_edges(cfg.samples, cfg.n_max.max(10), cfg.seed),
            cover_property(cfg.samples, cfg.n_max.min(14), cfg.seed),
            out_of_class(cfg.samples, cfg.n_max.clamp(7, 16), cfg.seed),
        ]
    });
    let mut reproduction = None;
    if let Some(f) = suites.iter().find_map(|s| s.first_failure.as_ref()) {
        let (g, w) = if cfg.inject_mismatch {
            // every graph fails under injection; the empty graph is minimal
            minimize(&f.graph, &f.weights, |_, _| true)
        } else {
            minimize(&f.graph, &f.weights, |g, w| {
                check_against_oracle("", g, w, 0).is_err()
            })
        };
        let dir = cfg.dump_dir.clone().unwrap_or_else(std::env::temp_dir);
        let path = dir.join(format!("p7mwis-failure-seed{}.txt", cfg.seed));
        let comments = vec![format!("failure: [{}] {}", f.label, f.detail)];
        std::fs::write(&path, write_graph(&g, &w, &comments))?;
        reproduction = Some(path);
    }
    Ok(SelftestReport {
        suites,
        reproduction,
    })
}
