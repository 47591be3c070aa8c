use proptest::prelude::*;

use super::green::{find_critical, opposite_neighborhood};
use super::nails::nailed_at;
use super::order::{dominance_order, order_geq, p3_endpoints};
use super::*;
use crate::instances::{gen_frame_gadget, gen_rejection, GadgetCase, GenSpec};
use crate::oracle::{brute_force_mwis, enumerate_maximal_is};
use crate::recognition::check_class;

fn cycle(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).unwrap()
}

fn set(n: usize, ids: &[usize]) -> VertexSet {
    VertexSet::from_ids(n, ids.iter().copied())
}

fn gadget(case: GadgetCase) -> Graph {
    gen_frame_gadget(&GenSpec::gadget(case, 0, 0)).unwrap().0
}

/// The frame rooted at c = 0, d = 1 over the anti-neighborhood component
/// holding `probe`.
fn root_frame(g: &Graph, probe: usize) -> KContext {
    let anti = g.anti_neighborhood(0).unwrap();
    let k = g
        .components_within(&anti)
        .into_iter()
        .find(|k| k.contains(probe))
        .unwrap();
    KContext::new(g, 0, 1, k).unwrap()
}

fn exact(g: &Graph, w: &WeightMap) -> u64 {
    brute_force_mwis(g, w).unwrap().weight
}

#[test]
fn small_named_graphs() {
    let c5 = cycle(5);
    let r = solve(&c5, &WeightMap::unit(5), false).unwrap();
    assert_eq!(r.weight, 2);
    assert_eq!(r.witness.len(), 2);
    assert!(c5.is_independent(&r.witness));

    let c7 = cycle(7);
    let w = WeightMap::new((1..=7).collect());
    let r = solve(&c7, &w, false).unwrap();
    assert_eq!(r.weight, exact(&c7, &w));
    assert_eq!(r.weight, 15);

    let empty = Graph::new(0, &[]).unwrap();
    let r = solve(&empty, &WeightMap::unit(0), true).unwrap();
    assert_eq!(r.weight, 0);
    assert!(r.witness.is_empty());
}

#[test]
fn weighted_blowup() {
    // C5 with its first vertex doubled into a 2-vertex bag
    let (g, _) = crate::instances::gen_c5_blowup(&GenSpec::blowup([2, 1, 1, 1, 1], 0)).unwrap();
    let w = WeightMap::new(vec![2, 2, 1, 1, 1, 1]);
    let r = solve(&g, &w, false).unwrap();
    assert_eq!(r.weight, 5);
    assert_eq!(r.weight, exact(&g, &w));
}

#[test]
fn nearly_bipartite_leaves() {
    let c7 = cycle(7);
    let w = WeightMap::unit(7);
    let mut s = Solver::new(&c7, &w, SolverConfig::default());
    assert_eq!(s.nearly_bipartite_solve(&c7.all()).unwrap().weight, 3);

    let one = Graph::new(1, &[]).unwrap();
    let w = WeightMap::new(vec![9]);
    let mut s = Solver::new(&one, &w, SolverConfig::default());
    assert_eq!(s.nearly_bipartite_solve(&one.all()).unwrap().weight, 9);

    let c4 = cycle(4);
    let w = WeightMap::unit(4);
    let mut s = Solver::new(&c4, &w, SolverConfig::default());
    assert_eq!(s.nearly_bipartite_solve(&c4.all()).unwrap().weight, 2);
}

#[test]
fn nearly_bipartite_per_component() {
    // every anti-neighborhood of a C5 is a single edge
    let c5 = cycle(5);
    let w = WeightMap::unit(5);
    let mut s = Solver::new(&c5, &w, SolverConfig::default());
    assert_eq!(s.nearly_bipartite_solve(&c5.all()).unwrap().weight, 2);
    // two disjoint C7s: A(v) for v on one cycle contains the other one, so
    // only each component on its own is nearly bipartite
    let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
    edges.extend((0..7).map(|i| (7 + i, 7 + (i + 1) % 7)));
    let g = Graph::new(14, &edges).unwrap();
    let w = WeightMap::unit(14);
    let mut s = Solver::new(&g, &w, SolverConfig::default());
    assert_eq!(s.nearly_bipartite_solve(&g.all()).unwrap().weight, 6);
}

#[test]
fn anti_split_examples() {
    let n = 4;
    let mk = |weight, ids: &[usize]| SolveResult {
        weight,
        witness: set(n, ids),
        cover: None,
    };
    assert_eq!(
        anti_split(n, false, vec![mk(3, &[0]), mk(5, &[1])]).weight,
        5
    );
    assert_eq!(anti_split(n, false, vec![mk(0, &[]), mk(0, &[])]).weight, 0);
    let tie = anti_split(n, false, vec![mk(4, &[2]), mk(4, &[3])]);
    assert_eq!(tie.witness, set(n, &[2]));
    assert_eq!(anti_split(n, false, Vec::new()).weight, 0);
}

#[test]
fn cover_of_bipartite_graph_is_whole_vertex_set() {
    let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let cover = bipartite_cover(&g, &WeightMap::unit(4)).unwrap();
    assert_eq!(cover.members(), &[g.all()]);
}

#[test]
fn cover_of_c5() {
    let g = cycle(5);
    let cover = bipartite_cover(&g, &WeightMap::unit(5)).unwrap();
    for m in cover.members() {
        assert!(g.is_bipartite_within(m));
    }
    for mis in enumerate_maximal_is(&g).unwrap() {
        assert!(cover.covers(&mis), "{mis:?}");
    }
    assert_eq!(cover.len(), 5);
    assert!(cover.members().iter().all(|m| m.len() == 3));
}

#[test]
fn type1_gadget_nail_structure() {
    let g = gadget(GadgetCase::Type1C5);
    let ctx = root_frame(&g, 2);
    assert_eq!(ctx.h, set(7, &[6]));
    let (l, c5) = nailed_at(&g, &ctx, 6);
    // cycle 2-3-4-5-6 nailed at 6: the two far Z-vertices are 3 and 4
    assert_eq!(l, set(7, &[3, 4]));
    assert_eq!(c5.unwrap()[0], 6);
    let ns = NailStructure::compute(&g, &ctx);
    assert_eq!(ns.nails, set(7, &[6]));
}

#[test]
fn green_gadget_has_critical_vertex() {
    let g = gadget(GadgetCase::Green);
    let ctx = root_frame(&g, 2);
    assert_eq!(ctx.h, set(7, &[2, 3]));
    let gs = GreenStructure::compute(&g, &ctx).unwrap();
    assert_eq!(gs.green.len(), 1);
    let t = &gs.components[gs.green[0]];
    assert_eq!(t.proper_contactors(), set(7, &[2]));
    let crit = find_critical(&g, &ctx, &gs).unwrap();
    assert_eq!(crit.h, 2);
    // 3 is joined to the side that 2 touches, so X = {3}; nothing lies
    // outside 2's reach that another proper contactor sees, so Y is empty
    assert!(opposite_neighborhood(&g, t, crit).unwrap().is_empty());
}

#[test]
fn no_green_gadget_orders_endpoints() {
    let g = gadget(GadgetCase::NoGreen);
    let ctx = root_frame(&g, 2);
    let gs = GreenStructure::compute(&g, &ctx).unwrap();
    assert!(!gs.has_green());
    let ends = p3_endpoints(&g, &ctx);
    assert_eq!(ends, set(7, &[2, 3]));
    assert!(order_geq(&g, &ctx, 2, 3));
    assert!(order_geq(&g, &ctx, 3, 2));
    assert!(order_geq(&g, &ctx, 2, 2));
    assert_eq!(dominance_order(&g, &ctx, &ends).unwrap(), vec![2, 3]);
}

#[test]
fn case2_gadget_takes_odd_z_route() {
    let g = gadget(GadgetCase::Case2);
    let ctx = root_frame(&g, 2);
    assert!(!g.is_bipartite_within(&ctx.z));
    let w = WeightMap::unit(g.vertex_count());
    let mut s = Solver::new(&g, &w, SolverConfig::default());
    let r = s.solve_component(&ctx).unwrap();
    let sub = g.induced_subgraph(&ctx.k).unwrap();
    assert_eq!(
        r.weight,
        exact(&sub.graph, &WeightMap::unit(sub.graph.vertex_count()))
    );
    assert_eq!(s.stats().odd_z_frames, 1);
    assert_eq!(s.stats().reframes, 1);
}

#[test]
fn gadgets_match_oracle_with_path_pattern_checks() {
    let cfg = SolverConfig {
        record_cover: true,
        check_path_patterns: true,
        ..SolverConfig::default()
    };
    for case in GadgetCase::ALL {
        for seed in 0..8 {
            let (g, w) = gen_frame_gadget(&GenSpec::gadget(case, 13, seed).weights(0, 9)).unwrap();
            let sol = solve_with(&g, &w, &cfg).unwrap();
            assert_eq!(sol.result.weight, exact(&g, &w), "{case} seed {seed}");
            let cover = sol.result.cover.unwrap();
            for mis in enumerate_maximal_is(&g).unwrap() {
                assert!(cover.covers(&mis), "{case} seed {seed}: {mis:?}");
            }
        }
    }
}

#[test]
fn parallel_matches_sequential() {
    for seed in 0..10 {
        let (g, w) = gen_rejection(&GenSpec::rejection(14, 200, seed).weights(0, 50)).unwrap();
        let seq = solve_with(&g, &w, &SolverConfig::default()).unwrap();
        let par = solve_with(
            &g,
            &w,
            &SolverConfig {
                parallel: true,
                ..SolverConfig::default()
            },
        )
        .unwrap();
        assert_eq!(seq.result, par.result);
        assert_eq!(seq.stats, par.stats);
    }
}

#[test]
fn green_survives_a_critical_branch() {
    // Frame c = 1, d = 4: Z is the C4 0-5-3-7 and both H-vertices 2 and 6
    // properly contact it, on opposite sides. Removing N(2) leaves the path
    // 0-5-3, which 6 still properly contacts.
    let g = Graph::new(
        8,
        &[
            (0, 5),
            (0, 6),
            (0, 7),
            (1, 4),
            (2, 4),
            (2, 7),
            (3, 5),
            (3, 7),
            (4, 6),
        ],
    )
    .unwrap();
    assert!(check_class(&g).is_ok());
    let w = WeightMap::unit(8);
    let sol = solve_with(&g, &w, &SolverConfig::default()).unwrap();
    assert_eq!(sol.result.weight, exact(&g, &w));
    assert!(sol.stats.green_reentries > 0);
    let strict = SolverConfig {
        strict: true,
        ..SolverConfig::default()
    };
    match solve_with(&g, &w, &strict) {
        Err(SolveError::ClassViolation(v)) => assert_eq!(v.rule, Rule::GreenInBranch),
        other => panic!("expected a green-branch violation, got {other:?}"),
    }
}

#[test]
fn out_of_class_input_is_exact_or_flagged() {
    // K3 plus a pendant: a triangle, so outside the class
    let g = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
    let w = WeightMap::new(vec![1, 2, 3, 4]);
    match solve(&g, &w, false) {
        Ok(r) => assert_eq!(r.weight, exact(&g, &w)),
        Err(e) => assert!(matches!(e, SolveError::ClassViolation(_))),
    }
}

#[test]
fn rejects_wrong_weight_length() {
    let g = cycle(5);
    assert!(matches!(
        solve(&g, &WeightMap::unit(4), false),
        Err(SolveError::Graph(_))
    ));
}

fn in_class_graph() -> impl Strategy<Value = (Graph, WeightMap)> {
    (1usize..=13, 50u32..=400, any::<u64>()).prop_map(|(n, p, seed)| {
        gen_rejection(&GenSpec::rejection(n, p, seed).weights(0, 20)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matches_oracle((g, w) in in_class_graph()) {
        prop_assert!(check_class(&g).is_ok());
        let r = solve(&g, &w, true).unwrap();
        prop_assert_eq!(r.weight, exact(&g, &w));
        prop_assert!(g.is_independent(&r.witness));
        let cover = r.cover.unwrap();
        for m in cover.members() {
            prop_assert!(g.is_bipartite_within(m));
        }
        for mis in enumerate_maximal_is(&g).unwrap() {
            prop_assert!(cover.covers(&mis));
        }
    }

    #[test]
    fn weight_is_monotone_in_vertex_weights((g, w) in in_class_graph(), bump in 0usize..13) {
        let base = solve(&g, &w, false).unwrap().weight;
        let v = bump % g.vertex_count();
        let mut raised = w.as_slice().to_vec();
        raised[v] += 5;
        let up = solve(&g, &WeightMap::new(raised), false).unwrap().weight;
        prop_assert!(up >= base && up <= base + 5);
    }
}
