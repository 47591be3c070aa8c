//! Which parts of the decomposition each hand-built gadget exercises.

use p7mwis::instances::{gen_frame_gadget, GadgetCase, GenSpec};
use p7mwis::oracle::brute_force_mwis;
use p7mwis::solver::{solve_with, SolverConfig};

fn main() {
    let cfg = SolverConfig {
        check_path_patterns: true,
        ..SolverConfig::default()
    };
    for case in GadgetCase::ALL {
        for n in [0, 12] {
            let (g, w) = gen_frame_gadget(&GenSpec::gadget(case, n, 5).weights(1, 9)).unwrap();
            let sol = solve_with(&g, &w, &cfg).expect("gadgets are in class");
            let exact = brute_force_mwis(&g, &w).unwrap().weight;
            let s = &sol.stats;
            println!(
                "{case:>9} n={:2}: weight {} (oracle {exact}) frames={} odd_z={} nails={} peels={} order={} reentries={}",
                g.vertex_count(),
                sol.result.weight,
                s.frames,
                s.odd_z_frames,
                s.nail_branches,
                s.green_peels,
                s.order_branches,
                s.green_reentries
            );
        }
    }
}
