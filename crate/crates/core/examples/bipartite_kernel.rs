//! The min-cut kernel on a bipartite graph: optimum, witness and the
//! complementary minimum vertex cover.

use p7mwis::bipartite::solve_bipartite;
use p7mwis::{Graph, WeightMap};

fn main() {
    // a 4-cycle with alternating weights plus a pendant vertex
    let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
    let w = WeightMap::new(vec![1, 9, 1, 9, 4]);
    let all = g.all();
    let sol = solve_bipartite(&g, &all, &w).expect("graph is bipartite");
    println!("optimum {} at {:?}", sol.weight, sol.witness.to_vec());
    println!(
        "minimum vertex cover {} at {:?}",
        sol.cover_weight,
        sol.vertex_cover(&all).to_vec()
    );
    println!(
        "sides {:?} / {:?}",
        sol.bipartition.side_a.to_vec(),
        sol.bipartition.side_b.to_vec()
    );
}
