//! Bipartite cover families: every maximal independent set lies inside one
//! member, and every member induces a bipartite graph.

use p7mwis::instances::{gen_c5_blowup, GenSpec};
use p7mwis::oracle::enumerate_maximal_is;
use p7mwis::solver::bipartite_cover;

fn main() {
    let (g, w) = gen_c5_blowup(&GenSpec::blowup([2, 1, 1, 2, 1], 0)).unwrap();
    let cover = bipartite_cover(&g, &w).expect("in-class input");
    for m in cover.members() {
        println!(
            "member {:?} bipartite: {}",
            m.to_vec(),
            g.is_bipartite_within(m)
        );
    }
    let maximal = enumerate_maximal_is(&g).unwrap();
    let covered = maximal.iter().filter(|s| cover.covers(s)).count();
    println!(
        "{covered} of {} maximal independent sets covered",
        maximal.len()
    );
}
