//! Seeded instance generation and the text file format.

use p7mwis::instances::{generate, GadgetCase, GenSpec};
use p7mwis::io::write_graph;
use p7mwis::recognition::check_class;

fn main() {
    let specs = [
        GenSpec::bipartite(8, 400, 1).weights(0, 9),
        GenSpec::blowup([2, 1, 2, 1, 1], 2),
        GenSpec::rejection(12, 150, 7).weights(1, 20),
        GenSpec::gadget(GadgetCase::Green, 10, 3),
    ];
    for spec in &specs {
        let (g, _) = generate(spec).expect("generation succeeds");
        println!(
            "{}: n={} m={} in class: {}",
            spec.kind,
            g.vertex_count(),
            g.edge_count(),
            check_class(&g).is_ok()
        );
    }
    let (g, w) = generate(&specs[1]).unwrap();
    print!("{}", write_graph(&g, &w, &specs[1].describe()));
}
