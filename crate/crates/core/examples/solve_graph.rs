//! Solve a small weighted graph and print the heaviest independent set.
//!
//! Run with `cargo run --example solve_graph [path]`; without a path a
//! weighted C7 is used.

use p7mwis::io::parse_graph;
use p7mwis::{solve, Graph, WeightMap};

fn main() {
    let (g, w) = match std::env::args().nth(1) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).expect("readable graph file");
            parse_graph(&text).unwrap_or_else(|e| panic!("{path}: {e}"))
        }
        None => {
            let edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
            (
                Graph::new(7, &edges).unwrap(),
                WeightMap::new((1..=7).collect()),
            )
        }
    };
    match solve(&g, &w, false) {
        Ok(r) => {
            let ids: Vec<usize> = r.witness.iter().map(|v| v + 1).collect();
            println!("optimum {} with vertices {ids:?}", r.weight);
        }
        Err(e) => println!("not solved: {e}"),
    }
}
