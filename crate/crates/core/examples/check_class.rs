//! Class recognition: find a triangle or an induced P7, and induced C5s.

use p7mwis::recognition::{check_class, find_induced_c5};
use p7mwis::Graph;

fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges).unwrap()
}

fn main() {
    let samples = [
        ("P6", path(6)),
        ("P7", path(7)),
        ("K3", Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()),
        (
            "C5",
            Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap(),
        ),
    ];
    for (name, g) in &samples {
        match check_class(g) {
            Ok(()) => print!("{name}: in class"),
            Err(w) => print!("{name}: {:?} at {:?}", w.kind, w.vertices),
        }
        match find_induced_c5(g, &g.all()) {
            Some(c) => println!(", induced C5 {:?}", c.vertices),
            None => println!(", no induced C5"),
        }
    }
}
