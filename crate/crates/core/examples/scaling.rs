//! Wall time on unit-weight C5 blow-ups, with a fitted log-log slope.
//!
//! `cargo run --release --example scaling -- 50 100 200 400`

use p7mwis::selftest::{log_log_slope, scaling};

fn main() {
    let mut sizes: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    if sizes.is_empty() {
        sizes = vec![25, 50, 100, 200];
    }
    let points = scaling(&sizes, true).expect("blow-ups are in class");
    for p in &points {
        println!(
            "n={:4} {:9.1} ms  branches={:5} bipartite calls={:5} weight={}",
            p.n, p.millis, p.stats.branch_count, p.stats.bipartite_calls, p.weight
        );
    }
    let xy: Vec<(f64, f64)> = points.iter().map(|p| (p.n as f64, p.millis)).collect();
    if let Some(s) = log_log_slope(&xy) {
        println!("slope {s:.2}");
    }
}
