//! Compare the solver with exhaustive search on random in-class graphs.

use p7mwis::selftest::{check_against_oracle, random_instance};

fn main() {
    let samples = 500;
    let mut failures = 0;
    for i in 0..samples {
        let (label, g, w) = random_instance(42, i, 16, 0, 100);
        if let Err(f) = check_against_oracle(&label, &g, &w, 0) {
            failures += 1;
            println!("[{}] {}", f.label, f.detail);
        }
    }
    println!("{samples} instances, {failures} disagreements");
}
