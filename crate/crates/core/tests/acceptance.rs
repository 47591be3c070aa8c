//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Runs without the libtest harness so the summary lines are always shown.

use std::process::Command;
use std::time::{Duration, Instant};

use p7mwis::graph::{Graph, WeightMap};
use p7mwis::io::write_graph;
use p7mwis::oracle::brute_force_mwis;
use p7mwis::recognition::{ForbiddenWitness, WitnessKind};
use p7mwis::selftest::{self, SuiteOutcome};

const SEED: u64 = 20_240_601;

type Criterion = (&'static str, fn() -> Line);

struct Line {
    id: u32,
    title: &'static str,
    passed: bool,
    detail: String,
}

fn from_suite(id: u32, title: &'static str, s: SuiteOutcome) -> Line {
    Line {
        id,
        title,
        passed: s.passed(),
        detail: s.to_string(),
    }
}

fn exhaustive() -> Line {
    from_suite(
        1,
        "exhaustive equivalence, all labeled graphs on <= 7 vertices",
        selftest::exhaustive(7, SEED, 0),
    )
}

fn randomized() -> Line {
    from_suite(
        2,
        "randomized equivalence, 10000 instances, n <= 16, weights 0..=100",
        selftest::random_equivalence(10_000, 16, SEED, 0),
    )
}

fn duality() -> Line {
    from_suite(
        3,
        "bipartite kernel duality and matching count, 2000 instances",
        selftest::bipartite_duality(2_000, 16, SEED),
    )
}

fn nearly_bipartite() -> Line {
    from_suite(
        4,
        "anti-neighborhoods of connected C5-free members are bipartite, 1000 graphs",
        selftest::nearly_bipartite_property(1_000, 20, SEED),
    )
}

fn disjoint_c5s() -> Line {
    from_suite(
        5,
        "disjoint induced C5s are joined by >= 2 edges",
        selftest::disjoint_c5_edges(1_000, 18, SEED),
    )
}

fn cover() -> Line {
    from_suite(
        6,
        "cover family contains every maximal independent set, 1000 instances, n <= 14",
        selftest::cover_property(1_000, 14, SEED),
    )
}

fn scaling() -> Line {
    let sizes = [50, 100, 200, 400];
    let ceiling = Duration::from_secs(600);
    let start = Instant::now();
    let (passed, detail) = match selftest::scaling(&sizes, false) {
        Err(e) => (false, format!("solver error: {e}")),
        Ok(points) => {
            let within = points
                .iter()
                .all(|p| p.millis < ceiling.as_secs_f64() * 1e3);
            let exact = points.iter().all(|p| p.weight == 2 * (p.n as u64 / 5));
            let xy: Vec<(f64, f64)> = points.iter().map(|p| (p.n as f64, p.millis)).collect();
            let slope = selftest::log_log_slope(&xy);
            let rows: Vec<String> = points
                .iter()
                .map(|p| format!("n={} {:.1} ms", p.n, p.millis))
                .collect();
            (
                within && exact && slope.is_some_and(f64::is_finite),
                format!(
                    "{}; fitted log-log slope {}",
                    rows.join(", "),
                    slope.map_or("n/a".into(), |s| format!("{s:.2}"))
                ),
            )
        }
    };
    Line {
        id: 7,
        title: "scaling on unit C5 blow-ups, n in {50,100,200,400}",
        passed: passed && start.elapsed() < ceiling * 4,
        detail: detail.to_string(),
    }
}

fn parse_witness(json: &serde_json::Value) -> Option<ForbiddenWitness> {
    let w = json.get("witness")?;
    let kind = match w.get("kind")?.as_str()? {
        "triangle" => WitnessKind::Triangle,
        "induced_path" => WitnessKind::InducedPathK,
        "induced_c5" => WitnessKind::InducedC5,
        _ => return None,
    };
    let vertices = w
        .get("vertices")?
        .as_array()?
        .iter()
        .map(|v| v.as_u64().map(|x| x as usize - 1))
        .collect::<Option<Vec<_>>>()?;
    Some(ForbiddenWitness { kind, vertices })
}

fn run_cli(args: &[&str]) -> (i32, serde_json::Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_p7mwis"))
        .args(args)
        .output()
        .expect("binary runs");
    let json = serde_json::from_slice(&out.stdout).unwrap_or(serde_json::Value::Null);
    (out.status.code().unwrap_or(-1), json)
}

/// Both paths for one out-of-class graph: the binary with class verification
/// must exit 2 with a verifiable witness, and without it must be exact or
/// exit 2.
fn out_of_class_cli(g: &Graph, w: &WeightMap, dir: &std::path::Path, i: u64) -> Result<(), String> {
    let path = dir.join(format!("ooc-{i}.txt"));
    std::fs::write(&path, write_graph(g, w, &[])).map_err(|e| e.to_string())?;
    let p = path.to_str().expect("utf-8 path");
    let (code, json) = run_cli(&["solve", "--verify-class", "--json", p]);
    if code != 2 {
        return Err(format!("--verify-class exited {code}"));
    }
    match parse_witness(&json) {
        Some(x) if x.verify(g) => {}
        other => return Err(format!("witness {other:?} does not verify")),
    }
    let expected = brute_force_mwis(g, w).map_err(|e| e.to_string())?.weight;
    let (code, json) = run_cli(&["solve", "--json", p]);
    match code {
        0 if json["weight"].as_u64() == Some(expected) => Ok(()),
        0 => Err(format!(
            "unverified solve gave {} but optimum is {expected}",
            json["weight"]
        )),
        2 => Ok(()),
        c => Err(format!("unverified solve exited {c}")),
    }
}

fn out_of_class() -> Line {
    let library = selftest::out_of_class(100, 12, SEED);
    let dir = tempfile::tempdir().expect("temp dir");
    let mut cli_failures = Vec::new();
    for i in 0..100 {
        let (label, g, w) = selftest::out_of_class_instance(SEED, i, 12);
        if let Err(e) = out_of_class_cli(&g, &w, dir.path(), i) {
            cli_failures.push(format!("[{label}] {e}"));
        }
    }
    let mut detail = library.to_string();
    detail.push_str(&format!(
        "\n    command line: 100 graphs, {} failed",
        cli_failures.len()
    ));
    if let Some(f) = cli_failures.first() {
        detail.push_str(&format!("\n    first failure {f}"));
    }
    Line {
        id: 8,
        title: "out-of-class inputs are flagged with a witness or solved exactly",
        passed: library.passed() && cli_failures.is_empty(),
        detail,
    }
}

fn main() {
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let criteria: [Criterion; 8] = [
        ("exhaustive", exhaustive),
        ("randomized", randomized),
        ("duality", duality),
        ("nearly_bipartite", nearly_bipartite),
        ("disjoint_c5s", disjoint_c5s),
        ("cover", cover),
        ("scaling", scaling),
        ("out_of_class", out_of_class),
    ];
    let mut all = true;
    for (name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let line = run();
        all &= line.passed;
        println!(
            "criterion {} {}: {} ({:.1}s)",
            line.id,
            if line.passed { "PASS" } else { "FAIL" },
            line.title,
            start.elapsed().as_secs_f64()
        );
        for l in line.detail.lines() {
            println!("    {l}");
        }
    }
    if !all {
        std::process::exit(1);
    }
}
