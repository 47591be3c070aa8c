//! Command-line front end.
//!
//! Exit codes: 0 success, 1 I/O, parse or usage error, 2 class violation,
//! 3 generator budget exhausted, 4 self-test failure.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use p7mwis::graph::{Graph, WeightMap};
use p7mwis::instances::{generate, GadgetCase, GenError, GenKind, GenSpec};
use p7mwis::io::{parse_graph, write_graph, ReportWitness, ResultReport};
use p7mwis::recognition::check_class;
use p7mwis::selftest::{self, SelftestConfig};
use p7mwis::solver::{solve_with, SolveError, SolverConfig};

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_CLASS: u8 = 2;
const EXIT_GEN: u8 = 3;
const EXIT_SELFTEST: u8 = 4;

#[derive(Parser)]
#[command(
    name = "p7mwis",
    version,
    about = "Exact maximum weight independent set for (P7, triangle)-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a graph file and print the optimum.
    Solve(SolveArgs),
    /// Check class membership; prints a triangle or induced P7 if there is one.
    Check {
        /// Graph file, or `-` for standard input.
        path: String,
        #[arg(long)]
        json: bool,
    },
    /// Generate a graph file.
    Gen(GenArgs),
    /// Compare the solver with brute force and check structural properties.
    Selftest(SelftestArgs),
    /// Time unit-weight C5 blow-ups of growing size.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "50,100,200,400")]
        sizes: Vec<usize>,
        /// Evaluate top-level branches in parallel.
        #[arg(long)]
        parallel: bool,
    },
}

#[derive(Args)]
struct SolveArgs {
    /// Graph file, or `-` for standard input.
    path: String,
    /// Run the class check first and stop with its witness on failure.
    #[arg(long)]
    verify_class: bool,
    /// Also print the bipartite cover family.
    #[arg(long)]
    cover: bool,
    #[arg(long)]
    json: bool,
    /// Evaluate top-level branches in parallel.
    #[arg(long)]
    parallel: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    kind: GenKind,
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    p_permille: u32,
    /// Five comma-separated bag sizes for blow-ups.
    #[arg(long, value_delimiter = ',', default_value = "1,1,1,1,1")]
    bags: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    wmin: u64,
    #[arg(long, default_value_t = 1)]
    wmax: u64,
    /// Gadget case: type1_c5, type2_c5, green, no_green or case2.
    #[arg(long, default_value = "type1_c5")]
    case: GadgetCase,
    #[arg(long, default_value_t = 10_000)]
    max_retries: u32,
    /// Output path; standard output if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    #[arg(long, default_value_t = 200)]
    samples: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Corrupt every solver answer to exercise the failure path.
    #[arg(long, hide = true)]
    inject_mismatch: bool,
    /// Directory for failure reproductions (default: system temp dir).
    #[arg(long)]
    dump_dir: Option<PathBuf>,
}

fn read_input(path: &str) -> Result<(Graph, WeightMap), String> {
    let mut text = String::new();
    let read = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| format!("{path}: {e}"))?;
    parse_graph(&text).map_err(|e| format!("{path}: {e}"))
}

fn emit(report: &ResultReport, json: bool) {
    if json {
        println!("{}", report.to_json());
    } else {
        println!("{report}");
    }
}

fn cmd_solve(a: &SolveArgs) -> u8 {
    let (g, w) = match read_input(&a.path) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    if a.verify_class {
        if let Err(witness) = check_class(&g) {
            emit(
                &ResultReport::class_violation(&g, Some(&witness), None),
                a.json,
            );
            return EXIT_CLASS;
        }
    }
    let cfg = SolverConfig {
        record_cover: a.cover,
        parallel: a.parallel,
        ..SolverConfig::default()
    };
    let start = Instant::now();
    match solve_with(&g, &w, &cfg) {
        Ok(sol) => {
            let ms = start.elapsed().as_millis() as u64;
            let mut report =
                ResultReport::optimal(&g, sol.result.weight, &sol.result.witness, &sol.stats, ms);
            if let Some(cover) = &sol.result.cover {
                report = report.with_cover(&g, cover);
            }
            emit(&report, a.json);
            EXIT_OK
        }
        Err(SolveError::ClassViolation(v)) => {
            let witness = check_class(&g).err();
            emit(
                &ResultReport::class_violation(&g, witness.as_ref(), Some(&v)),
                a.json,
            );
            EXIT_CLASS
        }
        Err(e) => {
            emit(&ResultReport::error(&g, e.to_string()), a.json);
            EXIT_INPUT
        }
    }
}

fn cmd_check(path: &str, json: bool) -> u8 {
    let (g, _) = match read_input(path) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let outcome = check_class(&g);
    let witness = outcome.as_ref().err().map(ReportWitness::from);
    if json {
        let value = serde_json::json!({ "in_class": witness.is_none(), "witness": witness });
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        match &witness {
            None => println!("in class: (P7, triangle)-free"),
            Some(w) => println!(
                "not in class: {} {}",
                w.kind,
                w.vertices
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
        }
    }
    if witness.is_none() {
        EXIT_OK
    } else {
        EXIT_CLASS
    }
}

fn cmd_gen(a: &GenArgs) -> u8 {
    let spec = GenSpec {
        kind: a.kind,
        n: a.n,
        bags: a.bags.clone(),
        p_permille: a.p_permille,
        seed: a.seed,
        wmin: a.wmin,
        wmax: a.wmax,
        case: a.case,
        max_retries: a.max_retries,
    };
    let (g, w) = match generate(&spec) {
        Ok(x) => x,
        Err(e @ GenError::RetriesExhausted(_)) => {
            eprintln!("error: {e}");
            return EXIT_GEN;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let text = write_graph(&g, &w, &spec.describe());
    let written = match &a.out {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn cmd_selftest(a: &SelftestArgs) -> u8 {
    let cfg = SelftestConfig {
        n_max: a.n_max,
        samples: a.samples,
        seed: a.seed,
        inject_mismatch: a.inject_mismatch,
        dump_dir: a.dump_dir.clone(),
    };
    let report = match selftest::run(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    for s in &report.suites {
        println!("{s}");
    }
    let passed = report.suites.iter().filter(|s| s.passed()).count();
    println!("{passed}/{} suites passed", report.suites.len());
    if let Some(path) = &report.reproduction {
        println!("reproduction written to {}", path.display());
    }
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_SELFTEST
    }
}

fn cmd_bench(sizes: &[usize], parallel: bool) -> u8 {
    let points = match selftest::scaling(sizes, parallel) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return if matches!(e, SolveError::ClassViolation(_)) {
                EXIT_CLASS
            } else {
                EXIT_INPUT
            };
        }
    };
    println!("{:>6} {:>12} {:>10} {:>8}", "n", "ms", "branches", "weight");
    for p in &points {
        println!(
            "{:>6} {:>12.1} {:>10} {:>8}",
            p.n, p.millis, p.stats.branch_count, p.weight
        );
    }
    let xy: Vec<(f64, f64)> = points.iter().map(|p| (p.n as f64, p.millis)).collect();
    if let Some(s) = selftest::log_log_slope(&xy) {
        println!("log-log slope: {s:.2}");
    }
    EXIT_OK
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match &cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Check { path, json } => cmd_check(path, *json),
        Command::Gen(a) => cmd_gen(a),
        Command::Selftest(a) => cmd_selftest(a),
        Command::Bench { sizes, parallel } => cmd_bench(sizes, *parallel),
    };
    ExitCode::from(code)
}
