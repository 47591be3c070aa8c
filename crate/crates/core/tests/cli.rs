use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_p7mwis"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn cycle_file(n: usize) -> String {
    let mut s = format!("p mwis {n} {n}\n");
    for i in 1..=n {
        s.push_str(&format!("v {i} 1\n"));
    }
    for i in 1..=n {
        s.push_str(&format!("e {i} {}\n", i % n + 1));
    }
    s
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn solve_c5() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c5.txt", &cycle_file(5));
    let o = run(&["solve", "--json", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    assert_eq!(j["status"], "optimal");
    assert_eq!(j["weight"], 2);
    let vs: Vec<u64> = j["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(vs.len(), 2);
    assert!(vs.windows(2).all(|p| p[0] < p[1]));
    assert_eq!(j["stats"]["n"], 5);
}

#[test]
fn solve_with_cover_lists_bipartitions() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c5.txt", &cycle_file(5));
    let j = json(&run(&["solve", "--json", "--cover", f.to_str().unwrap()]));
    let cover = j["cover"].as_array().unwrap();
    assert_eq!(cover.len(), 5);
    for m in cover {
        let size = m["side_a"].as_array().unwrap().len() + m["side_b"].as_array().unwrap().len();
        assert_eq!(size, 3);
    }
}

#[test]
fn verify_class_rejects_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "k3.txt",
        "p mwis 3 3\nv 1 1\nv 2 1\nv 3 1\ne 1 2\ne 2 3\ne 1 3\n",
    );
    let o = run(&["solve", "--verify-class", "--json", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let j = json(&o);
    assert_eq!(j["status"], "class_violation");
    assert_eq!(j["witness"]["kind"], "triangle");
    assert_eq!(j["witness"]["vertices"], serde_json::json!([1, 2, 3]));
}

#[test]
fn malformed_header_names_line_one() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.txt", "p graph 3 0\n");
    let o = run(&["solve", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}

#[test]
fn missing_file_is_an_input_error() {
    let o = run(&["solve", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let mut p7 = String::from("p mwis 7 6\n");
    for i in 1..=7 {
        p7.push_str(&format!("v {i} 1\n"));
    }
    for i in 1..7 {
        p7.push_str(&format!("e {i} {}\n", i + 1));
    }
    let f = write(dir.path(), "p7.txt", &p7);
    let o = run(&["check", "--json", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let j = json(&o);
    assert_eq!(j["witness"]["kind"], "induced_path");
    assert_eq!(j["witness"]["vertices"].as_array().unwrap().len(), 7);

    let f = write(dir.path(), "c7.txt", &cycle_file(7));
    assert_eq!(run(&["check", f.to_str().unwrap()]).status.code(), Some(0));

    let f = write(dir.path(), "empty.txt", "p mwis 0 0\n");
    assert_eq!(run(&["check", f.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn gen_blowup_is_c5() {
    let o = run(&["gen", "--kind", "c5_blowup", "--bags", "1,1,1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "p mwis 5 5"));
    assert!(text.starts_with("c "));
}

#[test]
fn gen_is_deterministic() {
    let args = [
        "gen",
        "--kind",
        "rejection",
        "--n",
        "12",
        "--p-permille",
        "150",
        "--seed",
        "7",
        "--wmin",
        "0",
        "--wmax",
        "50",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn generated_rejection_file_passes_check() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("r.txt");
    let o = run(&[
        "gen",
        "--kind",
        "rejection",
        "--n",
        "12",
        "--p-permille",
        "150",
        "--seed",
        "7",
        "--out",
        f.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["check", f.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn gen_budget_exhaustion_exits_3() {
    let o = run(&[
        "gen",
        "--kind",
        "rejection",
        "--n",
        "40",
        "--p-permille",
        "60",
        "--max-retries",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn gen_usage_errors_exit_1() {
    assert_eq!(run(&["gen", "--kind", "nope"]).status.code(), Some(1));
    assert_eq!(
        run(&["gen", "--kind", "c5_blowup", "--bags", "1,1"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn selftest_small_passes() {
    let o = run(&["selftest", "--n-max", "5", "--samples", "30"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("7/7 suites passed"));
}

#[test]
fn selftest_injected_mismatch_exits_4_with_dump() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "selftest",
        "--n-max",
        "4",
        "--samples",
        "5",
        "--inject-mismatch",
        "--dump-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(4));
    let dumped: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(dumped.len(), 1);
    let text = std::fs::read_to_string(dumped[0].as_ref().unwrap().path()).unwrap();
    assert!(text.contains("p mwis"));
}

#[test]
fn solve_reads_stdin() {
    use std::io::Write;
    let mut child = bin()
        .args(["solve", "--json", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"p mwis 2 1\nv 1 3\nv 2 5\ne 1 2\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(json(&o)["weight"], 5);
}
