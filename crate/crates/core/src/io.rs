//! Text graph files and JSON result reports.
//!
//! A graph file looks like this (vertices are 1-indexed on disk and
//! 0-indexed in memory):
//!
//! ```text
//! c optional comments, anywhere
//! p mwis 3 2
//! v 1 5
//! v 2 1
//! v 3 5
//! e 1 2
//! e 2 3
//! ```

use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{BipartiteCheck, Graph, VertexSet, WeightMap};
use crate::recognition::{ForbiddenWitness, WitnessKind};
use crate::solver::{CoverFamily, Rule, Stats, Violation};

/// A malformed graph file, with the 1-based line the problem was found on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

fn number<T: std::str::FromStr>(
    line: usize,
    token: Option<&str>,
    what: &str,
) -> Result<T, ParseError> {
    match token {
        None => fail(line, format!("missing {what}")),
        Some(t) => t
            .parse()
            .or_else(|_| fail(line, format!("{what} `{t}` is not a non-negative integer"))),
    }
}

/// Parses the text format into a graph and its weights.
pub fn parse_graph(text: &str) -> Result<(Graph, WeightMap), ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut weights: Vec<Option<u64>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen_edges = std::collections::HashSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let mut tokens = raw.split_whitespace();
        let Some(tag) = tokens.next() else { continue };
        if tag == "c" {
            continue;
        }
        let Some((n, m)) = header else {
            if tag != "p" || tokens.next() != Some("mwis") {
                return fail(line, "expected header `p mwis <n> <m>`");
            }
            let n: usize = number(line, tokens.next(), "vertex count")?;
            let m: usize = number(line, tokens.next(), "edge count")?;
            if tokens.next().is_some() {
                return fail(line, "trailing tokens after header");
            }
            header = Some((n, m));
            weights = vec![None; n];
            continue;
        };
        match tag {
            "v" => {
                let i: usize = number(line, tokens.next(), "vertex index")?;
                let w: u64 = number(line, tokens.next(), "weight")?;
                if i == 0 || i > n {
                    return fail(line, format!("vertex {i} outside 1..={n}"));
                }
                if weights[i - 1].replace(w).is_some() {
                    return fail(line, format!("vertex {i} listed twice"));
                }
            }
            "e" => {
                let u: usize = number(line, tokens.next(), "edge endpoint")?;
                let v: usize = number(line, tokens.next(), "edge endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return fail(line, format!("endpoint {x} outside 1..={n}"));
                    }
                }
                if u == v {
                    return fail(line, format!("self-loop at vertex {u}"));
                }
                let key = (u.min(v) - 1, u.max(v) - 1);
                if !seen_edges.insert(key) {
                    return fail(line, format!("duplicate edge {u} {v}"));
                }
                if edges.len() == m {
                    return fail(
                        line,
                        format!("more than the {m} edges declared in the header"),
                    );
                }
                edges.push(key);
            }
            "p" => return fail(line, "second header line"),
            other => return fail(line, format!("unknown line type `{other}`")),
        }
        if tokens.next().is_some() {
            return fail(line, "trailing tokens");
        }
    }

    let Some((n, m)) = header else {
        return fail(last_line.max(1), "missing header `p mwis <n> <m>`");
    };
    if let Some(i) = weights.iter().position(Option::is_none) {
        return fail(last_line, format!("no `v` line for vertex {}", i + 1));
    }
    if edges.len() != m {
        return fail(
            last_line,
            format!("header declares {m} edges, found {}", edges.len()),
        );
    }
    let g = Graph::new(n, &edges).expect("edges were range- and loop-checked");
    let w = WeightMap::new(weights.into_iter().map(Option::unwrap_or_default).collect());
    Ok((g, w))
}

/// Serializes a graph: comment lines first, then the header, the `v` lines
/// and the `e` lines in ascending order.
pub fn write_graph(g: &Graph, w: &WeightMap, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "c {c}");
    }
    let _ = writeln!(out, "p mwis {} {}", g.vertex_count(), g.edge_count());
    for v in g.vertices() {
        let _ = writeln!(out, "v {} {}", v + 1, w.get(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Optimal,
    ClassViolation,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportStats {
    pub n: usize,
    pub m: usize,
    pub branch_count: u64,
    pub bipartite_calls: u64,
    pub wall_ms: u64,
}

/// A forbidden subgraph or failed structural check, in 1-indexed ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportWitness {
    pub kind: String,
    pub vertices: Vec<usize>,
}

impl From<&ForbiddenWitness> for ReportWitness {
    fn from(w: &ForbiddenWitness) -> Self {
        let kind = match w.kind {
            WitnessKind::Triangle => "triangle",
            WitnessKind::InducedPathK => "induced_path",
            WitnessKind::InducedC5 => "induced_c5",
        };
        ReportWitness {
            kind: kind.to_string(),
            vertices: w.vertices.iter().map(|v| v + 1).collect(),
        }
    }
}

impl From<&Violation> for ReportWitness {
    fn from(v: &Violation) -> Self {
        let kind = serde_json::to_value(v.rule)
            .ok()
            .and_then(|j| j.as_str().map(str::to_string))
            .unwrap_or_else(|| format!("{:?}", v.rule));
        ReportWitness {
            kind,
            vertices: v.vertices.iter().map(|x| x + 1).collect(),
        }
    }
}

/// One cover member with the two sides of its bipartition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportCoverMember {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

/// The outcome of a `solve` run. `vertices` is ascending and 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResultReport {
    pub status: Status,
    pub weight: u64,
    pub vertices: Vec<usize>,
    pub stats: ReportStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ReportWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<ReportWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<Vec<ReportCoverMember>>,
}

impl ResultReport {
    fn base(g: &Graph, status: Status) -> Self {
        ResultReport {
            status,
            weight: 0,
            vertices: Vec::new(),
            stats: ReportStats {
                n: g.vertex_count(),
                m: g.edge_count(),
                branch_count: 0,
                bipartite_calls: 0,
                wall_ms: 0,
            },
            witness: None,
            violation: None,
            message: None,
            cover: None,
        }
    }

    pub fn optimal(g: &Graph, weight: u64, set: &VertexSet, stats: &Stats, wall_ms: u64) -> Self {
        let mut r = Self::base(g, Status::Optimal);
        r.weight = weight;
        r.vertices = set.iter().map(|v| v + 1).collect();
        r.stats.branch_count = stats.branch_count;
        r.stats.bipartite_calls = stats.bipartite_calls;
        r.stats.wall_ms = wall_ms;
        r
    }

    /// A class violation; `witness` is a forbidden subgraph when one is
    /// known, `violation` the failed structural check if the solver found it.
    pub fn class_violation(
        g: &Graph,
        witness: Option<&ForbiddenWitness>,
        violation: Option<&Violation>,
    ) -> Self {
        let mut r = Self::base(g, Status::ClassViolation);
        r.witness = witness.map(ReportWitness::from);
        r.violation = violation.map(ReportWitness::from);
        r
    }

    pub fn error(g: &Graph, message: impl Into<String>) -> Self {
        let mut r = Self::base(g, Status::Error);
        r.message = Some(message.into());
        r
    }

    pub fn with_cover(mut self, g: &Graph, cover: &CoverFamily) -> Self {
        self.cover = Some(
            cover
                .members()
                .iter()
                .map(|m| match g.bipartition(m) {
                    BipartiteCheck::Bipartite(b) => ReportCoverMember {
                        side_a: b.side_a.iter().map(|v| v + 1).collect(),
                        side_b: b.side_b.iter().map(|v| v + 1).collect(),
                    },
                    // members are bipartite by construction
                    BipartiteCheck::OddCycle(_) => ReportCoverMember {
                        side_a: m.iter().map(|v| v + 1).collect(),
                        side_b: Vec::new(),
                    },
                })
                .collect(),
        );
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn list(vs: &[usize]) -> String {
    vs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for ResultReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            Status::Optimal => {
                writeln!(f, "status: optimal")?;
                writeln!(f, "weight: {}", self.weight)?;
                writeln!(f, "vertices: {}", list(&self.vertices))?;
            }
            Status::ClassViolation => writeln!(f, "status: class violation")?,
            Status::Error => writeln!(f, "status: error")?,
        }
        if let Some(w) = &self.witness {
            writeln!(f, "witness: {} {}", w.kind, list(&w.vertices))?;
        }
        if let Some(v) = &self.violation {
            writeln!(f, "failed check: {} at {}", v.kind, list(&v.vertices))?;
        }
        if let Some(m) = &self.message {
            writeln!(f, "message: {m}")?;
        }
        if let Some(cover) = &self.cover {
            writeln!(f, "cover: {} members", cover.len())?;
            for m in cover {
                writeln!(f, "  [{}] | [{}]", list(&m.side_a), list(&m.side_b))?;
            }
        }
        write!(
            f,
            "n={} m={} branches={} bipartite_calls={} wall_ms={}",
            self.stats.n,
            self.stats.m,
            self.stats.branch_count,
            self.stats.bipartite_calls,
            self.stats.wall_ms
        )
    }
}

/// Name of a violated rule as it appears in reports.
pub fn rule_name(rule: Rule) -> String {
    ReportWitness::from(&Violation {
        rule,
        vertices: Vec::new(),
    })
    .kind
}

#[cfg(test)]
mod tests {
    use super::*;

    const C5: &str = "c five-cycle\np mwis 5 5\nv 1 1\nv 2 1\nv 3 1\nv 4 1\nv 5 1\n\
                      e 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";

    #[test]
    fn parses_c5() {
        let (g, w) = parse_graph(C5).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!(g.has_edge(0, 4));
        assert_eq!(w.as_slice(), &[1; 5]);
    }

    #[test]
    fn round_trip() {
        let (g, w) = parse_graph(C5).unwrap();
        let text = write_graph(&g, &w, &["hello".into()]);
        assert!(text.starts_with("c hello\np mwis 5 5\n"));
        assert_eq!(parse_graph(&text).unwrap(), (g, w));
    }

    #[test]
    fn empty_graph() {
        let (g, _) = parse_graph("p mwis 0 0\n").unwrap();
        assert_eq!(g.vertex_count(), 0);
    }

    #[test]
    fn errors_name_lines() {
        let cases: &[(&str, usize, &str)] = &[
            ("q mwis 1 0\nv 1 1\n", 1, "header"),
            ("p mwis 2 0\nv 1 1\nv 1 2\n", 3, "twice"),
            ("p mwis 2 1\nv 1 1\nv 2 1\ne 1 1\n", 4, "self-loop"),
            ("p mwis 2 2\nv 1 1\nv 2 1\ne 1 2\ne 2 1\n", 5, "duplicate"),
            ("p mwis 2 1\nv 1 1\nv 3 1\n", 3, "outside"),
            ("p mwis 2 0\nv 1 x\n", 2, "not a non-negative"),
            ("p mwis 2 0\nv 1 1\n", 2, "vertex 2"),
            ("p mwis 2 1\nv 1 1\nv 2 1\n", 3, "declares 1"),
            ("p mwis 1 0\nv 1 1\nz\n", 3, "unknown"),
            ("c only comments\n", 1, "missing header"),
            ("p mwis 1 0\nv 1 -3\n", 2, "not a non-negative"),
        ];
        for (text, line, needle) in cases {
            let e = parse_graph(text).unwrap_err();
            assert_eq!(e.line, *line, "{text:?}: {e}");
            assert!(e.message.contains(needle), "{text:?}: {e}");
        }
    }

    #[test]
    fn report_json_shape() {
        let (g, _) = parse_graph(C5).unwrap();
        let s = VertexSet::from_ids(5, [2, 0]);
        let r = ResultReport::optimal(&g, 2, &s, &Stats::default(), 3);
        let j: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(j["status"], "optimal");
        assert_eq!(j["vertices"], serde_json::json!([1, 3]));
        assert_eq!(j["stats"]["n"], 5);
        assert!(j.get("witness").is_none());
        assert_eq!(rule_name(Rule::GreenInBranch), "green_in_branch");
    }
}
