//! DIMACS `p edge` format, as used by the graph colouring benchmarks.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn err(line: usize, reason: impl Into<String>) -> Error {
    Error::Dimacs { line, reason: reason.into() }
}

/// Parses `c` comments, one `p edge n m` (or `p col n m`) header and
/// 1-indexed `e u v` lines. Duplicate edges collapse; the edge count in the
/// header is not enforced.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut fields = raw.split_whitespace();
        match fields.next() {
            None | Some("c") => continue,
            Some("p") => {
                if n.is_some() {
                    return Err(err(line_no, "duplicate problem line"));
                }
                match fields.next() {
                    Some("edge") | Some("col") => {}
                    other => return Err(err(line_no, format!("unsupported problem type {other:?}"))),
                }
                let count = fields
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| err(line_no, "missing vertex count"))?;
                n = Some(count);
            }
            Some("e") => {
                let n = n.ok_or_else(|| err(line_no, "edge before the `p edge` header"))?;
                let mut endpoint = || -> Result<usize> {
                    let v: usize = fields
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| err(line_no, "malformed edge line"))?;
                    if v == 0 || v > n {
                        return Err(err(line_no, format!("vertex {v} out of range 1..={n}")));
                    }
                    Ok(v - 1)
                };
                let (u, v) = (endpoint()?, endpoint()?);
                if u == v {
                    return Err(err(line_no, format!("self-loop at vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            Some(other) => return Err(err(line_no, format!("unknown line type `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| err(0, "missing `p edge` header"))?;
    Graph::from_edges(n, edges)
}

pub fn encode_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Heuristic used by file readers: DIMACS files start with `c` or `p` lines.
pub fn looks_like_dimacs(text: &str) -> bool {
    text.lines()
        .map(str::trim_start)
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("c ") || l == "c" || l.starts_with("p "))
}
