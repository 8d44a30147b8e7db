use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{Error, Result};

use super::RegularGraph;

/// Parses the edge-list format: `#` comment lines, blank lines, and data lines
/// `u v` with `0 <= u < v`. The vertex count is one more than the largest index.
pub fn parse_edge_list(text: &str) -> Result<RegularGraph> {
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::MalformedLine {
                line,
                reason: format!("expected two vertex indices, got {}", fields.len()),
            });
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::MalformedLine {
                line,
                reason: format!("'{s}' is not a vertex index"),
            })
        };
        let (u, v) = (parse(fields[0])?, parse(fields[1])?);
        if u == v {
            return Err(Error::SelfLoopLine { line, vertex: u });
        }
        if u > v {
            return Err(Error::MalformedLine {
                line,
                reason: format!("expected u < v, got {u} {v}"),
            });
        }
        if !seen.insert((u, v)) {
            return Err(Error::DuplicateEdge { line, u, v });
        }
        edges.push((u, v));
    }
    let n = edges.iter().map(|&(_, v)| v + 1).max().unwrap_or(0);
    RegularGraph::from_edges(n, &edges)
}

/// One `u v` line per edge, sorted, no header.
pub fn write_edge_list(g: &RegularGraph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("write to String");
    }
    out
}
