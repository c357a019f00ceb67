use std::fs;
use std::io::{self, Read};
use std::path::Path;

use anyhow::{Context, Result};
use edds_core::{parse_graph6, Graph, Graph6Error, VertexSet};

/// One non-blank input line, numbered from 1.
#[derive(Debug, Clone)]
pub struct InputLine {
    pub line: usize,
    pub text: String,
    pub graph: Result<Graph, Graph6Error>,
}

/// Reads `path`, or standard input when `path` is `None`.
pub fn read_source(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

/// Splits graph6 text into numbered lines. Blank lines are skipped and an
/// optional `>>graph6<<` header is stripped.
pub fn graph6_lines(text: &str) -> Vec<InputLine> {
    text.lines()
        .enumerate()
        .filter_map(|(k, raw)| {
            let t = raw.trim();
            let t = t.strip_prefix(">>graph6<<").unwrap_or(t);
            (!t.is_empty()).then(|| InputLine {
                line: k + 1,
                text: t.to_string(),
                graph: parse_graph6(t),
            })
        })
        .collect()
}

/// Parses a comma-separated list of 0-based vertex indices. The empty
/// string is the empty set.
pub fn parse_vertex_list(s: &str) -> Result<VertexSet, String> {
    let mut set = VertexSet::empty();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part
            .parse()
            .map_err(|_| format!("`{part}` is not a vertex index"))?;
        if v >= edds_core::MAX_ORDER {
            return Err(format!("vertex {v} exceeds the maximum order {}", edds_core::MAX_ORDER));
        }
        set.insert(v);
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines_are_numbered_and_headers_stripped() {
        let lines = graph6_lines(">>graph6<<Bw\n\nCl\n!!\n");
        assert_eq!(lines.len(), 3);
        assert_eq!((lines[0].line, lines[0].text.as_str()), (1, "Bw"));
        assert_eq!(lines[1].line, 3);
        assert!(lines[1].graph.as_ref().unwrap().is_c4());
        assert_eq!(lines[2].line, 4);
        assert!(lines[2].graph.is_err());
    }

    #[test]
    fn vertex_lists() {
        assert_eq!(parse_vertex_list("0, 1,3").unwrap(), VertexSet::from([0, 1, 3]));
        assert_eq!(parse_vertex_list("").unwrap(), VertexSet::empty());
        assert!(parse_vertex_list("0,x").is_err());
        assert!(parse_vertex_list("200").is_err());
    }
}
