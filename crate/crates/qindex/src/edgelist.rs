//! Plain-text edge lists.
//!
//! The format is line-based: a header `n m`, then exactly `m` lines `u v`
//! with 0-based vertex indices. Blank lines are not allowed; errors carry
//! the offending 1-based line number.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected header `n m`")]
    BadHeader { line: usize },
    #[error("line {line}: expected edge `u v`")]
    BadEdge { line: usize },
    #[error("line {line}: expected {expected} edge lines, found {found}")]
    EdgeCountMismatch { line: usize, expected: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

fn two_numbers(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Parse the `n m` / `u v` text format into a graph.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(EdgeListError::BadHeader { line: 1 })?;
    let (n, m) = two_numbers(header).ok_or(EdgeListError::BadHeader { line: 1 })?;
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        let lineno = idx + 1;
        if edges.len() == m {
            // Anything after the promised m edges is an error.
            return Err(EdgeListError::EdgeCountMismatch {
                line: lineno,
                expected: m,
                found: m + 1,
            });
        }
        let e = two_numbers(line).ok_or(EdgeListError::BadEdge { line: lineno })?;
        edges.push(e);
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCountMismatch {
            line: edges.len() + 1,
            expected: m,
            found: edges.len(),
        });
    }
    Graph::from_edge_list(n, &edges).map_err(|source| EdgeListError::Graph { line: 1, source })
}

/// Render a graph in the `n m` / `u v` text format, edges in lexicographic
/// order, with a trailing newline.
pub fn format_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
