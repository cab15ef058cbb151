use super::Graph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Wire form of a graph: `{"n": int, "edges": [[u, v], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        Graph::from_edges(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }
}

/// Parses the edge-list text format: one `u v` pair per line.
///
/// Blank lines and lines starting with `#` are skipped. A line holding a
/// single integer sets the vertex count; otherwise the count is one more than
/// the largest endpoint.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("line {}: bad integer `{t}`", lineno + 1))))
            .collect::<Result<_>>()?;
        match nums.as_slice() {
            [count] if n.is_none() && edges.is_empty() => n = Some(*count),
            [u, v] => edges.push((*u, *v)),
            _ => return Err(Error::Parse(format!("line {}: expected `u v`, found `{line}`", lineno + 1))),
        }
    }
    let n = match n {
        Some(n) => n,
        None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    Graph::from_edges(n, edges)
}
