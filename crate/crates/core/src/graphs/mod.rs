//! Finite simple undirected graphs on the vertex set `0..n`.
//!
//! Named constructions document their vertex layout so that integral
//! representations built for them can refer to vertices by index.

mod families;
mod io;
mod iso;
mod regularity;

pub use families::{
    complete_graph, complete_multipartite, cycle_complement, disjoint_cycles, gallery, hypercube, star, Figure,
};
pub use io::{parse_edge_list, GraphJson};
pub use iso::is_isomorphic;
pub use regularity::{
    classify_regularity, distances, Diameter, DistanceMatrix, Param, ReasonCode, RegularityReport, Sesqui, Srg,
};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// An immutable simple graph stored as a dense adjacency relation.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    /// Builds a graph from an edge list, taking the symmetric closure and
    /// collapsing duplicate edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![false; n * n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Ok(Graph { n, adj })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, std::iter::empty())
    }

    pub(crate) fn from_predicate(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        assert!(n > 0);
        let mut adj = vec![false; n * n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    adj[u * n + v] = true;
                    adj[v * n + u] = true;
                }
            }
        }
        Graph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        (0..self.n).filter(|&w| self.has_edge(u, w) && self.has_edge(v, w)).count()
    }

    /// Adjacency negated off the diagonal.
    pub fn complement(&self) -> Graph {
        Graph::from_predicate(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Induced subgraph on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        if vertices.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut seen = vec![false; self.n];
        for &v in vertices {
            if v >= self.n {
                return Err(Error::InvalidParameter(format!("vertex {v} outside 0..{}", self.n)));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidParameter(format!("vertex {v} repeated")));
            }
        }
        Ok(Graph::from_predicate(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j])))
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for w in 0..self.n {
                    if self.has_edge(u, w) && comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Adjacency matrix as integer rows.
    pub fn adjacency_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|u| (0..self.n).map(|v| self.has_edge(u, v) as i64).collect()).collect()
    }

    /// Graphviz `graph` description.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }

    /// One `u v` line per edge, preceded by a line holding the vertex count.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// A partition of `0..n` into nonempty disjoint cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut owner = vec![usize::MAX; n];
        for (ci, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::InvalidPartition(format!("cell {ci} is empty")));
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} outside 0..{n}")));
                }
                if owner[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} lies in cells {} and {ci}", owner[v])));
                }
                owner[v] = ci;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(Partition { cells })
    }

    /// Builds a partition from a cell index per vertex; cells are numbered by
    /// first appearance, empty labels are dropped.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let mut map = std::collections::BTreeMap::new();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for (v, &l) in labels.iter().enumerate() {
            let idx = *map.entry(l).or_insert_with(|| {
                cells.push(Vec::new());
                cells.len() - 1
            });
            cells[idx].push(v);
        }
        Partition::new(labels.len(), cells)
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_and_single_vertex() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert!((0..3).all(|v| k3.degree(v) == 2));
        let k1 = Graph::from_edges(1, []).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(4, [(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::from_edges(3, [(0, 3)]), Err(Error::EndpointOutOfRange { .. })));
        assert!(matches!(Graph::from_edges(3, [(1, 1)]), Err(Error::LoopEdge(1))));
        assert!(matches!(Graph::from_edges(0, []), Err(Error::EmptyGraph)));
    }

    #[test]
    fn complement_of_triangle_is_empty() {
        let k3 = complete_graph(3).unwrap();
        assert_eq!(k3.complement().edge_count(), 0);
        assert_eq!(k3.complement().complement(), k3);
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![0], vec![1, 2]]).is_ok());
        assert!(Partition::new(3, vec![vec![0], vec![1]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1, 2], vec![]]).is_err());
        let p = Partition::from_labels(&[5, 2, 5, 7]).unwrap();
        assert_eq!(p.cells(), &[vec![0, 2], vec![1], vec![3]]);
    }

    #[test]
    fn dot_and_edge_list() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(g.to_dot().contains("0 -- 1;"));
        assert_eq!(g.to_edge_list(), "3\n0 1\n");
    }
}
