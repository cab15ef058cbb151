use super::Graph;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Complete graph `K_n`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(Graph::from_predicate(n, |_, _| true))
}

/// Star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Result<Graph> {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

fn check_lengths(lengths: &[usize]) -> Result<()> {
    if lengths.is_empty() {
        return Err(Error::InvalidParameter("at least one cycle length is required".into()));
    }
    match lengths.iter().find(|&&l| l < 3) {
        Some(&l) => Err(Error::CycleTooShort(l)),
        None => Ok(()),
    }
}

/// Disjoint union of cycles.
///
/// Cycle `i` occupies the consecutive block starting at `lengths[..i].sum()`;
/// its `p`-th vertex (`p = 0..lengths[i]`) is adjacent to positions `p ± 1`
/// modulo the length.
pub fn disjoint_cycles(lengths: &[usize]) -> Result<Graph> {
    check_lengths(lengths)?;
    let n: usize = lengths.iter().sum();
    let mut edges = Vec::with_capacity(n);
    let mut offset = 0;
    for &l in lengths {
        for p in 0..l {
            edges.push((offset + p, offset + (p + 1) % l));
        }
        offset += l;
    }
    Graph::from_edges(n, edges)
}

/// Complement of [`disjoint_cycles`], with the same vertex layout.
pub fn cycle_complement(lengths: &[usize]) -> Result<Graph> {
    Ok(disjoint_cycles(lengths)?.complement())
}

/// `K_{parts × part_size}`: vertex `q * part_size + j` lies in part `q`.
pub fn complete_multipartite(parts: usize, part_size: usize) -> Result<Graph> {
    if parts == 0 || part_size == 0 {
        return Err(Error::InvalidParameter("part count and part size must be positive".into()));
    }
    Ok(Graph::from_predicate(parts * part_size, |u, v| u / part_size != v / part_size))
}

/// The `d`-cube: vertices are the integers `0..2^d` read as bit strings,
/// adjacent when they differ in exactly one bit.
pub fn hypercube(d: u32) -> Result<Graph> {
    if d == 0 {
        return Err(Error::InvalidParameter("cube dimension must be positive".into()));
    }
    if d > 16 {
        return Err(Error::InvalidParameter(format!("cube dimension {d} is too large")));
    }
    Ok(Graph::from_predicate(1 << d, |u, v| (u ^ v).count_ones() == 1))
}

/// The drawn graphs with smallest eigenvalue below −2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Figure {
    /// A 4-cycle `x y x_i y_1` with a pendant `x_{3-i}` on `y`.
    Fig1a,
    /// `K_{2,3}` with parts `{y, y_1}` and `{x, x_1, x_2}`.
    Fig1b,
    /// The 8-vertex tree rooted at `x`.
    Fig2,
}

impl FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig1a" => Ok(Figure::Fig1a),
            "fig1b" => Ok(Figure::Fig1b),
            "fig2" => Ok(Figure::Fig2),
            other => Err(Error::UnknownFixture(other.to_string())),
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Figure::Fig1a => "fig1a",
            Figure::Fig1b => "fig1b",
            Figure::Fig2 => "fig2",
        })
    }
}

impl Figure {
    /// Vertex names in index order.
    pub fn labels(self) -> &'static [&'static str] {
        match self {
            Figure::Fig1a | Figure::Fig1b => &["x", "y", "y1", "x1", "x2"],
            Figure::Fig2 => &["x", "y", "y1", "y2", "x1", "x2", "x11", "x12"],
        }
    }

    pub fn graph(self) -> Graph {
        let edges: &[(usize, usize)] = match self {
            Figure::Fig1a => &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3)],
            Figure::Fig1b => &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4)],
            // x~y, x~y1, x~y2, y~x1, y~x2, y1~x11, y1~x12
            Figure::Fig2 => &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7)],
        };
        Graph::from_edges(self.labels().len(), edges.iter().copied()).expect("figure edge lists are valid")
    }
}

/// Looks up a figure graph by name (`fig1a`, `fig1b`, `fig2`).
pub fn gallery(name: &str) -> Result<Graph> {
    Ok(name.parse::<Figure>()?.graph())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_counts() {
        let c3 = disjoint_cycles(&[3]).unwrap();
        assert_eq!(c3, complete_graph(3).unwrap());
        let g = disjoint_cycles(&[4, 4]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 8));
        assert!((0..8).all(|v| g.degree(v) == 2));
        let g = disjoint_cycles(&[4, 5]).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.components().len(), 2);
        assert!(matches!(disjoint_cycles(&[4, 2]), Err(Error::CycleTooShort(2))));
        assert!(disjoint_cycles(&[]).is_err());
    }

    #[test]
    fn cycle_complement_regularity() {
        let g = cycle_complement(&[4, 4]).unwrap();
        assert!((0..8).all(|v| g.degree(v) == 5));
        let g = cycle_complement(&[7]).unwrap();
        assert!((0..7).all(|v| g.degree(v) == 4));
        assert!(g.is_connected());
        assert_eq!(cycle_complement(&[3, 3]).unwrap(), complete_multipartite(2, 3).unwrap());
    }

    #[test]
    fn multipartite_shapes() {
        let g = complete_multipartite(4, 3).unwrap();
        assert_eq!(g.n(), 12);
        assert!((0..12).all(|v| g.degree(v) == 9));
        assert_eq!(complete_multipartite(5, 1).unwrap(), complete_graph(5).unwrap());
        assert_eq!(complete_multipartite(1, 4).unwrap().edge_count(), 0);
        assert!(complete_multipartite(0, 3).is_err());
        assert!(complete_multipartite(3, 0).is_err());
    }

    #[test]
    fn small_cubes() {
        assert_eq!(hypercube(1).unwrap(), complete_graph(2).unwrap());
        let c4 = hypercube(2).unwrap();
        assert!(super::super::is_isomorphic(&c4, &disjoint_cycles(&[4]).unwrap()));
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.n(), q3.edge_count()), (8, 12));
        assert!(hypercube(0).is_err());
    }

    #[test]
    fn figure_shapes() {
        let a = gallery("fig1a").unwrap();
        assert_eq!((a.n(), a.edge_count()), (5, 5));
        let b = gallery("fig1b").unwrap();
        assert_eq!((b.n(), b.edge_count()), (5, 6));
        let k23 = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(super::super::is_isomorphic(&b, &k23));
        let t = gallery("fig2").unwrap();
        assert_eq!((t.n(), t.edge_count()), (8, 7));
        assert!(t.is_connected());
        assert!(matches!(gallery("fig9"), Err(Error::UnknownFixture(_))));
    }
}
