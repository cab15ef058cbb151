//! Hoffman graphs: graphs whose vertices are labelled slim or fat, with fat
//! vertices pairwise non-adjacent and each adjacent to some slim vertex.
//!
//! Vertices are indexed slim first: `0..n_slim` are slim and
//! `n_slim..n_slim + n_fat` are fat.

mod random;
mod representation;

pub use random::{random_hoffman, random_represented};
pub use representation::{
    full_to_reduced, reduced_to_full, verify_full_representation, verify_reduced_representation, FullRepresentation,
    ReducedRepresentation,
};

use crate::error::{Error, Result};
use crate::exact::IntMatrix;
use crate::graphs::Graph;
use crate::spectra::SymMatrix;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HoffmanJson", into = "HoffmanJson")]
pub struct HoffmanGraph {
    graph: Graph,
    n_slim: usize,
}

/// Wire form `{"n_slim": int, "n_fat": int, "edges": [[u, v], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HoffmanJson {
    pub n_slim: usize,
    pub n_fat: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<HoffmanJson> for HoffmanGraph {
    type Error = Error;
    fn try_from(j: HoffmanJson) -> Result<Self> {
        HoffmanGraph::from_parts(j.n_slim, j.n_fat, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<HoffmanGraph> for HoffmanJson {
    fn from(h: HoffmanGraph) -> Self {
        HoffmanJson {
            n_slim: h.n_slim,
            n_fat: h.n_fat(),
            edges: h.graph.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl HoffmanGraph {
    /// Edges use the combined index space, fat vertices after slim ones.
    pub fn from_parts<I>(n_slim: usize, n_fat: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n_slim == 0 {
            return Err(Error::NoSlim);
        }
        let graph = Graph::from_edges(n_slim + n_fat, edges)?;
        Self::validate(graph, n_slim)
    }

    /// The all-slim Hoffman graph of `g`.
    pub fn from_graph(g: &Graph) -> Self {
        HoffmanGraph { graph: g.clone(), n_slim: g.n() }
    }

    fn validate(graph: Graph, n_slim: usize) -> Result<Self> {
        if n_slim == 0 {
            return Err(Error::NoSlim);
        }
        for f in n_slim..graph.n() {
            if let Some(g) = graph.neighbors(f).find(|&g| g >= n_slim) {
                return Err(Error::FatFatEdge(f.min(g), f.max(g)));
            }
            if graph.degree(f) == 0 {
                return Err(Error::IsolatedFat(f));
            }
        }
        Ok(HoffmanGraph { graph, n_slim })
    }

    /// Three pairwise adjacent slim vertices and two fat vertices, each
    /// adjacent to all three. Its smallest eigenvalue is −4.
    pub fn figure3() -> Self {
        let edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)];
        HoffmanGraph::from_parts(3, 2, edges).expect("fixture is a Hoffman graph")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n_slim(&self) -> usize {
        self.n_slim
    }

    pub fn n_fat(&self) -> usize {
        self.graph.n() - self.n_slim
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn is_fat_vertex(&self, v: usize) -> bool {
        v >= self.n_slim && v < self.graph.n()
    }

    pub fn slim_graph(&self) -> Graph {
        let slim: Vec<usize> = (0..self.n_slim).collect();
        self.graph.induced(&slim).expect("slim set is nonempty")
    }

    pub fn fat_neighbors(&self, x: usize) -> Vec<usize> {
        self.graph.neighbors(x).filter(|&f| f >= self.n_slim).collect()
    }

    pub fn slim_neighbors(&self, x: usize) -> Vec<usize> {
        self.graph.neighbors(x).filter(|&y| y < self.n_slim).collect()
    }

    /// `|N^fat(x, y)|`.
    pub fn common_fat(&self, x: usize, y: usize) -> usize {
        (self.n_slim..self.graph.n()).filter(|&f| self.graph.has_edge(x, f) && self.graph.has_edge(y, f)).count()
    }

    /// Every slim vertex has a fat neighbour.
    pub fn is_fat(&self) -> bool {
        (0..self.n_slim).all(|x| !self.fat_neighbors(x).is_empty())
    }

    /// Diagonal `−|N^fat(x)|`; off the diagonal `1 − |N^fat(x, y)|` for
    /// adjacent slim pairs and `−|N^fat(x, y)|` otherwise.
    pub fn special_matrix(&self) -> IntMatrix {
        let n = self.n_slim;
        let mut m = IntMatrix::zeros(n);
        for x in 0..n {
            m.set(x, x, -(self.fat_neighbors(x).len() as i64));
            for y in x + 1..n {
                let common = self.common_fat(x, y) as i64;
                let value = if self.graph.has_edge(x, y) { 1 - common } else { -common };
                m.set(x, y, value);
                m.set(y, x, value);
            }
        }
        m
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        SymMatrix::from_int(&self.special_matrix()).expect("special matrix is symmetric").eigenvalues()
    }

    pub fn smallest_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    /// Signed graph on the slim vertices: positive edges join adjacent pairs
    /// with no common fat neighbour; negative edges join adjacent pairs with
    /// at least two, and non-adjacent pairs with at least one.
    pub fn special_graph(&self) -> SignedGraph {
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for x in 0..self.n_slim {
            for y in x + 1..self.n_slim {
                let common = self.common_fat(x, y);
                match (self.graph.has_edge(x, y), common) {
                    (true, 0) => positive.push((x, y)),
                    (true, c) if c >= 2 => negative.push((x, y)),
                    (false, c) if c >= 1 => negative.push((x, y)),
                    _ => {}
                }
            }
        }
        SignedGraph { n: self.n_slim, positive, negative }
    }

    /// Subgraph of the slim graph on the slim neighbours of fat vertex `f`.
    pub fn quasi_clique(&self, f: usize) -> Result<Graph> {
        if !self.is_fat_vertex(f) {
            return Err(Error::NotFat(f));
        }
        self.graph.induced(&self.slim_neighbors(f))
    }

    pub fn all_quasi_cliques_are_cliques(&self) -> bool {
        (self.n_slim..self.graph.n()).all(|f| {
            let q = self.quasi_clique(f).expect("index is fat");
            q.edge_count() == q.n() * (q.n() - 1) / 2
        })
    }

    /// The induced Hoffman subgraph on `vertices` (slim and fat, any order).
    pub fn induced(&self, vertices: &[usize]) -> Result<HoffmanSubgraph> {
        let mut seen = vec![false; self.graph.n()];
        for &v in vertices {
            if v >= self.graph.n() {
                return Err(Error::NotInduced(format!("vertex {v} is out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotInduced(format!("vertex {v} is repeated")));
            }
        }
        let mut order: Vec<usize> = vertices.iter().copied().filter(|&v| v < self.n_slim).collect();
        order.sort_unstable();
        let n_slim = order.len();
        if n_slim == 0 {
            return Err(Error::NoSlim);
        }
        let mut fat: Vec<usize> = vertices.iter().copied().filter(|&v| v >= self.n_slim).collect();
        fat.sort_unstable();
        order.extend(fat);
        let graph = self.graph.induced(&order)?;
        let hoffman = HoffmanGraph::validate(graph, n_slim).map_err(|e| match e {
            Error::IsolatedFat(f) => Error::IsolatedFat(order[f]),
            e => e,
        })?;
        Ok(HoffmanSubgraph { hoffman, vertices: order })
    }

    /// `⟨W⟩`: induced on `W` and every fat vertex adjacent to some vertex of `W`.
    pub fn generated(&self, slim: &[usize]) -> Result<HoffmanSubgraph> {
        if let Some(&v) = slim.iter().find(|&&v| v >= self.n_slim) {
            return Err(Error::InvalidParameter(format!("vertex {v} is not slim")));
        }
        let mut vertices = slim.to_vec();
        vertices.extend((self.n_slim..self.graph.n()).filter(|&f| slim.iter().any(|&w| self.graph.has_edge(w, f))));
        self.induced(&vertices)
    }

    /// Factors generated by the connected components of the special graph,
    /// ordered by least slim vertex.
    pub fn decompose(&self) -> Vec<HoffmanSubgraph> {
        self.special_graph()
            .components()
            .iter()
            .map(|w| self.generated(w).expect("components are nonempty slim sets"))
            .collect()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.special_graph().components().len() == 1
    }

    /// Whether the theorem guaranteeing a norm-3 reduced representation
    /// applies: fat, indecomposable, `λ_min ≥ −3` and some slim vertex with
    /// at least two fat neighbours.
    pub fn check_norm3_reduced_hypotheses(&self) -> Norm3Hypotheses {
        let lambda_min = self.smallest_eigenvalue();
        let fat = self.is_fat();
        let indecomposable = self.is_indecomposable();
        let eigenvalue_at_least_minus_three = lambda_min >= -3.0 - crate::spectra::EXTERNAL_TOLERANCE;
        let slim_with_two_fat = (0..self.n_slim).any(|x| self.fat_neighbors(x).len() >= 2);
        Norm3Hypotheses {
            fat,
            indecomposable,
            eigenvalue_at_least_minus_three,
            slim_with_two_fat,
            lambda_min,
            promised: fat && indecomposable && eigenvalue_at_least_minus_three && slim_with_two_fat,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Norm3Hypotheses {
    pub fat: bool,
    pub indecomposable: bool,
    pub eigenvalue_at_least_minus_three: bool,
    pub slim_with_two_fat: bool,
    pub lambda_min: f64,
    /// All four hypotheses hold, so a norm-3 reduced representation exists.
    pub promised: bool,
}

/// Signed graph with disjoint positive and negative edge sets, both listed
/// as `(x, y)` with `x < y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedGraph {
    pub n: usize,
    pub positive: Vec<(usize, usize)>,
    pub negative: Vec<(usize, usize)>,
}

impl SignedGraph {
    /// Components of the underlying graph with edges `E⁺ ∪ E⁻`.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let edges = self.positive.iter().chain(&self.negative).copied();
        Graph::from_edges(self.n, edges).expect("edges are in range").components()
    }
}

/// An induced Hoffman subgraph together with the original index of each of
/// its vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoffmanSubgraph {
    pub hoffman: HoffmanGraph,
    /// `vertices[i]` is the vertex of the parent graph at local index `i`.
    pub vertices: Vec<usize>,
}

impl HoffmanSubgraph {
    pub fn slim_vertices(&self) -> &[usize] {
        &self.vertices[..self.hoffman.n_slim]
    }

    pub fn fat_vertices(&self) -> &[usize] {
        &self.vertices[self.hoffman.n_slim..]
    }

    fn check_induced(&self, h: &HoffmanGraph) -> Result<()> {
        let expected = h.induced(&self.vertices)?;
        if expected != *self {
            return Err(Error::NotInduced("graph or labels differ from the parent".into()));
        }
        Ok(())
    }
}

/// Which of the four sum conditions hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumReport {
    pub pass: bool,
    /// Vertex sets cover the parent.
    pub covers: bool,
    /// Slim sets partition the parent's slim vertices.
    pub partitions_slim: bool,
    /// Fat neighbours of a factor's slim vertices lie in that factor.
    pub closed_under_fat: bool,
    /// Cross pairs share at most one fat neighbour, and one exactly when adjacent.
    pub cross_pairs: bool,
}

/// Tests whether `h` is the sum of `h1` and `h2`.
pub fn verify_sum(h: &HoffmanGraph, h1: &HoffmanSubgraph, h2: &HoffmanSubgraph) -> Result<SumReport> {
    h1.check_induced(h)?;
    h2.check_induced(h)?;
    let mut covered = vec![false; h.n()];
    for &v in h1.vertices.iter().chain(&h2.vertices) {
        covered[v] = true;
    }
    let covers = covered.iter().all(|&c| c);
    let mut slim_count = vec![0usize; h.n_slim];
    for &x in h1.slim_vertices().iter().chain(h2.slim_vertices()) {
        slim_count[x] += 1;
    }
    let partitions_slim = slim_count.iter().all(|&c| c == 1);
    let closed_under_fat = [h1, h2].iter().all(|part| {
        part.slim_vertices().iter().all(|&x| h.fat_neighbors(x).iter().all(|f| part.fat_vertices().contains(f)))
    });
    let cross_pairs = h1.slim_vertices().iter().all(|&x| {
        h2.slim_vertices().iter().all(|&y| {
            let common = h.common_fat(x, y);
            common <= 1 && (common == 1) == h.graph.has_edge(x, y)
        })
    });
    Ok(SumReport {
        pass: covers && partitions_slim && closed_under_fat && cross_pairs,
        covers,
        partitions_slim,
        closed_under_fat,
        cross_pairs,
    })
}

/// True when every entry of `m` between different cells vanishes.
pub fn is_block_diagonal(m: &IntMatrix, cells: &[&[usize]]) -> bool {
    let mut cell_of = vec![usize::MAX; m.order()];
    for (i, cell) in cells.iter().enumerate() {
        for &x in *cell {
            cell_of[x] = i;
        }
    }
    (0..m.order()).all(|x| (0..m.order()).all(|y| cell_of[x] == cell_of[y] || m.get(x, y) == 0))
}

/// Lays the factors' special matrices back at their parent indices and
/// compares with `Sp(h)` entry by entry.
pub fn factors_reassemble(h: &HoffmanGraph, factors: &[HoffmanSubgraph]) -> bool {
    let mut m = IntMatrix::zeros(h.n_slim());
    for f in factors {
        let sp = f.hoffman.special_matrix();
        for (a, &x) in f.slim_vertices().iter().enumerate() {
            for (b, &y) in f.slim_vertices().iter().enumerate() {
                m.set(x, y, sp.get(a, b));
            }
        }
    }
    m == h.special_matrix()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_multipartite, disjoint_cycles, is_isomorphic};

    fn two_slim_one_fat() -> HoffmanGraph {
        HoffmanGraph::from_parts(2, 1, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn construction_checks() {
        assert!(HoffmanGraph::from_parts(1, 1, [(0, 1)]).is_ok());
        assert!(matches!(HoffmanGraph::from_parts(1, 2, [(0, 1), (1, 2)]), Err(Error::FatFatEdge(1, 2))));
        assert!(matches!(HoffmanGraph::from_parts(1, 1, []), Err(Error::IsolatedFat(1))));
        assert!(matches!(HoffmanGraph::from_parts(0, 1, []), Err(Error::NoSlim)));
    }

    #[test]
    fn figure3_fixture() {
        let h = HoffmanGraph::figure3();
        assert!(is_isomorphic(&h.slim_graph(), &crate::graphs::complete_graph(3).unwrap()));
        assert_eq!(h.special_matrix().rows(), vec![vec![-2, -1, -1], vec![-1, -2, -1], vec![-1, -1, -2]]);
        assert!((h.smallest_eigenvalue() + 4.0).abs() < 1e-8);
        let s = h.special_graph();
        assert!(s.positive.is_empty());
        assert_eq!(s.negative, vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(h.decompose().len(), 1);
        for f in [3, 4] {
            assert_eq!(h.quasi_clique(f).unwrap().edge_count(), 3);
        }
        assert!(h.all_quasi_cliques_are_cliques());
        assert!(!h.check_norm3_reduced_hypotheses().promised);
        assert!(!h.check_norm3_reduced_hypotheses().eigenvalue_at_least_minus_three);
    }

    #[test]
    fn small_fixtures() {
        let h = HoffmanGraph::from_parts(1, 1, [(0, 1)]).unwrap();
        assert_eq!(h.slim_graph().n(), 1);
        assert_eq!(h.special_matrix().rows(), vec![vec![-1]]);
        assert!((h.smallest_eigenvalue() + 1.0).abs() < 1e-8);
        assert_eq!(h.quasi_clique(1).unwrap().n(), 1);
        assert!(matches!(h.quasi_clique(0), Err(Error::NotFat(0))));

        let h = HoffmanGraph::from_parts(1, 2, [(0, 1), (0, 2)]).unwrap();
        let hyp = h.check_norm3_reduced_hypotheses();
        assert!(hyp.promised, "{hyp:?}");
        assert!((hyp.lambda_min + 2.0).abs() < 1e-8);

        let h = HoffmanGraph::from_parts(3, 1, [(0, 3), (2, 3), (0, 1), (1, 2)]).unwrap();
        assert!(!h.all_quasi_cliques_are_cliques());
    }

    #[test]
    fn all_slim_graphs() {
        let g = disjoint_cycles(&[5]).unwrap();
        let h = HoffmanGraph::from_graph(&g);
        assert_eq!(h.slim_graph(), g);
        assert_eq!(h.special_matrix().rows(), g.adjacency_rows());
        assert_eq!(h.special_graph().positive, g.edges());
        assert!(h.special_graph().negative.is_empty());
        assert_eq!(h.decompose().len(), 1);
        assert!(!h.check_norm3_reduced_hypotheses().fat);
        let k = HoffmanGraph::from_graph(&complete_multipartite(4, 3).unwrap());
        assert!((k.smallest_eigenvalue() + 3.0).abs() < 1e-8);
    }

    #[test]
    fn single_shared_fat_splits() {
        let h = two_slim_one_fat();
        let s = h.special_graph();
        assert!(s.positive.is_empty() && s.negative.is_empty());
        let factors = h.decompose();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].vertices, vec![0, 2]);
        assert_eq!(factors[1].vertices, vec![1, 2]);
        assert!(factors_reassemble(&h, &factors));
        let report = verify_sum(&h, &factors[0], &factors[1]).unwrap();
        assert!(report.pass);
    }

    #[test]
    fn figure3_split_is_not_a_sum() {
        let h = HoffmanGraph::figure3();
        let h1 = h.generated(&[0]).unwrap();
        let h2 = h.generated(&[1, 2]).unwrap();
        let report = verify_sum(&h, &h1, &h2).unwrap();
        assert!(!report.pass);
        assert!(!report.cross_pairs);
        assert!(report.covers && report.partitions_slim && report.closed_under_fat);
        let sp = h.special_matrix();
        assert!(!is_block_diagonal(&sp, &[&[0], &[1, 2]]));
    }

    #[test]
    fn empty_factor_rejected() {
        let h = HoffmanGraph::figure3();
        assert!(matches!(h.generated(&[]), Err(Error::NoSlim)));
    }

    #[test]
    fn foreign_subgraph_rejected() {
        let h = HoffmanGraph::figure3();
        let other = two_slim_one_fat();
        let fake = other.generated(&[0, 1]).unwrap();
        let h1 = h.generated(&[0, 1]).unwrap();
        assert!(matches!(verify_sum(&h, &h1, &fake), Err(Error::NotInduced(_))));
    }

    #[test]
    fn json_round_trip() {
        let h = HoffmanGraph::figure3();
        let s = serde_json::to_string(&h).unwrap();
        assert!(s.starts_with(r#"{"n_slim":3,"n_fat":2,"edges":[[0,1]"#));
        assert_eq!(serde_json::from_str::<HoffmanGraph>(&s).unwrap(), h);
        let bad = r#"{"n_slim":1,"n_fat":2,"edges":[[0,1],[1,2]]}"#;
        assert!(serde_json::from_str::<HoffmanGraph>(bad).is_err());
    }
}
