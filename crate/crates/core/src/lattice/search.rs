//! Depth-first search for norm-3, scale-1 representations.
//!
//! Each vertex receives a signed 3-support. Coordinates already in use may
//! appear with either sign; new coordinates are allocated in increasing
//! order and always enter with sign `+1`. Every representation is equivalent
//! to one of this form under a signed permutation of coordinates, so an
//! exhausted search proves that none exists.

use super::{verify_integrable, IntegralRepresentation};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::spectra::smallest_eigenvalue;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Float margin below `−3` required before declaring impossibility.
pub const IMPOSSIBILITY_MARGIN: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Found,
    NotRepresentable,
    Exhausted,
    BudgetExceeded,
}

/// Why a graph was rejected without search.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Certification {
    /// `λ_min < −3 − margin` in floating point.
    FloatMargin { lambda_min: f64, margin: f64 },
    /// `A + 3I` failed the exact positive-semidefiniteness test.
    ExactIndefinite,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub representation: Option<IntegralRepresentation>,
    /// Vertex assignments made.
    pub node_count: u64,
    pub smallest_eigenvalue: f64,
    pub certificate: Option<Certification>,
}

/// Breadth-first order from the vertex of largest degree (least index on
/// ties), scanning neighbours by index. Restarts at the least unvisited
/// vertex if the graph is disconnected.
pub fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let start = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap_or(0);
    let mut roots = std::iter::once(start).chain(0..n);
    while order.len() < n {
        let Some(root) = roots.find(|&v| !seen[v]) else { break };
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    /// Dense sign vectors of assigned vertices, in search order.
    signs: Vec<Vec<i8>>,
    supports: Vec<[usize; 3]>,
    dimension: usize,
    max_dimension: usize,
    nodes: u64,
    budget: u64,
}

struct OutOfBudget;

impl Search<'_> {
    fn run(&mut self, pos: usize) -> std::result::Result<bool, OutOfBudget> {
        if pos == self.order.len() {
            return Ok(true);
        }
        let v = self.order[pos];
        let targets: Vec<i64> = self.order[..pos].iter().map(|&u| self.g.has_edge(u, v) as i64).collect();
        let mut chosen = Vec::with_capacity(3);
        let mut partial = vec![0i64; pos];
        self.extend(pos, &targets, &mut chosen, &mut partial)
    }

    /// Chooses the existing coordinates of vertex `order[pos]` in increasing
    /// order; the remaining slots are filled with fresh coordinates.
    fn extend(
        &mut self,
        pos: usize,
        targets: &[i64],
        chosen: &mut Vec<(usize, i8)>,
        partial: &mut [i64],
    ) -> std::result::Result<bool, OutOfBudget> {
        let slots = 3 - chosen.len();
        let last = chosen.last().map(|&(c, _)| c);
        let feasible = (0..pos).all(|q| {
            let rest = self.supports[q].iter().filter(|&&c| last.is_none_or(|l| c > l)).count();
            (targets[q] - partial[q]).unsigned_abs() as usize <= slots.min(rest)
        });
        if !feasible {
            return Ok(false);
        }
        let start = last.map_or(0, |l| l + 1);
        if slots > 0 {
            for c in start..self.dimension {
                for sign in [1i8, -1] {
                    for q in 0..pos {
                        partial[q] += (sign * self.signs[q][c]) as i64;
                    }
                    chosen.push((c, sign));
                    let found = self.extend(pos, targets, chosen, partial)?;
                    chosen.pop();
                    for q in 0..pos {
                        partial[q] -= (sign * self.signs[q][c]) as i64;
                    }
                    if found {
                        return Ok(true);
                    }
                }
            }
        }
        if partial.iter().zip(targets).any(|(p, t)| p != t) {
            return Ok(false);
        }
        if self.dimension + slots > self.max_dimension {
            return Ok(false);
        }
        self.commit(pos, chosen)
    }

    fn commit(&mut self, pos: usize, chosen: &[(usize, i8)]) -> std::result::Result<bool, OutOfBudget> {
        if self.nodes >= self.budget {
            return Err(OutOfBudget);
        }
        self.nodes += 1;
        let fresh = 3 - chosen.len();
        let mut x = vec![0i8; self.max_dimension];
        let mut support = [0usize; 3];
        for (i, &(c, s)) in chosen.iter().enumerate() {
            x[c] = s;
            support[i] = c;
        }
        for f in 0..fresh {
            x[self.dimension + f] = 1;
            support[chosen.len() + f] = self.dimension + f;
        }
        self.dimension += fresh;
        self.signs.push(x);
        self.supports.push(support);
        if self.run(pos + 1)? {
            return Ok(true);
        }
        self.signs.pop();
        self.supports.pop();
        self.dimension -= fresh;
        Ok(false)
    }
}

/// Searches for a 1-integrable representation of norm 3.
///
/// Graphs with `λ_min` certifiably below `−3` are rejected up front. A
/// `Found` outcome has passed [`verify_integrable`].
pub fn find_norm3_representation(g: &Graph, budget: u64) -> Result<SearchOutcome> {
    if budget == 0 {
        return Err(Error::InvalidBudget);
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    let lambda = smallest_eigenvalue(g);
    let rejected = |certificate| SearchOutcome {
        status: SearchStatus::NotRepresentable,
        representation: None,
        node_count: 0,
        smallest_eigenvalue: lambda,
        certificate: Some(certificate),
    };
    if lambda < -3.0 - IMPOSSIBILITY_MARGIN {
        return Ok(rejected(Certification::FloatMargin { lambda_min: lambda, margin: IMPOSSIBILITY_MARGIN }));
    }
    let shifted = crate::exact::IntMatrix::from_rows(g.adjacency_rows()).shifted(3);
    if !shifted.is_positive_semidefinite() {
        return Ok(rejected(Certification::ExactIndefinite));
    }

    let (status, representation, node_count) = search_with_cap(g, budget, 3 * g.n())?;
    Ok(SearchOutcome { status, representation, node_count, smallest_eigenvalue: lambda, certificate: None })
}

/// The search proper, with coordinates limited to `0..max_dimension`.
pub(crate) fn search_with_cap(
    g: &Graph,
    budget: u64,
    max_dimension: usize,
) -> Result<(SearchStatus, Option<IntegralRepresentation>, u64)> {
    let n = g.n();
    let mut search = Search {
        g,
        order: search_order(g),
        signs: Vec::with_capacity(n),
        supports: Vec::with_capacity(n),
        dimension: 0,
        max_dimension,
        nodes: 0,
        budget,
    };
    let status = match search.run(0) {
        Ok(true) => SearchStatus::Found,
        Ok(false) => SearchStatus::Exhausted,
        Err(OutOfBudget) => SearchStatus::BudgetExceeded,
    };
    let representation = if status == SearchStatus::Found {
        let d = search.dimension;
        let mut vectors = vec![Vec::new(); n];
        for (pos, &v) in search.order.iter().enumerate() {
            vectors[v] = search.signs[pos][..d].iter().map(|&s| s as i64).collect();
        }
        let r = IntegralRepresentation::new(d, vectors, 1)?;
        let report = verify_integrable(g, &r, 1)?;
        assert!(report.pass, "search produced an unverified representation: {report:?}");
        Some(r)
    } else {
        None
    };
    Ok((status, representation, search.nodes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_graph, complete_multipartite, cycle_complement, hypercube, star};

    fn found(g: &Graph) -> IntegralRepresentation {
        let out = find_norm3_representation(g, 10_000_000).unwrap();
        assert_eq!(out.status, SearchStatus::Found);
        out.representation.unwrap()
    }

    #[test]
    fn cube_and_complete_graphs() {
        let r = found(&hypercube(3).unwrap());
        assert_eq!(r.len(), 8);
        found(&complete_graph(7).unwrap());
        found(&complete_multipartite(4, 3).unwrap());
        found(&cycle_complement(&[4, 4]).unwrap());
    }

    #[test]
    fn large_star_is_rejected() {
        let out = find_norm3_representation(&star(10).unwrap(), 100).unwrap();
        assert_eq!(out.status, SearchStatus::NotRepresentable);
        assert!((out.smallest_eigenvalue + 10f64.sqrt()).abs() < 1e-8);
        assert!(matches!(out.certificate, Some(Certification::FloatMargin { .. })));
    }

    #[test]
    fn boundary_star_is_searched() {
        // K_{1,9} has λ_min = −3 exactly and must reach the search.
        let out = find_norm3_representation(&star(9).unwrap(), 1_000_000).unwrap();
        assert_ne!(out.status, SearchStatus::NotRepresentable);
    }

    #[test]
    fn budget_errors() {
        let g = hypercube(3).unwrap();
        assert!(matches!(find_norm3_representation(&g, 0), Err(Error::InvalidBudget)));
        let out = find_norm3_representation(&g, 2).unwrap();
        assert_eq!(out.status, SearchStatus::BudgetExceeded);
        assert_eq!(out.node_count, 2);
        let two_triangles = crate::graphs::disjoint_cycles(&[3, 3]).unwrap();
        assert!(matches!(find_norm3_representation(&two_triangles, 10), Err(Error::Precondition(_))));
    }

    #[test]
    fn tight_dimension_exhausts() {
        // J + 2I has rank 4, so K_4 has no norm-3 representation in dimension 3.
        let k4 = complete_graph(4).unwrap();
        let (status, _, nodes) = search_with_cap(&k4, 1_000, 3).unwrap();
        assert_eq!(status, SearchStatus::Exhausted);
        assert!(nodes > 0);
        // Three ±1-vectors of length 3 cannot pairwise differ in one sign.
        let (status, _, _) = search_with_cap(&complete_graph(3).unwrap(), 1_000, 3).unwrap();
        assert_eq!(status, SearchStatus::Exhausted);
        let (status, r, _) = search_with_cap(&complete_graph(2).unwrap(), 1_000, 3).unwrap();
        assert_eq!(status, SearchStatus::Found);
        assert_eq!(r.unwrap().dimension(), 3);
    }

    #[test]
    fn order_starts_at_max_degree() {
        let g = star(4).unwrap();
        let order = search_order(&g);
        assert_eq!(order, vec![0, 1, 2, 3, 4]);
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(search_order(&g), vec![1, 0, 2, 3]);
    }
}
