//! Reference routes used to cross-check the library: a plain enumeration of
//! canonical signed-support assignments and an enumeration of small
//! connected graphs up to isomorphism.

use crate::exact::IntMatrix;
use crate::graphs::{is_isomorphic, Graph};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    /// `A + 3I` is not positive semidefinite.
    Indefinite,
    Found(Vec<Vec<i64>>),
    Exhausted,
}

/// Assigns vertices in index order. For each vertex every 3-subset of the
/// coordinates `0..d + 3` (where `d` coordinates are in use) and every sign
/// pattern is tried; a pattern is canonical when its new coordinates are
/// exactly `d, d + 1, ...` and carry sign `+1`. A complete pattern is kept
/// when its inner products with all earlier vertices are right.
pub fn brute_force_norm3(g: &Graph) -> OracleVerdict {
    let shifted = IntMatrix::from_rows(g.adjacency_rows()).shifted(3);
    if !shifted.is_positive_semidefinite() {
        return OracleVerdict::Indefinite;
    }
    let mut vectors: Vec<Vec<i64>> = Vec::new();
    if place(g, &mut vectors, 0) {
        let d = vectors.iter().map(|x| x.len()).max().unwrap_or(0);
        for x in &mut vectors {
            x.resize(d, 0);
        }
        OracleVerdict::Found(vectors)
    } else {
        OracleVerdict::Exhausted
    }
}

fn used_dimension(vectors: &[Vec<i64>]) -> usize {
    vectors.iter().filter_map(|x| x.iter().rposition(|&a| a != 0)).map(|i| i + 1).max().unwrap_or(0)
}

fn place(g: &Graph, vectors: &mut Vec<Vec<i64>>, v: usize) -> bool {
    if v == g.n() {
        return true;
    }
    let d = used_dimension(vectors);
    let top = d + 3;
    for a in 0..top {
        for b in a + 1..top {
            for c in b + 1..top {
                let fresh: Vec<usize> = [a, b, c].into_iter().filter(|&i| i >= d).collect();
                if fresh.iter().enumerate().any(|(k, &i)| i != d + k) {
                    continue;
                }
                for pattern in 0..8u8 {
                    let support = [a, b, c];
                    let mut x = vec![0i64; top];
                    let mut canonical = true;
                    for (bit, &i) in support.iter().enumerate() {
                        let s = if pattern >> bit & 1 == 1 { -1 } else { 1 };
                        if i >= d && s == -1 {
                            canonical = false;
                        }
                        x[i] = s;
                    }
                    if !canonical {
                        continue;
                    }
                    let consistent = (0..v).all(|u| {
                        let ip: i64 = vectors[u].iter().zip(&x).map(|(p, q)| p * q).sum();
                        ip == g.has_edge(u, v) as i64
                    });
                    if consistent {
                        vectors.push(x);
                        if place(g, vectors, v + 1) {
                            return true;
                        }
                        vectors.pop();
                    }
                }
            }
        }
    }
    false
}

/// One representative of every isomorphism class of connected graphs on
/// `1..=max_n` vertices, ordered by vertex count.
pub fn connected_graphs_up_to_isomorphism(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut buckets: HashMap<(usize, Vec<usize>), Vec<Graph>> = HashMap::new();
        let mut reps = Vec::new();
        for mask in 0u64..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).expect("pairs are in range");
            if !g.is_connected() {
                continue;
            }
            let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
            degrees.sort_unstable();
            let bucket = buckets.entry((g.edge_count(), degrees)).or_default();
            if bucket.iter().all(|h| !is_isomorphic(h, &g)) {
                bucket.push(g.clone());
                reps.push(g);
            }
        }
        out.extend(reps);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_graph, hypercube};

    #[test]
    fn counts_of_connected_graphs() {
        let graphs = connected_graphs_up_to_isomorphism(5);
        let count = |n| graphs.iter().filter(|g| g.n() == n).count();
        assert_eq!([count(1), count(2), count(3), count(4), count(5)], [1, 1, 2, 6, 21]);
    }

    #[test]
    fn oracle_witnesses() {
        for g in [complete_graph(4).unwrap(), hypercube(3).unwrap()] {
            let OracleVerdict::Found(x) = brute_force_norm3(&g) else { panic!() };
            for u in 0..g.n() {
                for v in 0..g.n() {
                    let ip: i64 = x[u].iter().zip(&x[v]).map(|(p, q)| p * q).sum();
                    let expected = if u == v { 3 } else { g.has_edge(u, v) as i64 };
                    assert_eq!(ip, expected);
                }
            }
        }
        let k44 = crate::graphs::complete_multipartite(2, 4).unwrap();
        assert_eq!(brute_force_norm3(&k44), OracleVerdict::Indefinite);
    }
}
