//! Steiner triple systems: deterministic construction for every admissible
//! order, brute-force verification, block graphs and their canonical
//! norm-3 representation.

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::lattice::IntegralRepresentation;
use serde::{Deserialize, Serialize};

/// A point set `0..v` with a list of 3-element blocks.
///
/// [`TripleSystem::new`] only checks that blocks are well formed; the
/// Steiner property is checked by [`verify_sts`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "StsJson", into = "StsJson")]
pub struct TripleSystem {
    v: usize,
    blocks: Vec<[usize; 3]>,
}

/// Wire form `{"v": int, "blocks": [[a, b, c], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StsJson {
    pub v: usize,
    pub blocks: Vec<[usize; 3]>,
}

impl TryFrom<StsJson> for TripleSystem {
    type Error = Error;
    fn try_from(j: StsJson) -> Result<Self> {
        TripleSystem::new(j.v, j.blocks)
    }
}

impl From<TripleSystem> for StsJson {
    fn from(t: TripleSystem) -> Self {
        StsJson { v: t.v, blocks: t.blocks }
    }
}

impl TripleSystem {
    pub fn new(v: usize, blocks: Vec<[usize; 3]>) -> Result<Self> {
        for b in &blocks {
            if b.iter().any(|&p| p >= v) {
                return Err(Error::InvalidBlock { block: b.to_vec(), reason: format!("point outside 0..{v}") });
            }
            if b[0] == b[1] || b[1] == b[2] || b[0] == b[2] {
                return Err(Error::InvalidBlock { block: b.to_vec(), reason: "points are not distinct".into() });
            }
        }
        Ok(TripleSystem { v, blocks })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn blocks(&self) -> &[[usize; 3]] {
        &self.blocks
    }

    /// Same system with each block sorted and blocks in lexicographic order.
    pub fn normalized(&self) -> TripleSystem {
        let mut blocks: Vec<[usize; 3]> = self
            .blocks
            .iter()
            .map(|b| {
                let mut b = *b;
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_unstable();
        TripleSystem { v: self.v, blocks }
    }
}

/// `v ≡ 1, 3 (mod 6)`.
pub fn sts_admissible(v: usize) -> bool {
    matches!(v % 6, 1 | 3)
}

/// Builds an STS(v): the Bose construction for `v = 6t + 3` and the Skolem
/// construction for `v = 6t + 1`. Blocks are sorted and listed in
/// lexicographic order.
pub fn construct_sts(v: usize) -> Result<TripleSystem> {
    if !sts_admissible(v) {
        return Err(Error::Inadmissible(v));
    }
    let blocks = if v % 6 == 3 { bose(v / 3) } else { skolem((v - 1) / 3) };
    Ok(TripleSystem { v, blocks }.normalized())
}

/// Bose: idempotent commutative quasigroup `x∘y = (x + y)/2` on `Z_m`, `m`
/// odd; point `(x, i)` is `3x + i`.
fn bose(m: usize) -> Vec<[usize; 3]> {
    let half = m.div_ceil(2);
    let op = |x: usize, y: usize| (x + y) * half % m;
    let pt = |x: usize, i: usize| 3 * x + i % 3;
    let mut blocks = Vec::new();
    for x in 0..m {
        blocks.push([pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for i in 0..3 {
        for x in 0..m {
            for y in x + 1..m {
                blocks.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    blocks
}

/// Skolem: half-idempotent commutative quasigroup on `Z_{2n}` obtained from
/// addition by renaming `2i ↦ i`, `2i + 1 ↦ n + i`. Point `∞` is `0` and
/// `(x, i)` is `1 + 3x + i`.
fn skolem(two_n: usize) -> Vec<[usize; 3]> {
    let n = two_n / 2;
    let rename = |s: usize| if s.is_multiple_of(2) { s / 2 } else { n + s / 2 };
    let op = |x: usize, y: usize| rename((x + y) % two_n);
    let pt = |x: usize, i: usize| 1 + 3 * x + i % 3;
    let mut blocks = Vec::new();
    for x in 0..n {
        blocks.push([pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for x in 0..n {
        for i in 0..3 {
            blocks.push([0, pt(n + x, i), pt(x, i + 1)]);
        }
    }
    for i in 0..3 {
        for x in 0..two_n {
            for y in x + 1..two_n {
                blocks.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    blocks
}

/// Outcome of [`verify_sts`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StsReport {
    pub pass: bool,
    pub v: usize,
    pub block_count: usize,
    /// First pair (in lexicographic order) not covered exactly once, with the
    /// number of blocks containing it.
    pub witness: Option<StsWitness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StsWitness {
    pub pair: (usize, usize),
    pub count: usize,
}

/// For every pair of points, counts the blocks containing it.
pub fn verify_sts(t: &TripleSystem) -> StsReport {
    let mut witness = None;
    'outer: for a in 0..t.v {
        for b in a + 1..t.v {
            let count = t.blocks.iter().filter(|blk| blk.contains(&a) && blk.contains(&b)).count();
            if count != 1 {
                witness = Some(StsWitness { pair: (a, b), count });
                break 'outer;
            }
        }
    }
    StsReport { pass: witness.is_none(), v: t.v, block_count: t.blocks.len(), witness }
}

fn require_steiner(t: &TripleSystem) -> Result<()> {
    match verify_sts(t).witness {
        None => Ok(()),
        Some(w) => Err(Error::NotSteiner { pair: w.pair, count: w.count }),
    }
}

/// One vertex per block (in block order); blocks meeting in exactly one
/// point are adjacent.
pub fn block_graph(t: &TripleSystem) -> Result<Graph> {
    require_steiner(t)?;
    if t.blocks.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let edges = (0..t.blocks.len()).flat_map(|i| {
        (i + 1..t.blocks.len()).filter(move |&j| intersection(&t.blocks[i], &t.blocks[j]) == 1).map(move |j| (i, j))
    });
    Graph::from_edges(t.blocks.len(), edges)
}

fn intersection(a: &[usize; 3], b: &[usize; 3]) -> usize {
    a.iter().filter(|p| b.contains(p)).count()
}

/// Strongly regular parameters of the block graph of an STS(v).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub c: usize,
}

/// `(v(v−1)/6, 3(v−3)/2, (v+3)/2, 9)`.
pub fn sts_srg_params(v: usize) -> Result<SrgParams> {
    if !sts_admissible(v) || v < 7 {
        return Err(Error::Inadmissible(v));
    }
    Ok(SrgParams { n: v * (v - 1) / 6, k: 3 * (v - 3) / 2, a: (v + 3) / 2, c: 9 })
}

/// Block `{a, b, c}` ↦ `e_a + e_b + e_c` in dimension `v`.
pub fn canonical_block_representation(t: &TripleSystem) -> Result<IntegralRepresentation> {
    require_steiner(t)?;
    let vectors = t
        .blocks
        .iter()
        .map(|b| {
            let mut x = vec![0i64; t.v];
            for &p in b {
                x[p] = 1;
            }
            x
        })
        .collect();
    IntegralRepresentation::new(t.v, vectors, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{classify_regularity, complete_graph, complete_multipartite, is_isomorphic};
    use crate::lattice::{gram_matrix, verify_integrable};

    fn fano() -> TripleSystem {
        let blocks = [[1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [5, 6, 1], [6, 7, 2], [7, 1, 3]];
        TripleSystem::new(7, blocks.iter().map(|b| b.map(|p| p - 1)).collect()).unwrap()
    }

    #[test]
    fn admissibility() {
        assert!(sts_admissible(7));
        assert!(sts_admissible(9));
        assert!(!sts_admissible(5));
        assert!(!sts_admissible(6));
    }

    #[test]
    fn construction_block_counts() {
        assert_eq!(construct_sts(7).unwrap().blocks().len(), 7);
        assert_eq!(construct_sts(9).unwrap().blocks().len(), 12);
        assert!(matches!(construct_sts(5), Err(Error::Inadmissible(5))));
        for v in (1..=45).filter(|&v| sts_admissible(v)) {
            let t = construct_sts(v).unwrap();
            assert_eq!(t.blocks().len(), v * (v - 1) / 6, "v={v}");
            assert!(verify_sts(&t).pass, "v={v}");
        }
    }

    #[test]
    fn construction_is_lexicographic() {
        let t = construct_sts(13).unwrap();
        assert!(t.blocks().windows(2).all(|w| w[0] < w[1]));
        assert!(t.blocks().iter().all(|b| b[0] < b[1] && b[1] < b[2]));
    }

    #[test]
    fn fano_verifies() {
        assert!(verify_sts(&fano()).pass);
    }

    #[test]
    fn double_cover_fails_with_witness() {
        let t = TripleSystem::new(4, vec![[0, 1, 2], [0, 1, 3]]).unwrap();
        let r = verify_sts(&t);
        assert!(!r.pass);
        assert_eq!(r.witness, Some(StsWitness { pair: (0, 1), count: 2 }));
        assert!(matches!(block_graph(&t), Err(Error::NotSteiner { .. })));
    }

    #[test]
    fn malformed_blocks_rejected() {
        assert!(TripleSystem::new(3, vec![[0, 1, 3]]).is_err());
        assert!(TripleSystem::new(3, vec![[0, 1, 1]]).is_err());
    }

    #[test]
    fn small_block_graphs() {
        let g7 = block_graph(&construct_sts(7).unwrap()).unwrap();
        assert_eq!(g7, complete_graph(7).unwrap());
        let g9 = block_graph(&construct_sts(9).unwrap()).unwrap();
        assert!(is_isomorphic(&g9, &complete_multipartite(4, 3).unwrap()));
        let g13 = block_graph(&construct_sts(13).unwrap()).unwrap();
        assert!(classify_regularity(&g13).srg.unwrap().matches(26, 15, 8, 9));
    }

    #[test]
    fn srg_parameter_formula() {
        assert_eq!(sts_srg_params(13).unwrap(), SrgParams { n: 26, k: 15, a: 8, c: 9 });
        assert_eq!(sts_srg_params(15).unwrap(), SrgParams { n: 35, k: 18, a: 9, c: 9 });
        assert_eq!(sts_srg_params(9).unwrap(), SrgParams { n: 12, k: 9, a: 6, c: 9 });
        assert!(sts_srg_params(3).is_err());
        assert!(sts_srg_params(11).is_err());
    }

    #[test]
    fn canonical_vectors() {
        let t = fano();
        let r = canonical_block_representation(&t).unwrap();
        let b = t.blocks()[0];
        for p in 0..7 {
            assert_eq!(r.vector(0)[p], b.contains(&p) as i64);
        }
        let g = block_graph(&t).unwrap();
        assert!(verify_integrable(&g, &r, 1).unwrap().pass);

        let t9 = construct_sts(9).unwrap();
        let r9 = canonical_block_representation(&t9).unwrap();
        let gram = gram_matrix(&r9);
        let g9 = block_graph(&t9).unwrap();
        // Pick one disjoint and one meeting pair of blocks.
        let (i, j) =
            (0..12).flat_map(|i| (0..12).map(move |j| (i, j))).find(|&(i, j)| i != j && !g9.has_edge(i, j)).unwrap();
        assert_eq!(gram.get(i, j), 0);
        let (i, j) = g9.edges()[0];
        assert_eq!(gram.get(i, j), 1);
    }

    #[test]
    fn json_round_trip() {
        let t = construct_sts(7).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        let [a, b, c] = t.blocks()[0];
        assert!(s.starts_with(&format!(r#"{{"v":7,"blocks":[[{a},{b},{c}]"#)));
        assert_eq!(serde_json::from_str::<TripleSystem>(&s).unwrap(), t);
    }
}
