use super::IntegralRepresentation;
use crate::error::{Error, Result};

/// Representation of `cycle_complement(lengths)`: the `p`-th vertex of a
/// cycle maps to `e + e_p − e_{p+1}` (positions cyclic within the cycle),
/// where `e` is coordinate 0 and cycle positions follow the vertex layout
/// shifted by one.
pub fn cycle_complement_representation(lengths: &[usize]) -> Result<IntegralRepresentation> {
    if lengths.is_empty() {
        return Err(Error::InvalidParameter("need at least one cycle".into()));
    }
    if let Some(&l) = lengths.iter().find(|&&l| l < 3) {
        return Err(Error::CycleTooShort(l));
    }
    let n: usize = lengths.iter().sum();
    let dimension = 1 + n;
    let mut vectors = Vec::with_capacity(n);
    let mut offset = 0;
    for &l in lengths {
        for p in 0..l {
            let mut x = vec![0i64; dimension];
            x[0] = 1;
            x[1 + offset + p] = 1;
            x[1 + offset + (p + 1) % l] = -1;
            vectors.push(x);
        }
        offset += l;
    }
    IntegralRepresentation::new(dimension, vectors, 1)
}

/// Pinned search witness for `hypercube(3)` (vertex `b` is the bit string
/// `b`), in dimension 8.
pub fn cube3_representation() -> IntegralRepresentation {
    IntegralRepresentation::new(CUBE_DIMENSION, CUBE_VECTORS.iter().map(|x| x.to_vec()).collect(), 1)
        .expect("pinned vectors have uniform length")
}

const CUBE_DIMENSION: usize = 8;
const CUBE_VECTORS: [[i64; CUBE_DIMENSION]; 8] = [
    [1, 1, 1, 0, 0, 0, 0, 0],
    [1, 0, 0, 1, 1, 0, 0, 0],
    [1, 0, 0, -1, 0, 1, 0, 0],
    [1, -1, 0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 1, 0, 1, 0, 1],
    [0, 0, 0, -1, 1, 0, 0, 1],
    [0, -1, 1, 0, 0, 0, 0, 1],
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{classify_regularity, complete_multipartite, cycle_complement, hypercube, is_isomorphic};
    use crate::lattice::{check_support_laws, gram_matrix, verify_integrable};

    #[test]
    fn cycle_complements_verify() {
        for lengths in [&[4, 4][..], &[4, 5], &[3, 3], &[3, 3, 3, 3], &[7]] {
            let g = cycle_complement(lengths).unwrap();
            let r = cycle_complement_representation(lengths).unwrap();
            assert_eq!(r.dimension(), 1 + lengths.iter().sum::<usize>());
            assert!(verify_integrable(&g, &r, 1).unwrap().pass, "{lengths:?}");
        }
    }

    #[test]
    fn consecutive_positions_are_orthogonal() {
        let r = cycle_complement_representation(&[4, 4]).unwrap();
        assert_eq!(r.inner(0, 1), 0);
        assert_eq!(r.inner(0, 2), 1);
        assert_eq!(r.inner(0, 4), 1);
    }

    #[test]
    fn triangles_give_multipartite() {
        let g = cycle_complement(&[3, 3, 3, 3]).unwrap();
        assert!(is_isomorphic(&g, &complete_multipartite(4, 3).unwrap()));
    }

    #[test]
    fn short_cycles_rejected() {
        assert!(matches!(cycle_complement_representation(&[4, 2]), Err(Error::CycleTooShort(2))));
    }

    #[test]
    fn cycle_complement_support_histogram() {
        // Pair (p, q) in one cycle meets in {0} plus |{p, p+1} ∩ {q, q+1}|.
        let lengths = [4, 4];
        let g = cycle_complement(&lengths).unwrap();
        let r = cycle_complement_representation(&lengths).unwrap();
        let law = check_support_laws(&g, &r).unwrap();
        let mut adjacent = [0usize; 4];
        let mut non_adjacent = [0usize; 4];
        for x in 0..8 {
            for y in x + 1..8 {
                let (cx, px, cy, py) = (x / 4, x % 4, y / 4, y % 4);
                let size = if cx != cy {
                    1
                } else {
                    let sx = [px, (px + 1) % 4];
                    1 + sx.iter().filter(|p| **p == py || **p == (py + 1) % 4).count()
                };
                if g.has_edge(x, y) {
                    adjacent[size] += 1;
                } else {
                    non_adjacent[size] += 1;
                }
            }
        }
        assert_eq!(law.adjacent, adjacent);
        assert_eq!(law.non_adjacent, non_adjacent);
        assert_eq!(adjacent, [0, 20, 0, 0]);
        assert_eq!(non_adjacent, [0, 0, 8, 0]);
    }

    #[test]
    fn cube_witness() {
        let g = hypercube(3).unwrap();
        let r = cube3_representation();
        assert!(verify_integrable(&g, &r, 1).unwrap().pass);
        assert_eq!(gram_matrix(&r).rank(), 7);
        let mut v = r.vectors().to_vec();
        v.sort();
        v.dedup();
        assert_eq!(v.len(), 8);
        assert!(classify_regularity(&g).sesqui.is_some());
    }
}
