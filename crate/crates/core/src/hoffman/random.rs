//! Random Hoffman graphs for property tests.

use super::{HoffmanGraph, ReducedRepresentation};
use rand::seq::index::sample;
use rand::Rng;

/// Slim–slim edges with probability `p`, slim–fat edges with probability
/// `q`; a fat vertex left without slim neighbours is joined to one at random.
pub fn random_hoffman<R: Rng>(rng: &mut R, max_slim: usize, max_fat: usize, p: f64, q: f64) -> HoffmanGraph {
    let n_slim = rng.gen_range(1..=max_slim.max(1));
    let n_fat = rng.gen_range(0..=max_fat);
    let mut edges = Vec::new();
    for x in 0..n_slim {
        for y in x + 1..n_slim {
            if rng.gen_bool(p) {
                edges.push((x, y));
            }
        }
    }
    for f in n_slim..n_slim + n_fat {
        let before = edges.len();
        for x in 0..n_slim {
            if rng.gen_bool(q) {
                edges.push((x, f));
            }
        }
        if edges.len() == before {
            edges.push((rng.gen_range(0..n_slim), f));
        }
    }
    HoffmanGraph::from_parts(n_slim, n_fat, edges).expect("generator respects the labelling rules")
}

/// A Hoffman graph together with a reduced representation of norm `t`.
///
/// Slim vertices are added one at a time. Each draws a set of fat
/// neighbours `F(x)` and a `±1` vector `ψ(x)` of norm `t − |F(x)|`; it is
/// kept when `|F(x) ∩ F(y)| + (ψ(x), ψ(y))` lies in `{0, 1}` for every
/// earlier `y`, and that value decides adjacency. Fat vertices that end up
/// without slim neighbours are discarded.
pub fn random_represented<R: Rng>(
    rng: &mut R,
    max_slim: usize,
    max_fat: usize,
    t: usize,
) -> (HoffmanGraph, ReducedRepresentation) {
    let target = rng.gen_range(1..=max_slim.max(1));
    let pool_fat = rng.gen_range(0..=max_fat);
    let dimension = rng.gen_range(t.max(1)..=2 * max_slim.max(t));
    // With t = 0 every vector would be zero; callers use t ≥ 1.
    let mut fats: Vec<Vec<usize>> = Vec::new();
    let mut psi: Vec<Vec<i64>> = Vec::new();
    let mut attempts = 0;
    while psi.len() < target && attempts < 50 * target {
        attempts += 1;
        let a = rng.gen_range(0..=t.min(pool_fat));
        let f: Vec<usize> = sample(rng, pool_fat, a).into_vec();
        let mut x = vec![0i64; dimension];
        for c in sample(rng, dimension, t - a).into_iter() {
            x[c] = if rng.gen_bool(0.5) { 1 } else { -1 };
        }
        let ok = fats.iter().zip(&psi).all(|(g, y)| {
            let total = common(&f, g) as i64 + crate::lattice::dot(&x, y);
            total == 0 || total == 1
        });
        if ok {
            fats.push(f);
            psi.push(x);
        }
    }
    if psi.is_empty() {
        // Always succeeds: a lone slim vertex with no fat neighbours.
        let mut x = vec![0i64; dimension];
        for c in x.iter_mut().take(t) {
            *c = 1;
        }
        fats.push(Vec::new());
        psi.push(x);
    }
    let n_slim = psi.len();
    let mut used: Vec<usize> = fats.iter().flatten().copied().collect();
    used.sort_unstable();
    used.dedup();
    let mut edges = Vec::new();
    for x in 0..n_slim {
        for y in x + 1..n_slim {
            if common(&fats[x], &fats[y]) as i64 + crate::lattice::dot(&psi[x], &psi[y]) == 1 {
                edges.push((x, y));
            }
        }
        for f in &fats[x] {
            let local = used.binary_search(f).expect("fat vertex is used");
            edges.push((x, n_slim + local));
        }
    }
    let h = HoffmanGraph::from_parts(n_slim, used.len(), edges).expect("generator respects the labelling rules");
    let rep = ReducedRepresentation::new(dimension, psi, t as i64).expect("uniform dimension");
    (h, rep)
}

fn common(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|f| b.contains(f)).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hoffman::verify_reduced_representation;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_representations_verify() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut fat_total = 0;
        for t in [3, 4] {
            for _ in 0..50 {
                let (h, psi) = random_represented(&mut rng, 15, 6, t);
                assert!(h.n_slim() <= 15 && h.n_fat() <= 6);
                fat_total += h.n_fat();
                assert!(verify_reduced_representation(&h, &psi, t as i64).unwrap().pass);
                assert!(h.special_matrix().shifted(t as i64).is_positive_semidefinite());
            }
        }
        assert!(fat_total > 0);
    }

    #[test]
    fn random_graphs_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let h = random_hoffman(&mut rng, 10, 4, 0.4, 0.3);
            assert!((1..=10).contains(&h.n_slim()));
        }
    }
}
