use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sesqui::acceptance::oracle::{brute_force_norm3, OracleVerdict};
use sesqui::exact::IntMatrix;
use sesqui::graphs::Graph;
use sesqui::hoffman::{
    full_to_reduced, is_block_diagonal, random_hoffman, random_represented, reduced_to_full,
    verify_full_representation, verify_sum,
};
use sesqui::lattice::{
    check_support_laws, detect_mates, find_norm3_representation, gram_matrix, support_profile, verify_integrable,
    IntegralRepresentation, SearchStatus,
};
use sesqui::spectra::{eigenvalues_sym, SymMatrix};
use sesqui::Error;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Weight-3 sign vectors in dimension `dim` with all pairwise inner
/// products in `{0, 1}`: a random pool filtered greedily, at most `max_n` kept.
fn sign_vectors(max_n: usize, dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    let one =
        (proptest::sample::subsequence((0..dim).collect::<Vec<_>>(), 3), proptest::collection::vec(any::<bool>(), 3))
            .prop_map(move |(support, signs)| {
                let mut x = vec![0i64; dim];
                for (c, s) in support.into_iter().zip(signs) {
                    x[c] = if s { 1 } else { -1 };
                }
                x
            });
    proptest::collection::vec(one, 1..=4 * max_n).prop_map(move |pool| {
        let mut kept: Vec<Vec<i64>> = Vec::new();
        for x in pool {
            if kept.len() < max_n && kept.iter().all(|y| matches!(dot(&x, y), 0 | 1)) {
                kept.push(x);
            }
        }
        kept
    })
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(p, q)| p * q).sum()
}

/// The graph on `vectors` with edges at inner product 1.
fn graph_of(vectors: &[Vec<i64>]) -> Graph {
    let n = vectors.len();
    let edges =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| dot(&vectors[u], &vectors[v]) == 1);
    Graph::from_edges(n, edges).unwrap()
}

fn target_gram(g: &Graph, s: i64) -> IntMatrix {
    let rows = IntMatrix::from_rows(g.adjacency_rows()).shifted(3).rows();
    IntMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(|a| a * s).collect()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn verification_matches_gram(vectors in sign_vectors(9, 8), flip in any::<Option<(usize, usize)>>()) {
        let n = vectors.len();
        let mut edges = graph_of(&vectors).edges();
        let flip = flip.map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u < v);
        if let Some(e) = flip {
            match edges.iter().position(|&f| f == e) {
                Some(i) => { edges.remove(i); }
                None => edges.push(e),
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        let r = IntegralRepresentation::new(8, vectors, 1).unwrap();
        let pass = verify_integrable(&g, &r, 1).unwrap().pass;
        prop_assert_eq!(pass, gram_matrix(&r) == target_gram(&g, 1));
        prop_assert_eq!(pass, flip.is_none());
    }

    #[test]
    fn support_law_holds(vectors in sign_vectors(10, 8)) {
        let g = graph_of(&vectors);
        let r = IntegralRepresentation::new(8, vectors, 1).unwrap();
        let laws = check_support_laws(&g, &r).unwrap();
        prop_assert!(laws.pass, "{:?}", laws.violations);
        // Adjacent pairs meet in one or three coordinates, others in zero or two.
        let p = support_profile(&r).unwrap();
        for x in 0..g.n() {
            for y in x + 1..g.n() {
                let i = p.intersection(x, y);
                let allowed: &[usize] = if g.has_edge(x, y) { &[1, 3] } else { &[0, 2] };
                prop_assert!(allowed.contains(&i));
            }
        }
    }

    #[test]
    fn mates_are_unique(vectors in sign_vectors(10, 6)) {
        let g = graph_of(&vectors);
        let r = IntegralRepresentation::new(6, vectors, 1).unwrap();
        match detect_mates(&r) {
            Ok(report) => {
                for &(x, y) in &report.pairs {
                    prop_assert!(g.has_edge(x, y));
                    prop_assert_eq!(report.mate(x), Some(y));
                    prop_assert_eq!(report.mate(y), Some(x));
                }
                let mut members = report.members.clone();
                members.dedup();
                prop_assert_eq!(members.len(), 2 * report.pairs.len());
            }
            // Three vertices on one support cannot pairwise have inner product 1.
            Err(Error::SharedSupport { vertices, .. }) => prop_assert!(vertices.len() >= 3),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn scales_add(vectors in sign_vectors(8, 7), k in 1u32..4) {
        let g = graph_of(&vectors);
        let r = IntegralRepresentation::new(7, vectors, 1).unwrap();
        let mut sum = r.clone();
        for _ in 1..k {
            sum = sum.direct_sum(&r).unwrap();
        }
        prop_assert_eq!(sum.scale(), k);
        prop_assert!(verify_integrable(&g, &sum, k).unwrap().pass);
        prop_assert_eq!(gram_matrix(&sum), target_gram(&g, k as i64));
    }

    #[test]
    fn jacobi_agrees_with_nalgebra(n in 1usize..9, entries in proptest::collection::vec(-5i32..=5, 81)) {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let a = entries[i * 9 + j] as f64 / 2.0;
                data[i * n + j] = a;
                data[j * n + i] = a;
            }
        }
        let ours = eigenvalues_sym(&SymMatrix::new(n, data.clone()).unwrap());
        let mut theirs: Vec<f64> = DMatrix::from_row_slice(n, n, &data).symmetric_eigen().eigenvalues.iter().copied().collect();
        theirs.sort_by(f64::total_cmp);
        for (a, b) in ours.iter().zip(&theirs) {
            prop_assert!((a - b).abs() < 1e-9, "{ours:?} vs {theirs:?}");
        }
    }

    #[test]
    fn interlacing_on_hoffman_subgraphs(seed in any::<u64>(), mask in any::<u32>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_hoffman(&mut rng, 8, 3, 0.5, 0.4);
        let vertices: Vec<usize> = (0..h.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let Ok(sub) = h.induced(&vertices) else { return Ok(()) };
        prop_assert!(sub.hoffman.smallest_eigenvalue() >= h.smallest_eigenvalue() - 1e-9);
    }

    #[test]
    fn sum_iff_block_diagonal(seed in any::<u64>(), mask in any::<u32>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_hoffman(&mut rng, 8, 3, 0.4, 0.4);
        let (a, b): (Vec<usize>, Vec<usize>) = (0..h.n_slim()).partition(|&x| mask >> x & 1 == 1);
        prop_assume!(!a.is_empty() && !b.is_empty());
        let h1 = h.generated(&a).unwrap();
        let h2 = h.generated(&b).unwrap();
        let report = verify_sum(&h, &h1, &h2).unwrap();
        prop_assert_eq!(report.pass, is_block_diagonal(&h.special_matrix(), &[a.as_slice(), b.as_slice()]));
    }

    #[test]
    fn decomposition_is_block_diagonal(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_hoffman(&mut rng, 9, 4, 0.3, 0.3);
        let factors = h.decompose();
        let cells: Vec<&[usize]> = factors.iter().map(|f| f.slim_vertices()).collect();
        prop_assert!(is_block_diagonal(&h.special_matrix(), &cells));
        for f in &factors {
            prop_assert!(f.hoffman.is_indecomposable());
        }
    }

    #[test]
    fn reduced_full_round_trip(seed in any::<u64>(), t in 2usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (h, psi) = random_represented(&mut rng, 10, 4, t);
        let phi = reduced_to_full(&h, &psi, t as i64).unwrap();
        prop_assert!(verify_full_representation(&h, &phi).unwrap().pass);
        prop_assert_eq!(full_to_reduced(&h, &phi).unwrap(), psi);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn search_is_sound(g in graph_strategy(7)) {
        prop_assume!(g.is_connected());
        let outcome = find_norm3_representation(&g, 1_000_000).unwrap();
        let oracle = brute_force_norm3(&g);
        match outcome.status {
            SearchStatus::Found => {
                let r = outcome.representation.unwrap();
                prop_assert!(verify_integrable(&g, &r, 1).unwrap().pass);
                prop_assert!(matches!(oracle, OracleVerdict::Found(_)));
            }
            SearchStatus::NotRepresentable => prop_assert_eq!(oracle, OracleVerdict::Indefinite),
            SearchStatus::Exhausted => prop_assert_eq!(oracle, OracleVerdict::Exhausted),
            SearchStatus::BudgetExceeded => {}
        }
    }
}
