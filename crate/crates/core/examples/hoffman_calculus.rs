// Hoffman graphs: special matrices, decomposition and reduced representations.
//
//     cargo run --example hoffman_calculus

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sesqui::hoffman::{
    factors_reassemble, random_hoffman, random_represented, reduced_to_full, verify_full_representation,
    verify_reduced_representation, HoffmanGraph, ReducedRepresentation,
};

fn main() {
    let h = HoffmanGraph::figure3();
    println!("figure 3: {} slim, {} fat", h.n_slim(), h.n_fat());
    println!("  special matrix {:?}", h.special_matrix().rows());
    println!("  eigenvalues {:?}", h.eigenvalues());
    let hyp = h.check_norm3_reduced_hypotheses();
    println!("  norm-3 hypotheses promised: {} (λ_min {:.4})", hyp.promised, hyp.lambda_min);

    let psi = ReducedRepresentation::new(3, vec![vec![1, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]], 4).unwrap();
    assert!(verify_reduced_representation(&h, &psi, 4).unwrap().pass);
    assert!(!verify_reduced_representation(&h, &psi, 3).unwrap().pass);
    let phi = reduced_to_full(&h, &psi, 4).unwrap();
    assert!(verify_full_representation(&h, &phi).unwrap().pass);
    println!("  full representation {:?}", phi.vectors());

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = random_hoffman(&mut rng, 10, 3, 0.25, 0.3);
    let factors = g.decompose();
    assert!(factors_reassemble(&g, &factors));
    println!("random Hoffman graph ({} slim, {} fat) splits into {} factors", g.n_slim(), g.n_fat(), factors.len());
    for f in &factors {
        println!("  slim {:?} fat {:?}", f.slim_vertices(), f.fat_vertices());
    }

    let (h2, psi2) = random_represented(&mut rng, 12, 4, 3);
    assert!(verify_reduced_representation(&h2, &psi2, 3).unwrap().pass);
    println!(
        "generated {} slim / {} fat vertices with a norm-3 reduced representation, λ_min {:.4}",
        h2.n_slim(),
        h2.n_fat(),
        h2.smallest_eigenvalue()
    );
    assert!(h2.smallest_eigenvalue() >= -3.0 - 1e-8);
}
