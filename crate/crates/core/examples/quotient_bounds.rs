// Eigenvalue bounds from quotient matrices and interlacing.
//
//     cargo run --example quotient_bounds

use sesqui::graphs::{hypercube, Partition};
use sesqui::spectra::{
    deep_pairs_bound, deep_pairs_quotient, fat_bound_determinant, fat_bound_matrix, interlacing_check,
    layered_quotient, quotient_matrix, smallest_eigenvalue,
};

fn main() {
    // Three-cell quotient: the closed form matches the computed spectrum and
    // drops below −3 once k is large enough.
    for k in [3, 5, 8, 12, 20, 40] {
        let closed = deep_pairs_bound(k).unwrap();
        let computed = deep_pairs_quotient(k).unwrap().smallest_eigenvalue();
        assert!((closed - computed).abs() < 1e-8);
        println!("k = {k:>2}: deep-pair bound {closed:.6}");
    }

    // Four-cell distance quotient has smallest eigenvalue −k.
    for k in [3, 4, 6] {
        let lambda = layered_quotient(k).unwrap().smallest_eigenvalue();
        assert!((lambda + k as f64).abs() < 1e-8);
        println!("k = {k}: layered quotient λ_min = {lambda:.6}");
    }

    // The distance partition of the cube realises the layered bound.
    let q3 = hypercube(3).unwrap();
    let layers = Partition::from_labels(&(0..8u32).map(|v| v.count_ones() as usize).collect::<Vec<_>>()).unwrap();
    let q = quotient_matrix(&q3, &layers).unwrap();
    println!("Q3 distance quotient rows {:?}, λ_min {:.4}", q.rows(), q.smallest_eigenvalue());
    assert!(interlacing_check(&q3, &[0, 1, 2, 4]).unwrap());
    assert!((smallest_eigenvalue(&q3) + 3.0).abs() < 1e-8);

    // det(M + 3I) = −37w + 258, checked exactly.
    for w in 1..=9 {
        let det = fat_bound_matrix(w).shifted(3).determinant();
        assert_eq!(det, fat_bound_determinant(w).into());
        println!("w = {w}: det(M + 3I) = {det}{}", if det < 0.into() { "  (negative)" } else { "" });
    }
}
