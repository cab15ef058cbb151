// Complements of disjoint cycles and their explicit norm-3 vectors.
//
//     cargo run --example cycle_complements

use sesqui::graphs::{classify_regularity, cycle_complement};
use sesqui::lattice::{check_support_laws, cycle_complement_representation, detect_mates, verify_integrable};
use sesqui::spectra::smallest_eigenvalue;

fn main() {
    for lengths in [vec![3, 3], vec![4, 4], vec![5], vec![3, 4, 5], vec![6, 6, 6]] {
        let g = cycle_complement(&lengths).unwrap();
        let r = cycle_complement_representation(&lengths).unwrap();
        assert!(verify_integrable(&g, &r, 1).unwrap().pass);
        let laws = check_support_laws(&g, &r).unwrap();
        assert!(laws.pass);
        let mates = detect_mates(&r).unwrap();
        let report = classify_regularity(&g);
        println!(
            "cycles {lengths:?}: n = {}, dimension {}, λ_min = {:.4}, sesqui {:?}, |S| = {}",
            g.n(),
            r.dimension(),
            smallest_eigenvalue(&g),
            report.sesqui.map(|s| (s.k, s.c)),
            mates.members.len()
        );
        println!("  support intersections on edges {:?}, on non-edges {:?}", laws.adjacent, laws.non_adjacent);
    }
}
