// Backtracking search for 1-integrable norm-3 representations.
//
//     cargo run --example representation_search

use sesqui::graphs::{complete_graph, complete_multipartite, cycle_complement, hypercube, star, Graph};
use sesqui::lattice::{find_norm3_representation, verify_integrable, SearchStatus};

fn main() {
    let cases: Vec<(&str, Graph)> = vec![
        ("K7", complete_graph(7).unwrap()),
        ("K_{3,3,3}", complete_multipartite(3, 3).unwrap()),
        ("cube Q3", hypercube(3).unwrap()),
        ("complement of C4+C4", cycle_complement(&[4, 4]).unwrap()),
        ("star K_{1,9}", star(9).unwrap()),
        ("star K_{1,10}", star(10).unwrap()),
        ("K_{4,4}", complete_multipartite(2, 4).unwrap()),
        ("cube Q4", hypercube(4).unwrap()),
    ];
    for (name, g) in cases {
        let outcome = find_norm3_representation(&g, 1_000_000).unwrap();
        let dim = outcome.representation.as_ref().map(|r| r.dimension());
        println!(
            "{name:<22} {:?} after {} nodes, λ_min {:.4}, dimension {dim:?}",
            outcome.status, outcome.node_count, outcome.smallest_eigenvalue
        );
        if let Some(r) = &outcome.representation {
            assert!(verify_integrable(&g, r, 1).unwrap().pass);
        }
        if outcome.status == SearchStatus::NotRepresentable {
            println!("  certificate {:?}", outcome.certificate);
        }
    }
}
