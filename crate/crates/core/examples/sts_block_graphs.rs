// Steiner triple systems and their block graphs.
//
//     cargo run --example sts_block_graphs

use sesqui::graphs::classify_regularity;
use sesqui::spectra::smallest_eigenvalue;
use sesqui::steiner::{block_graph, construct_sts, sts_srg_params, verify_sts};

fn main() {
    for v in [7, 9, 13, 15, 19, 21] {
        let t = construct_sts(v).expect("admissible order");
        assert!(verify_sts(&t).pass);
        let g = block_graph(&t).unwrap();
        let p = sts_srg_params(v).unwrap();
        let report = classify_regularity(&g);
        let srg = report.srg.expect("block graphs are strongly regular");
        assert!(srg.matches(p.n, p.k, p.a, p.c));
        let lambda = smallest_eigenvalue(&g);
        // STS(7) gives K7; from v = 9 on the smallest eigenvalue is −3.
        let expected = if v == 7 { -1.0 } else { -3.0 };
        assert!((lambda - expected).abs() < 1e-8);
        println!(
            "STS({v:>2}): {:>3} blocks, srg({}, {}, {}, {}), smallest eigenvalue {lambda:.6}",
            t.blocks().len(),
            p.n,
            p.k,
            p.a,
            p.c
        );
    }
    // v ≡ 5 (mod 6) has no triple system.
    assert!(construct_sts(11).is_err());
}
