// The drawn example graphs, with their spectra and DOT output.
//
//     cargo run --example figures

use sesqui::graphs::Figure;
use sesqui::hoffman::HoffmanGraph;
use sesqui::spectra::{smallest_eigenvalue, spectrum};

fn main() {
    for f in [Figure::Fig1a, Figure::Fig1b, Figure::Fig2] {
        let g = f.graph();
        let lambda = smallest_eigenvalue(&g);
        assert!(lambda < -2.0);
        println!("{f}: vertices {:?}, λ_min {lambda:.6}", f.labels());
        println!("  spectrum {:?}", spectrum(&g).iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>());
    }
    let h = HoffmanGraph::figure3();
    assert!((h.smallest_eigenvalue() + 4.0).abs() < 1e-8);
    println!("fig3: λ_min {:.6}", h.smallest_eigenvalue());
    print!("{}", Figure::Fig1a.graph().to_dot());
}
