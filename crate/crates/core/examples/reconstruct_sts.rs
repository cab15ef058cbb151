// Recovering a Steiner triple system from a mate-free representation of its
// block graph, after scrambling the coordinates by a signed permutation.
//
//     cargo run --example reconstruct_sts

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sesqui::lattice::{check_mate_free_structure, sts_from_representation};
use sesqui::steiner::{block_graph, canonical_block_representation, construct_sts, verify_sts};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for v in [13, 15, 19] {
        let t = construct_sts(v).unwrap();
        let g = block_graph(&t).unwrap();
        let r = canonical_block_representation(&t).unwrap();
        let mut perm: Vec<usize> = (0..r.dimension()).collect();
        perm.shuffle(&mut rng);
        let signs: Vec<i64> = (0..r.dimension()).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        let scrambled = r.transformed(&perm, &signs).unwrap();

        let structure = check_mate_free_structure(&g, &scrambled).unwrap();
        assert!(structure.pass);
        let names: Vec<&str> = structure.checks.iter().map(|c| c.name.as_str()).collect();
        println!("STS({v}): c = {}, checks {names:?}", structure.c);

        let rec = sts_from_representation(&g, &scrambled).unwrap();
        assert!(verify_sts(&rec.system).pass);
        // Point q sat at coordinate perm[q]; map it to the recovered label.
        let mut label = vec![usize::MAX; r.dimension()];
        for (p, &c) in rec.coordinate_of_point.iter().enumerate() {
            label[c] = p;
        }
        let relabelled = t.blocks().iter().map(|b| b.map(|q| label[perm[q]])).collect();
        let expected = sesqui::TripleSystem::new(v, relabelled).unwrap();
        assert_eq!(rec.system.normalized(), expected.normalized());
        println!("  recovered {} blocks on {} points", rec.system.blocks().len(), rec.system.v());
    }
}
