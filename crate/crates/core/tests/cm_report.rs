//! Complete tree sets on set-cover gadgets. The CM minimum is compared with
//! the cover optimum and reported; only the bounds that hold by construction
//! are asserted.

use mtree_core::exact::exact_min;
use mtree_core::reductions::{
    brute_force_set_cover, mtree_set_from_cover, random_sc1, sc1_to_density_graph,
};
use mtree_core::Variant;

#[test]
fn cm_minimum_against_cover_optimum() {
    let (mut equal, mut larger, mut total) = (0, 0, 0);
    for seed in 0..30u64 {
        let sc = random_sc1(9000 + seed, 4, 5);
        let g = sc1_to_density_graph(&sc).unwrap();
        let opt = brute_force_set_cover(&sc).unwrap();
        let m = exact_min(&g, Variant::M).unwrap().len();
        let cm = exact_min(&g, Variant::CM).unwrap().len();
        assert!(cm >= m);
        // Every set forms a cover, and the complete construction turns it
        // into a CM set, so the CM minimum is at most the number of sets.
        let all: Vec<usize> = (0..sc.sets.len()).collect();
        assert!(cm <= mtree_set_from_cover(&sc, &all, true).unwrap().len());
        total += 1;
        if cm == opt {
            equal += 1;
        } else {
            larger += 1;
            println!("seed {seed}: CM minimum {cm}, cover optimum {opt}, sets {:?}", sc.sets);
        }
    }
    println!("CM minimum equals the cover optimum on {equal} of {total} instances ({larger} larger)");
}
