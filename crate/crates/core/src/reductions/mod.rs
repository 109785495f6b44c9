//! Set-cover and vertex-cover gadgets, brute-force cover solvers and seeded
//! random instance generators.
//!
//! The set-cover gadget is a bipartite graph with one vertex per set
//! (density = set size) and one per element (density 1); its minimum M-tree
//! set has the size of a minimum set cover when no two sets share more than
//! one element. The vertex-cover gadget is the same construction applied to
//! vertices and edges, and its minimum SM-tree set has the size of a minimum
//! vertex cover when no two vertices have two common neighbors.

mod generate;
mod setcover;
mod vertexcover;

pub use generate::{
    gen_planted, random_cactus, random_connected_graph, random_restricted_vc, random_sc1,
    random_tree, PlantedShape, GENERATOR_ALGORITHM,
};
pub use setcover::{
    brute_force_set_cover, cover_from_mtree_set, mtree_set_from_cover, sc1_to_density_graph,
    SetCoverInstance,
};
pub use vertexcover::{brute_force_vertex_cover, vc_to_density_graph, VertexCoverInstance};

/// Largest instance the brute-force solvers enumerate.
pub const BRUTE_FORCE_LIMIT: usize = 24;

/// Smallest `k` such that some `k` of the `n` masks cover `target`.
fn min_cover(masks: &[u64], target: u64) -> Option<usize> {
    let n = masks.len();
    (0..=n).find(|&k| {
        let mut found = false;
        subsets_of_size(n, k, &mut |chosen| {
            let union = chosen.iter().fold(0u64, |acc, &i| acc | masks[i]);
            found = union & target == target;
            found
        });
        found
    })
}

/// Calls `visit` on every `k`-subset of `0..n` in lexicographic order until
/// it returns true.
fn subsets_of_size(n: usize, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
