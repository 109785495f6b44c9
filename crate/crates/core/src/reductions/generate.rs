//! Seeded instance generators. All randomness comes from ChaCha8 seeded with
//! `seed_from_u64`, so a seed identifies an instance on every platform.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{SetCoverInstance, VertexCoverInstance};
use crate::{
    edge_key, rational, Decomposition, DensityGraph, Edge, MonotoneTree, Rational, Variant,
};

/// Name recorded in generated files' metadata.
pub const GENERATOR_ALGORITHM: &str = "chacha8";

const MAX_DENSITY: i64 = 5;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn densities(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| rational(rng.gen_range(0..=MAX_DENSITY))).collect()
}

fn tree_edges(rng: &mut ChaCha8Rng, n: usize) -> Vec<Edge> {
    (1..n).map(|v| (rng.gen_range(0..v), v)).collect()
}

/// Uniformly attached random tree on `n` vertices with densities in `0..=5`.
pub fn random_tree(seed: u64, n: usize) -> DensityGraph {
    let mut rng = rng(seed);
    let edges = tree_edges(&mut rng, n);
    DensityGraph::new(densities(&mut rng, n), edges).expect("tree edges are simple")
}

/// Random tree on `n` vertices plus up to `extra` additional edges, so the
/// genus is at most `extra`.
pub fn random_connected_graph(seed: u64, n: usize, extra: usize) -> DensityGraph {
    let mut rng = rng(seed);
    let edges = connected_edges(&mut rng, n, extra);
    DensityGraph::new(densities(&mut rng, n), edges).expect("edges are simple")
}

fn connected_edges(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Vec<Edge> {
    let mut edges: BTreeSet<Edge> = tree_edges(rng, n).into_iter().collect();
    let mut missing: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| !edges.contains(e))
        .collect();
    missing.shuffle(rng);
    edges.extend(missing.into_iter().take(extra));
    edges.into_iter().collect()
}

/// Random cactus on `n` vertices with at most `max_cycles` cycles of length
/// 3 to 5, each attached to the existing graph at a single vertex.
pub fn random_cactus(seed: u64, n: usize, max_cycles: usize) -> DensityGraph {
    let mut rng = rng(seed);
    let edges = cactus_edges(&mut rng, n, max_cycles);
    DensityGraph::new(densities(&mut rng, n), edges).expect("cactus edges are simple")
}

fn cactus_edges(rng: &mut ChaCha8Rng, n: usize, max_cycles: usize) -> Vec<Edge> {
    let mut edges = Vec::new();
    let mut count = n.min(1);
    let mut cycles = 0;
    while count < n {
        let at = rng.gen_range(0..count);
        let room = n - count;
        if cycles < max_cycles && room >= 2 && rng.gen_bool(0.5) {
            let len = rng.gen_range(3..=5usize).min(room + 1);
            let mut prev = at;
            for _ in 1..len {
                edges.push((prev, count));
                prev = count;
                count += 1;
            }
            edges.push(edge_key(prev, at));
            cycles += 1;
        } else {
            edges.push((at, count));
            count += 1;
        }
    }
    edges
}

/// Random set-cover instance with at most `max_sets` sets, at most
/// `max_elements` elements and no two sets sharing two elements. Every
/// element belongs to some set.
pub fn random_sc1(seed: u64, max_sets: usize, max_elements: usize) -> SetCoverInstance {
    let mut rng = rng(seed);
    let universe = rng.gen_range(1..=max_elements.max(1));
    let target = rng.gen_range(1..=max_sets.max(1));
    let mut sets: Vec<BTreeSet<usize>> = Vec::new();
    for _ in 0..target * 8 {
        if sets.len() == target {
            break;
        }
        let size = rng.gen_range(1..=universe.min(4));
        let mut elements: Vec<usize> = (0..universe).collect();
        elements.shuffle(&mut rng);
        let set: BTreeSet<usize> = elements.into_iter().take(size).collect();
        if sets.iter().all(|s| s.intersection(&set).count() <= 1) {
            sets.push(set);
        }
    }
    // Relabel the union of the sets to 0..k so every element is coverable.
    let used: BTreeMap<usize, usize> = sets
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .enumerate()
        .map(|(new, old)| (old, new))
        .collect();
    let sets = sets
        .into_iter()
        .map(|s| s.into_iter().map(|e| used[&e]).collect())
        .collect();
    SetCoverInstance::new(used.len(), sets).expect("elements relabelled into range")
}

/// Random graph on 2 to `max_vertices` vertices in which no two vertices
/// have two common neighbors.
pub fn random_restricted_vc(seed: u64, max_vertices: usize) -> VertexCoverInstance {
    let mut rng = rng(seed);
    let n = rng.gen_range(2..=max_vertices.max(2));
    let mut pairs: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let wanted = rng.gen_range(1..=pairs.len());
    let mut adj = vec![0u64; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if edges.len() == wanted {
            break;
        }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        let ok = (0..n).all(|a| (a + 1..n).all(|b| (adj[a] & adj[b]).count_ones() <= 1));
        if ok {
            edges.push((u, v));
        } else {
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
        }
    }
    VertexCoverInstance::new(n, edges).expect("generated edges are simple")
}

/// Host graph family for [`gen_planted`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlantedShape {
    Tree,
    Cactus,
    General,
}

/// Sum of `k` random monotone trees on a random host with `n` vertices.
///
/// Each tree grows from a uniform root with value in `1..=5` by adding random
/// neighbors, each child getting a value between 1 and its parent's. The
/// returned decomposition is those trees, so the minimum is at most `k`.
pub fn gen_planted(
    seed: u64,
    n: usize,
    k: usize,
    shape: PlantedShape,
) -> (DensityGraph, Decomposition) {
    let mut rng = rng(seed);
    let edges = match shape {
        PlantedShape::Tree => tree_edges(&mut rng, n),
        PlantedShape::Cactus => cactus_edges(&mut rng, n, (n / 3).max(1)),
        PlantedShape::General => connected_edges(&mut rng, n, n / 3),
    };
    let zeros = vec![rational(0); n];
    let host = DensityGraph::new(zeros, edges).expect("host edges are simple");
    let mut trees = Vec::with_capacity(k);
    if n > 0 {
        for _ in 0..k {
            trees.push(random_monotone_tree(&mut rng, &host));
        }
    }
    let d = Decomposition::new(Variant::M, trees);
    let g = host.with_densities(d.total(n)).expect("sums are non-negative");
    (g, d)
}

fn random_monotone_tree(rng: &mut ChaCha8Rng, host: &DensityGraph) -> MonotoneTree {
    let n = host.vertex_count();
    let root = rng.gen_range(0..n);
    let target = rng.gen_range(1..=n);
    let mut values = BTreeMap::from([(root, rng.gen_range(1..=MAX_DENSITY))]);
    let mut edges = Vec::new();
    let mut frontier: Vec<(usize, usize)> =
        host.neighbors(root).iter().map(|&w| (root, w)).collect();
    while values.len() < target && !frontier.is_empty() {
        let (p, c) = frontier.swap_remove(rng.gen_range(0..frontier.len()));
        if values.contains_key(&c) {
            continue;
        }
        let value = rng.gen_range(1..=values[&p]);
        values.insert(c, value);
        edges.push((p, c));
        frontier.extend(host.neighbors(c).iter().map(|&w| (c, w)));
    }
    MonotoneTree::new(
        root,
        values.into_iter().map(|(v, x)| (v, rational(x))),
        edges,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{genus, is_cactus, is_tree, validate_decomposition};

    #[test]
    fn deterministic() {
        assert_eq!(random_tree(3, 8), random_tree(3, 8));
        assert_eq!(random_sc1(7, 5, 6), random_sc1(7, 5, 6));
        assert_eq!(gen_planted(1, 6, 3, PlantedShape::General), gen_planted(1, 6, 3, PlantedShape::General));
    }

    #[test]
    fn shapes() {
        for seed in 0..50 {
            assert!(is_tree(&random_tree(seed, 7)));
            let g = random_connected_graph(seed, 7, 3);
            assert!(genus(&g) <= 3);
            let c = random_cactus(seed, 10, 3);
            assert!(is_cactus(&c) && c.vertex_count() == 10);
            assert!(random_sc1(seed, 5, 6).is_sc1());
            assert!(random_restricted_vc(seed, 6).is_restricted());
        }
    }

    #[test]
    fn planted_validates() {
        for seed in 0..30 {
            for shape in [PlantedShape::Tree, PlantedShape::Cactus, PlantedShape::General] {
                let (g, d) = gen_planted(seed, 7, 3, shape);
                assert_eq!(d.len(), 3);
                assert!(validate_decomposition(&g, &d).unwrap().ok());
            }
        }
    }
}
