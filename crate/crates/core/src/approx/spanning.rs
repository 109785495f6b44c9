use crate::sweep::decompose_forest;
use crate::{bfs_spanning_forest, Decomposition, DensityGraph, Variant};

/// Exact tree decomposition of a BFS spanning forest of `g`.
///
/// Deletes `genus(g)` edges (those outside the BFS forest rooted at each
/// component's smallest vertex) and runs the tree algorithm on what is left.
/// The result is an M-tree set of `g` and, since all trees live in one
/// spanning forest, also an SM-tree set.
pub fn spanning_tree_decompose(g: &DensityGraph) -> Decomposition {
    let forest: std::collections::BTreeSet<_> = bfs_spanning_forest(g).into_iter().collect();
    let t = g.filter_edges(|e| forest.contains(&e));
    Decomposition::new(Variant::M, decompose_forest(&t))
}
