use std::cmp::Reverse;

use num_traits::{Signed, Zero};

use crate::{
    edge_key, relative_maxima, Decomposition, DensityGraph, MonotoneTree, Rational, Variant,
};

/// One tree per relative maximum, built by monotone DFS.
///
/// Maxima are processed by decreasing density, then increasing id. From each
/// maximum the DFS follows only edges that do not increase the current
/// density and takes the full remaining density of every vertex it reaches,
/// so the trees are disjoint and never outnumber the relative maxima.
pub fn naive_decompose(g: &DensityGraph) -> Decomposition {
    let mut f = g.densities().to_vec();
    let mut trees = Vec::new();
    let mut maxima = relative_maxima(g);
    loop {
        maxima.sort_by_key(|&m| (Reverse(f[m].clone()), m));
        for &m in &maxima {
            if f[m].is_positive() {
                trees.push(monotone_dfs(g, &mut f, m));
            }
        }
        if f.iter().all(Zero::is_zero) {
            break;
        }
        // Not reached when starting from the original maxima, kept so the
        // loop always terminates with a complete decomposition.
        let remainder = g.with_densities(f.clone()).expect("remainder stays non-negative");
        maxima = relative_maxima(&remainder);
    }
    Decomposition::new(Variant::M, trees)
}

fn monotone_dfs(g: &DensityGraph, f: &mut [Rational], root: usize) -> MonotoneTree {
    // Every vertex reached along a non-increasing path takes its full
    // remaining density, so the values are simply `f` on the visited set.
    let mut visited = vec![false; g.vertex_count()];
    let mut values = Vec::new();
    let mut edges = Vec::new();
    let mut stack = vec![(root, None)];
    while let Some((u, parent)) = stack.pop() {
        if visited[u] {
            continue;
        }
        visited[u] = true;
        values.push((u, f[u].clone()));
        if let Some(p) = parent {
            edges.push(edge_key(p, u));
        }
        for &w in g.neighbors(u).iter().rev() {
            if !visited[w] && f[w].is_positive() && f[w] <= f[u] {
                stack.push((w, Some(u)));
            }
        }
    }
    for (v, _) in &values {
        f[*v] = Rational::zero();
    }
    MonotoneTree::new(root, values, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rational, validate_decomposition};

    fn graph(values: &[i64], edges: &[(usize, usize)]) -> DensityGraph {
        DensityGraph::new(
            values.iter().map(|&v| rational(v)).collect(),
            edges.iter().copied(),
        )
        .unwrap()
    }

    #[test]
    fn triangle_is_one_path() {
        let g = graph(&[1, 1, 1], &[(0, 1), (1, 2), (0, 2)]);
        let d = naive_decompose(&g);
        assert_eq!(d.len(), 1);
        assert_eq!(d.trees[0].edges.iter().copied().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(validate_decomposition(&g, &d).unwrap().ok());
    }

    #[test]
    fn one_tree_per_maximum() {
        let g = graph(&[3, 1, 2], &[(0, 1), (1, 2)]);
        let d = naive_decompose(&g);
        assert_eq!(d.len(), 2);
        assert!(validate_decomposition(&g, &d).unwrap().ok());
        assert_eq!(d.trees[0].root, 0);
        assert_eq!(d.trees[1].root, 2);
    }

    #[test]
    fn monotone_star() {
        let g = graph(&[2, 1, 1, 1], &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(naive_decompose(&g).len(), 1);
    }

    #[test]
    fn trees_are_full_and_disjoint() {
        let g = graph(
            &[3, 1, 2, 2, 0, 4],
            &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)],
        );
        let d = naive_decompose(&g);
        for variant in [Variant::M, Variant::FM, Variant::SM] {
            assert!(validate_decomposition(&g, &d.clone().relabel(variant))
                .unwrap()
                .ok());
        }
        assert!(d.len() <= relative_maxima(&g).len());
    }
}
