//! Monotone sweeping on density trees and the exact minimum decomposition of
//! a density tree.
//!
//! The tree algorithm repeatedly finds a mode-forced vertex (a leaf that
//! survives pruning of insignificant leaves), sweeps a monotone tree out of it
//! using its full remaining density, and continues on the remainder until no
//! density is left. Every function here also accepts forests; a sweep only
//! touches the component of its start vertex.

use num_traits::{Signed, Zero};

use crate::{
    edge_key, is_forest, Decomposition, DensityGraph, Error, MonotoneTree, Rational, Result,
    Variant,
};

/// Output of [`monotone_sweep`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepResult {
    /// Monotone tree extracted by the sweep, rooted at the start vertex.
    pub swept: MonotoneTree,
    /// Input densities minus the swept values.
    pub remainder: DensityGraph,
}

/// Sweeps a monotone tree out of `t` starting at `v` with value `alpha`.
///
/// Along every traversed edge `u -> w` the value is carried over unchanged
/// when `f(w) >= f(u)` and otherwise drops by `f(u) - f(w)`, clamped at zero.
/// Vertices whose value reaches zero are left out and the traversal stops
/// there.
pub fn monotone_sweep(t: &DensityGraph, v: usize, alpha: &Rational) -> Result<SweepResult> {
    t.check_vertex(v)?;
    if !is_forest(t) {
        return Err(Error::NotAForest);
    }
    if !alpha.is_positive() || alpha > t.density(v) {
        return Err(Error::SweepValue { vertex: v });
    }
    let mut f = t.densities().to_vec();
    let swept = sweep_in_place(t, &mut f, v, alpha.clone());
    let remainder = t.with_densities(f)?;
    Ok(SweepResult { swept, remainder })
}

/// Sweep on the structure of `g` with current densities `f`, subtracting the
/// swept values from `f`. Caller guarantees `g` is a forest and
/// `0 < alpha <= f[v]`.
pub(crate) fn sweep_in_place(
    g: &DensityGraph,
    f: &mut [Rational],
    v: usize,
    alpha: Rational,
) -> MonotoneTree {
    let mut values = vec![(v, alpha.clone())];
    let mut edges = Vec::new();
    // DFS, children in ascending id order.
    let mut stack = vec![(v, usize::MAX, alpha)];
    while let Some((u, parent, h)) = stack.pop() {
        for &w in g.neighbors(u).iter().rev() {
            if w == parent {
                continue;
            }
            let next = if f[w] >= f[u] {
                h.clone()
            } else {
                let dropped = &h - (&f[u] - &f[w]);
                if dropped.is_positive() {
                    dropped
                } else {
                    Rational::zero()
                }
            };
            if next.is_positive() {
                values.push((w, next.clone()));
                edges.push(edge_key(u, w));
                stack.push((w, u, next));
            }
        }
    }
    for (w, h) in &values {
        f[*w] -= h;
    }
    MonotoneTree::new(v, values, edges)
}

/// Leaves that survive repeated removal of insignificant leaves (a leaf whose
/// neighbor has greater or equal density), restricted to positive density.
///
/// Candidates are scanned in ascending id order each round, and a removal
/// takes effect immediately.
pub fn mode_forced_nodes(t: &DensityGraph) -> Result<Vec<usize>> {
    if !is_forest(t) {
        return Err(Error::NotAForest);
    }
    Ok(mode_forced_in(t, t.densities()))
}

pub(crate) fn mode_forced_in(g: &DensityGraph, f: &[Rational]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let mut changed = false;
        for u in 0..n {
            if !alive[u] || degree[u] != 1 {
                continue;
            }
            let w = g
                .neighbors(u)
                .iter()
                .copied()
                .find(|&w| alive[w])
                .expect("leaf has an alive neighbor");
            if f[w] >= f[u] {
                alive[u] = false;
                degree[w] -= 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (0..n)
        .filter(|&u| alive[u] && degree[u] <= 1 && f[u].is_positive())
        .collect()
}

/// Minimum monotone tree decomposition of a density tree (or forest).
///
/// The result is a minimum M-tree set, and also a minimum SM-tree set since
/// subtrees of a tree always intersect in a subtree.
pub fn decompose_tree(t: &DensityGraph) -> Result<Decomposition> {
    if !is_forest(t) {
        return Err(Error::NotAForest);
    }
    Ok(Decomposition::new(Variant::M, decompose_forest(t)))
}

pub(crate) fn decompose_forest(t: &DensityGraph) -> Vec<MonotoneTree> {
    let mut f = t.densities().to_vec();
    let mut trees = Vec::new();
    while let Some(&v) = mode_forced_in(t, &f).first() {
        let alpha = f[v].clone();
        trees.push(sweep_in_place(t, &mut f, v, alpha));
    }
    debug_assert!(f.iter().all(Zero::is_zero));
    trees
}
