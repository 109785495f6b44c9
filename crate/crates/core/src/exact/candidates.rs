//! Enumeration of the supports the oracle searches over.

use std::collections::{BTreeSet, VecDeque};

use num_traits::Signed;

use crate::{DensityGraph, Edge, Error, Result};

/// A rooted subtree of the host graph over positive-density vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CandidateSupport {
    pub root: usize,
    pub vertices: BTreeSet<usize>,
    /// Edges of a spanning tree of `vertices`, all present in the host.
    pub tree_edges: BTreeSet<Edge>,
}

/// Largest positive-vertex count for which all subtrees are enumerated.
pub(crate) const MAX_SUBSET_VERTICES: usize = 20;

/// Every rooted subtree of `g` whose vertices all have positive density, in
/// canonical order: vertex set, then edge set, then root.
pub fn enumerate_rooted_subtrees(g: &DensityGraph) -> Result<Vec<CandidateSupport>> {
    let positive: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.density(v).is_positive())
        .collect();
    if positive.len() > MAX_SUBSET_VERTICES {
        return Err(Error::TooLarge(format!(
            "{} positive vertices, at most {MAX_SUBSET_VERTICES} supported",
            positive.len()
        )));
    }
    let h = g.induced(&positive);
    let local = Local::new(&h)?;
    let mut out = Vec::new();
    for shape in local.all_subtrees() {
        out.push(CandidateSupport {
            root: positive[shape.root],
            vertices: shape.vertices().map(|v| positive[v]).collect(),
            tree_edges: shape
                .edges(&local)
                .map(|(u, v)| (positive[u], positive[v]))
                .collect(),
        });
    }
    out.sort_by(|a, b| {
        (a.vertices.iter().collect::<Vec<_>>(), a.tree_edges.iter().collect::<Vec<_>>(), a.root)
            .cmp(&(b.vertices.iter().collect::<Vec<_>>(), b.tree_edges.iter().collect::<Vec<_>>(), b.root))
    });
    Ok(out)
}

/// Bitmask view of a small graph.
pub(crate) struct Local {
    pub n: usize,
    pub edges: Vec<Edge>,
    /// Neighbor masks.
    pub adj: Vec<u64>,
}

impl Local {
    pub fn new(h: &DensityGraph) -> Result<Self> {
        if h.vertex_count() > 64 || h.edge_count() > 128 {
            return Err(Error::TooLarge(format!(
                "{} vertices and {} edges exceed the oracle's limits",
                h.vertex_count(),
                h.edge_count()
            )));
        }
        let mut adj = vec![0u64; h.vertex_count()];
        for &(u, v) in h.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Local {
            n: h.vertex_count(),
            edges: h.edges().to_vec(),
            adj,
        })
    }

    fn connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let mut seen = mask & mask.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let next = self.adj[v] & mask & !seen;
            seen |= next;
            frontier |= next;
        }
        seen == mask
    }

    /// Edge masks of all spanning trees of the subgraph induced by `mask`.
    pub fn spanning_trees(&self, mask: u64) -> Vec<u128> {
        let inside: Vec<usize> = (0..self.edges.len())
            .filter(|&i| {
                let (u, v) = self.edges[i];
                mask >> u & 1 == 1 && mask >> v & 1 == 1
            })
            .collect();
        let need = mask.count_ones() as usize - 1;
        let mut out = Vec::new();
        let mut comp: Vec<usize> = (0..self.n).collect();
        self.grow(&inside, 0, need, 0, &mut comp, &mut out);
        out
    }

    fn grow(
        &self,
        inside: &[usize],
        at: usize,
        need: usize,
        chosen: u128,
        comp: &mut Vec<usize>,
        out: &mut Vec<u128>,
    ) {
        if need == 0 {
            out.push(chosen);
            return;
        }
        if inside.len() - at < need {
            return;
        }
        let id = inside[at];
        let (u, v) = self.edges[id];
        let (cu, cv) = (comp[u], comp[v]);
        if cu != cv {
            let saved = comp.clone();
            for c in comp.iter_mut() {
                if *c == cv {
                    *c = cu;
                }
            }
            self.grow(inside, at + 1, need - 1, chosen | 1 << id, comp, out);
            *comp = saved;
        }
        self.grow(inside, at + 1, need, chosen, comp, out);
    }

    /// Every (vertex set, spanning tree, root) triple with a connected vertex
    /// set.
    pub fn all_subtrees(&self) -> Vec<Shape> {
        let mut out = Vec::new();
        for mask in 1..(1u64 << self.n) {
            if !self.connected(mask) {
                continue;
            }
            for emask in self.spanning_trees(mask) {
                for root in bits(mask) {
                    out.push(Shape::new(self, root, mask, emask));
                }
            }
        }
        out
    }

    /// Spanning trees of the component of `root` rooted there; with
    /// `prune_dominated`, only trees where no non-tree edge joins a vertex to
    /// one of its ancestors.
    pub fn spanning_shapes(&self, root: usize, prune_dominated: bool) -> Vec<Shape> {
        let comp = self.component(root);
        let inside: Vec<Edge> = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| comp >> u & 1 == 1 && comp >> v & 1 == 1)
            .collect();
        self.spanning_trees(comp)
            .into_iter()
            .map(|emask| Shape::new(self, root, comp, emask))
            .filter(|s| !prune_dominated || !s.dominated(&inside))
            .collect()
    }

    pub fn component(&self, v: usize) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let next = self.adj[u] & !seen;
            seen |= next;
            frontier |= next;
        }
        seen
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A rooted support in bitmask form with its edges oriented away from the
/// root.
#[derive(Debug, Clone)]
pub(crate) struct Shape {
    pub root: usize,
    pub vmask: u64,
    pub emask: u128,
    /// `(child, parent)` in BFS order from the root.
    pub order: Vec<(usize, usize)>,
    pub parent: Vec<usize>,
}

impl Shape {
    pub fn new(local: &Local, root: usize, vmask: u64, emask: u128) -> Self {
        let mut tree_adj = vec![Vec::new(); local.n];
        for id in 0..local.edges.len() {
            if emask >> id & 1 == 1 {
                let (u, v) = local.edges[id];
                tree_adj[u].push(v);
                tree_adj[v].push(u);
            }
        }
        let mut parent = vec![usize::MAX; local.n];
        parent[root] = root;
        let mut order = Vec::new();
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &tree_adj[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    order.push((w, u));
                    queue.push_back(w);
                }
            }
        }
        Shape {
            root,
            vmask,
            emask,
            order,
            parent,
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        bits(self.vmask)
    }

    pub fn edges<'a>(&'a self, local: &'a Local) -> impl Iterator<Item = Edge> + 'a {
        (0..local.edges.len())
            .filter(move |&id| self.emask >> id & 1 == 1)
            .map(move |id| local.edges[id])
    }

    fn is_ancestor(&self, a: usize, mut v: usize) -> bool {
        while v != self.root {
            v = self.parent[v];
            if v == a {
                return true;
            }
        }
        false
    }

    fn dominated(&self, inside: &[Edge]) -> bool {
        inside.iter().any(|&(u, v)| {
            self.parent[u] != v
                && self.parent[v] != u
                && (self.is_ancestor(u, v) || self.is_ancestor(v, u))
        })
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vmask >> v & 1 == 1
    }

    /// Common vertices and common edges form an empty graph or a tree.
    pub fn contractible_with(&self, other: &Shape) -> bool {
        let common = self.vmask & other.vmask;
        common == 0 || (self.emask & other.emask).count_ones() + 1 == common.count_ones()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational;

    fn graph(values: &[i64], edges: &[(usize, usize)]) -> DensityGraph {
        DensityGraph::new(
            values.iter().map(|&v| rational(v)).collect(),
            edges.iter().copied(),
        )
        .unwrap()
    }

    #[test]
    fn path_has_four() {
        let g = graph(&[1, 1], &[(0, 1)]);
        assert_eq!(enumerate_rooted_subtrees(&g).unwrap().len(), 4);
    }

    #[test]
    fn triangle_has_eighteen() {
        let g = graph(&[1, 1, 1], &[(0, 1), (1, 2), (0, 2)]);
        let all = enumerate_rooted_subtrees(&g).unwrap();
        assert_eq!(all.len(), 18);
        assert_eq!(all[0].vertices, BTreeSet::from([0]));
    }

    #[test]
    fn zero_vertices_are_skipped() {
        let g = graph(&[1, 0, 1], &[(0, 1), (1, 2)]);
        assert_eq!(enumerate_rooted_subtrees(&g).unwrap().len(), 2);
    }

    #[test]
    fn spanning_trees_of_k4() {
        let g = graph(
            &[1, 1, 1, 1],
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        );
        let local = Local::new(&g).unwrap();
        assert_eq!(local.spanning_trees(0b1111).len(), 16);
        // Rooted at 0 only the star avoids ancestor chords.
        assert_eq!(local.spanning_shapes(0, true).len(), 1);
    }
}
