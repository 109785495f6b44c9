use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::Signed;

use crate::{edge_key, DensityGraph, Edge, Error, MonotoneTree, Result};

/// Connected components, each sorted ascending, ordered by smallest vertex.
pub fn components(g: &DensityGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Number of independent cycles: `|E| - |V| + #components`.
pub fn genus(g: &DensityGraph) -> usize {
    g.edge_count() + components(g).len() - g.vertex_count()
}

pub fn is_forest(g: &DensityGraph) -> bool {
    genus(g) == 0
}

/// Connected, acyclic and non-empty.
pub fn is_tree(g: &DensityGraph) -> bool {
    g.vertex_count() > 0 && g.edge_count() + 1 == g.vertex_count() && components(g).len() == 1
}

/// BFS spanning forest: each component is explored from its smallest vertex,
/// neighbors in ascending order. Returns the tree edges sorted.
pub fn bfs_spanning_forest(g: &DensityGraph) -> Vec<Edge> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut edges = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    edges.push(edge_key(u, w));
                    queue.push_back(w);
                }
            }
        }
    }
    edges.sort_unstable();
    edges
}

/// One representative (the smallest id) per plateau maximum.
///
/// A plateau is a connected set of equal-density vertices; it is a maximum
/// when no neighboring vertex has strictly larger density. Zero plateaus are
/// never reported.
pub fn relative_maxima(g: &DensityGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut maxima = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let level = g.density(start);
        seen[start] = true;
        let mut stack = vec![start];
        let mut is_max = true;
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                let d = g.density(w);
                if d == level {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                } else if d > level {
                    is_max = false;
                }
            }
        }
        if is_max && level.is_positive() {
            maxima.push(start);
        }
    }
    maxima
}

/// Edge sets of the biconnected components (blocks), each sorted, ordered by
/// their smallest edge.
pub(crate) fn blocks(g: &DensityGraph) -> Vec<Vec<Edge>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut out = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (u, parent) = (top.0, top.1);
            if top.2 < g.degree(u) {
                let w = g.neighbors(u)[top.2];
                top.2 += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(edge_key(u, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, u, 0));
                } else if disc[w] < disc[u] {
                    edge_stack.push(edge_key(u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == edge_key(parent, u) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        out.push(block);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// True iff every edge lies on at most one simple cycle, i.e. every block is
/// a single edge or a simple cycle.
pub fn is_cactus(g: &DensityGraph) -> bool {
    blocks(g).iter().all(|block| {
        let vertices: BTreeSet<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        block.len() == 1 || block.len() == vertices.len()
    })
}

/// Edge sets of the blocks that are cycles. Only meaningful on cacti, where
/// these are exactly the simple cycles.
pub fn cycles(g: &DensityGraph) -> Vec<Vec<Edge>> {
    blocks(g).into_iter().filter(|b| b.len() >= 3).collect()
}

/// Cuts `tree` at `edge`, returning the part containing the root and the
/// branch below the edge, rooted at the edge's far endpoint.
pub fn cut_monotone_tree(tree: &MonotoneTree, edge: Edge) -> Result<(MonotoneTree, MonotoneTree)> {
    let edge = edge_key(edge.0, edge.1);
    if !tree.edges.contains(&edge) {
        return Err(Error::EdgeNotInTree(edge.0, edge.1));
    }
    let order = tree.orientation()?;
    let parent: BTreeMap<usize, Option<usize>> = order.iter().copied().collect();
    let child = if parent[&edge.1] == Some(edge.0) {
        edge.1
    } else {
        edge.0
    };

    let adj = tree.adjacency();
    let mut branch = BTreeSet::from([child]);
    let mut stack = vec![child];
    while let Some(u) = stack.pop() {
        for &w in &adj[&u] {
            if parent[&w] == Some(u) && branch.insert(w) {
                stack.push(w);
            }
        }
    }

    let split = |keep: &dyn Fn(usize) -> bool, root: usize| {
        MonotoneTree::new(
            root,
            tree.values
                .iter()
                .filter(|(v, _)| keep(**v))
                .map(|(&v, x)| (v, x.clone())),
            tree.edges
                .iter()
                .copied()
                .filter(|&(u, v)| keep(u) && keep(v)),
        )
    };
    let upper = split(&|v| !branch.contains(&v), tree.root);
    let lower = split(&|v| branch.contains(&v), child);
    Ok((upper, lower))
}
