use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::approx::split_sweep;
use crate::sweep::decompose_forest;
use crate::{
    components, cycles, is_cactus, Decomposition, DensityGraph, Edge, Error,
    MonotoneTree, Result, Variant,
};

/// SM-tree set of a density cactus, at most three times the minimum.
///
/// While a component has two or more cycles, a leaf cycle is picked (the one
/// containing the smallest vertex) and one of its edges is deleted: the edge
/// whose removal lets [`split_sweep`] finish the cycle's side of the graph
/// with the fewest sweeps, then with the smallest residual at the vertex
/// joining it to the rest, then the smallest edge. With one cycle left every
/// edge is tried and the smallest tree decomposition wins.
pub fn cactus_sm_decompose(g: &DensityGraph) -> Result<Decomposition> {
    if !is_cactus(g) {
        return Err(Error::NotACactus);
    }
    let mut trees = Vec::new();
    for comp in components(g) {
        let sub = g.induced(&comp);
        trees.extend(
            decompose_component(sub)?
                .iter()
                .map(|t| t.relabel_vertices(&comp)),
        );
    }
    Ok(Decomposition::new(Variant::SM, trees))
}

fn decompose_component(mut h: DensityGraph) -> Result<Vec<MonotoneTree>> {
    loop {
        let cycs = cycles(&h);
        match cycs.len() {
            0 => return Ok(decompose_forest(&h)),
            1 => {
                let best = cycs[0]
                    .iter()
                    .map(|&e| decompose_forest(&h.filter_edges(|x| x != e)))
                    .min_by_key(Vec::len)
                    .expect("cycle has edges");
                return Ok(best);
            }
            _ => {
                let e = choose_edge(&h, &cycs)?;
                h = h.filter_edges(|x| x != e);
            }
        }
    }
}

fn choose_edge(h: &DensityGraph, cycs: &[Vec<Edge>]) -> Result<Edge> {
    let n = h.vertex_count();
    let cycle_of: BTreeMap<Edge, usize> = cycs
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.iter().map(move |&e| (e, i)))
        .collect();

    let (cycle, junction) = leaf_cycle(h, cycs, &cycle_of);
    let cycle_edges = &cycs[cycle];

    // Sub-branches at the junction, outside the cycle. Those reaching other
    // cycles form the far side; everything else stays with the cycle.
    let rest = h.filter_edges(|(u, v)| {
        u != junction && v != junction && cycle_of.get(&(u, v)) != Some(&cycle)
    });
    let mut far = vec![false; n];
    for comp in components(&rest) {
        let touches_junction = comp.iter().any(|&v| h.neighbors(junction).contains(&v))
            && !comp.iter().any(|&v| on_cycle(v, cycle_edges));
        if !touches_junction {
            continue;
        }
        let member: BTreeSet<usize> = comp.iter().copied().collect();
        let has_cycle_edge = h.edges().iter().any(|&(u, v)| {
            (member.contains(&u) || member.contains(&v))
                && cycle_of.get(&(u, v)).is_some_and(|&c| c != cycle)
        });
        if has_cycle_edge {
            for v in comp {
                far[v] = true;
            }
        }
    }
    let far_tree = bfs_tree_within(h, junction, |v| v == junction || far[v]);
    let near_vertices: Vec<usize> = (0..n).filter(|&v| !far[v]).collect();
    let mut far_vertices: Vec<usize> = (0..n).filter(|&v| far[v]).collect();
    far_vertices.push(junction);
    far_vertices.sort_unstable();

    let mut best: Option<(usize, crate::Rational, Edge)> = None;
    for &e in cycle_edges {
        let host = h.filter_edges(|x| {
            if far[x.0] || far[x.1] {
                far_tree.contains(&x)
            } else {
                x != e
            }
        });
        let report = split_sweep(&host, &near_vertices, &far_vertices)?;
        let key = (report.sweep_count, report.residual_at_junction, e);
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    Ok(best.expect("cycle has edges").2)
}

fn on_cycle(v: usize, cycle: &[Edge]) -> bool {
    cycle.iter().any(|&(a, b)| a == v || b == v)
}

/// Leaf cycle containing the smallest vertex, with the vertex attaching it to
/// the other cycles.
fn leaf_cycle(
    h: &DensityGraph,
    cycs: &[Vec<Edge>],
    cycle_of: &BTreeMap<Edge, usize>,
) -> (usize, usize) {
    let mut leaves = Vec::new();
    for (i, cycle) in cycs.iter().enumerate() {
        let without = h.filter_edges(|e| cycle_of.get(&e) != Some(&i));
        let mut label = vec![usize::MAX; h.vertex_count()];
        let comps = components(&without);
        for (c, comp) in comps.iter().enumerate() {
            for &v in comp {
                label[v] = c;
            }
        }
        let mut with_cycles = vec![false; comps.len()];
        for &e in without.edges() {
            if cycle_of.contains_key(&e) {
                with_cycles[label[e.0]] = true;
            }
        }
        let vertices: BTreeSet<usize> = cycle.iter().flat_map(|&(u, v)| [u, v]).collect();
        let attached: Vec<usize> = vertices
            .iter()
            .copied()
            .filter(|&v| with_cycles[label[v]])
            .collect();
        if let [junction] = attached.as_slice() {
            leaves.push((vertices.into_iter().collect::<Vec<_>>(), i, *junction));
        }
    }
    leaves.sort();
    let (_, cycle, junction) = leaves.into_iter().next().expect("a cactus has a leaf cycle");
    (cycle, junction)
}

/// BFS tree from `start` over vertices accepted by `inside`, neighbors
/// ascending.
fn bfs_tree_within(h: &DensityGraph, start: usize, inside: impl Fn(usize) -> bool) -> BTreeSet<Edge> {
    let mut seen = vec![false; h.vertex_count()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut edges = BTreeSet::new();
    while let Some(u) = queue.pop_front() {
        for &w in h.neighbors(u) {
            if !seen[w] && inside(w) {
                seen[w] = true;
                edges.insert(crate::edge_key(u, w));
                queue.push_back(w);
            }
        }
    }
    edges
}
