//! Graphviz export.
//!
//! Host edges are drawn undirected. With a decomposition, every tree gets its
//! own color, its edges are drawn bold and point away from the root, and
//! roots are filled with their tree's color.

use std::fmt::Write;

use crate::{Decomposition, DensityGraph};

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

/// Color used for tree `index`.
pub fn tree_color(index: usize) -> &'static str {
    PALETTE[index % PALETTE.len()]
}

pub fn to_dot(g: &DensityGraph, d: Option<&Decomposition>) -> String {
    let mut out = String::from("digraph density {\n");
    out.push_str("  node [shape=circle];\n");
    let mut root_of = vec![None; g.vertex_count()];
    if let Some(d) = d {
        for (i, t) in d.trees.iter().enumerate() {
            if let Some(slot) = root_of.get_mut(t.root) {
                slot.get_or_insert(i);
            }
        }
    }
    for (v, density) in g.densities().iter().enumerate() {
        match root_of[v] {
            Some(i) => writeln!(
                out,
                "  {v} [label=\"{v}:{density}\", style=filled, fillcolor=\"{}\", fontcolor=white, class=\"tree{i}\"];",
                tree_color(i)
            ),
            None => writeln!(out, "  {v} [label=\"{v}:{density}\"];"),
        }
        .unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -> {v} [dir=none, color=gray];").unwrap();
    }
    if let Some(d) = d {
        for (i, t) in d.trees.iter().enumerate() {
            let color = tree_color(i);
            // Malformed trees fall back to their stored edge orientation.
            let arcs: Vec<(usize, usize)> = match t.orientation() {
                Ok(order) => order
                    .into_iter()
                    .filter_map(|(c, p)| p.map(|p| (p, c)))
                    .collect(),
                Err(_) => t.edges.iter().copied().collect(),
            };
            for (p, c) in arcs {
                let value = t.value(c);
                writeln!(
                    out,
                    "  {p} -> {c} [color=\"{color}\", penwidth=2.5, style=bold, label=\"{value}\", fontcolor=\"{color}\", class=\"tree{i}\"];"
                )
                .unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sweep::decompose_tree;
    use crate::{rational, DensityGraph};

    #[test]
    fn empty_graph() {
        let g = DensityGraph::new(vec![], []).unwrap();
        let dot = to_dot(&g, None);
        assert!(dot.starts_with("digraph"));
        assert!(dot.trim_end().ends_with('}'));
    }

    #[test]
    fn colors_per_tree() {
        let g = DensityGraph::new(vec![rational(3), rational(1), rational(2)], [(0, 1), (1, 2)])
            .unwrap();
        let d = decompose_tree(&g).unwrap();
        let dot = to_dot(&g, Some(&d));
        assert!(dot.contains("0 [label=\"0:3\""));
        assert_eq!(dot.matches("dir=none").count(), 2);
        assert!(dot.contains(tree_color(0)) && dot.contains(tree_color(1)));
        assert!(dot.contains("0 -> 1 [color"));
    }
}
