use std::collections::BTreeSet;
use std::fmt;

use num_traits::Signed;

use crate::{DensityGraph, Decomposition, Error, MonotoneTree, Result, Variant};

/// One reason a decomposition fails validation. `Display` renders the
/// machine-readable `<kind> <ids>` form used by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    EmptyTree { tree: usize },
    RootMissing { tree: usize },
    NonPositive { tree: usize, vertex: usize },
    EdgeOutsideTree { tree: usize, u: usize, v: usize },
    EdgeNotInGraph { tree: usize, u: usize, v: usize },
    NotATree { tree: usize },
    Increase { tree: usize, parent: usize, child: usize },
    Sum { vertex: usize },
    UncoveredEdge { u: usize, v: usize },
    SmIntersection { first: usize, second: usize },
    FmRoot { tree: usize },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::EmptyTree { .. } => "tree-empty",
            Violation::RootMissing { .. } => "root-missing",
            Violation::NonPositive { .. } => "nonpositive",
            Violation::EdgeOutsideTree { .. } => "edge-outside",
            Violation::EdgeNotInGraph { .. } => "edge-missing",
            Violation::NotATree { .. } => "not-tree",
            Violation::Increase { .. } => "monotone",
            Violation::Sum { .. } => "sum",
            Violation::UncoveredEdge { .. } => "cm-edge",
            Violation::SmIntersection { .. } => "sm-intersection",
            Violation::FmRoot { .. } => "fm-root",
        }
    }

    fn ids(&self) -> Vec<usize> {
        match *self {
            Violation::EmptyTree { tree }
            | Violation::RootMissing { tree }
            | Violation::NotATree { tree }
            | Violation::FmRoot { tree } => vec![tree],
            Violation::NonPositive { tree, vertex } => vec![tree, vertex],
            Violation::EdgeOutsideTree { tree, u, v } | Violation::EdgeNotInGraph { tree, u, v } => {
                vec![tree, u, v]
            }
            Violation::Increase {
                tree,
                parent,
                child,
            } => vec![tree, parent, child],
            Violation::Sum { vertex } => vec![vertex],
            Violation::UncoveredEdge { u, v } => vec![u, v],
            Violation::SmIntersection { first, second } => vec![first, second],
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind())?;
        for id in self.ids() {
            write!(f, " {id}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `d` against `g` under the variant recorded in `d`.
pub fn validate_decomposition(g: &DensityGraph, d: &Decomposition) -> Result<ValidationReport> {
    validate_trees(g, &d.trees, d.variant)
}

/// Checks a list of trees against `g` under `variant`.
///
/// Fails only when a tree mentions a vertex id outside the graph; every other
/// problem is reported as a [`Violation`].
pub fn validate_trees(
    g: &DensityGraph,
    trees: &[MonotoneTree],
    variant: Variant,
) -> Result<ValidationReport> {
    let n = g.vertex_count();
    for tree in trees {
        g.check_vertex(tree.root)?;
        if let Some(&v) = tree.values.keys().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange(v));
        }
        if let Some(&(u, v)) = tree.edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::VertexOutOfRange(u.max(v)));
        }
    }

    let mut violations = Vec::new();
    for (i, tree) in trees.iter().enumerate() {
        check_tree(g, i, tree, &mut violations);
    }

    let total = Decomposition::new(variant, trees.to_vec()).total(n);
    for (v, sum) in total.iter().enumerate() {
        if sum != g.density(v) {
            violations.push(Violation::Sum { vertex: v });
        }
    }

    match variant {
        Variant::M => {}
        Variant::CM => {
            for &(u, v) in g.edges() {
                if g.density(u).is_positive()
                    && g.density(v).is_positive()
                    && !trees.iter().any(|t| t.edges.contains(&(u, v)))
                {
                    violations.push(Violation::UncoveredEdge { u, v });
                }
            }
        }
        Variant::SM => {
            for i in 0..trees.len() {
                for j in i + 1..trees.len() {
                    if !intersection_contractible(&trees[i], &trees[j]) {
                        violations.push(Violation::SmIntersection {
                            first: i,
                            second: j,
                        });
                    }
                }
            }
        }
        Variant::FM => {
            for (i, tree) in trees.iter().enumerate() {
                if tree.value(tree.root) != *g.density(tree.root) {
                    violations.push(Violation::FmRoot { tree: i });
                }
            }
        }
    }
    Ok(ValidationReport { violations })
}

fn check_tree(g: &DensityGraph, index: usize, tree: &MonotoneTree, out: &mut Vec<Violation>) {
    if tree.is_empty() {
        out.push(Violation::EmptyTree { tree: index });
        return;
    }
    for (&v, value) in &tree.values {
        if !value.is_positive() {
            out.push(Violation::NonPositive {
                tree: index,
                vertex: v,
            });
        }
    }
    if !tree.contains(tree.root) {
        out.push(Violation::RootMissing { tree: index });
    }
    let mut structural = false;
    for &(u, v) in &tree.edges {
        if !tree.contains(u) || !tree.contains(v) {
            out.push(Violation::EdgeOutsideTree { tree: index, u, v });
            structural = true;
        }
        if !g.has_edge(u, v) {
            out.push(Violation::EdgeNotInGraph { tree: index, u, v });
        }
    }
    if structural || !tree.contains(tree.root) {
        return;
    }
    match tree.orientation() {
        Ok(order) => {
            for (child, parent) in order {
                if let Some(parent) = parent {
                    if tree.values[&child] > tree.values[&parent] {
                        out.push(Violation::Increase {
                            tree: index,
                            parent,
                            child,
                        });
                    }
                }
            }
        }
        Err(_) => out.push(Violation::NotATree { tree: index }),
    }
}

/// Common vertices together with common edges form an empty graph or a tree.
pub(crate) fn intersection_contractible(a: &MonotoneTree, b: &MonotoneTree) -> bool {
    let common: BTreeSet<usize> = a.vertices().filter(|&v| b.contains(v)).collect();
    if common.is_empty() {
        return true;
    }
    let edges: Vec<_> = a
        .edges
        .intersection(&b.edges)
        .filter(|(u, v)| common.contains(u) && common.contains(v))
        .collect();
    if edges.len() + 1 != common.len() {
        return false;
    }
    // With |E| = |V| - 1, connected is equivalent to acyclic.
    let index: Vec<usize> = common.iter().copied().collect();
    let pos = |v: usize| index.binary_search(&v).unwrap();
    let mut parent: Vec<usize> = (0..index.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &&(u, v) in &edges {
        let (ru, rv) = (find(&mut parent, pos(u)), find(&mut parent, pos(v)));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rational, Rational};

    fn dens(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| rational(v)).collect()
    }

    fn tree(root: usize, values: &[(usize, i64)], edges: &[(usize, usize)]) -> MonotoneTree {
        MonotoneTree::new(
            root,
            values.iter().map(|&(v, x)| (v, rational(x))),
            edges.iter().copied(),
        )
    }

    fn path312() -> DensityGraph {
        DensityGraph::new(dens(&[3, 1, 2]), [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn single_vertex_identity() {
        let g = DensityGraph::new(dens(&[5]), []).unwrap();
        let d = Decomposition::new(Variant::M, vec![tree(0, &[(0, 5)], &[])]);
        assert!(validate_decomposition(&g, &d).unwrap().ok());
    }

    #[test]
    fn path_with_two_trees() {
        let g = path312();
        let good = Decomposition::new(
            Variant::M,
            vec![
                tree(0, &[(0, 3), (1, 1), (2, 1)], &[(0, 1), (1, 2)]),
                tree(2, &[(2, 1)], &[]),
            ],
        );
        assert!(validate_decomposition(&g, &good).unwrap().ok());

        let bad = Decomposition::new(
            Variant::M,
            vec![
                tree(0, &[(0, 3), (1, 1), (2, 1)], &[(0, 1), (1, 2)]),
                tree(2, &[(2, 2)], &[]),
            ],
        );
        let report = validate_decomposition(&g, &bad).unwrap();
        assert_eq!(report.violations, vec![Violation::Sum { vertex: 2 }]);
        assert_eq!(report.violations[0].to_string(), "sum 2");
    }

    #[test]
    fn triangle_paths_have_connected_intersection() {
        let g = DensityGraph::new(dens(&[1, 1, 1]), [(0, 1), (1, 2), (0, 2)]).unwrap();
        let a = tree(0, &[(0, 1), (1, 1), (2, 1)], &[(0, 1), (1, 2)]);
        let b = tree(2, &[(0, 1), (1, 1), (2, 1)], &[(0, 1), (1, 2)]);
        let report = validate_trees(&g, &[a, b], Variant::SM).unwrap();
        assert!(!report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::SmIntersection { .. })));
        // Sums are doubled, which is judged separately.
        assert!(report
            .violations
            .iter()
            .all(|v| matches!(v, Violation::Sum { .. })));
    }

    #[test]
    fn disconnected_intersection_on_square() {
        // 4-cycle 0-1-2-3-0; both trees contain 0 and 2 but no common edge.
        let g = DensityGraph::new(dens(&[2, 1, 2, 1]), [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let a = tree(0, &[(0, 1), (1, 1), (2, 1)], &[(0, 1), (1, 2)]);
        let b = tree(0, &[(0, 1), (3, 1), (2, 1)], &[(0, 3), (2, 3)]);
        let sm = validate_trees(&g, &[a.clone(), b.clone()], Variant::SM).unwrap();
        assert_eq!(
            sm.violations,
            vec![Violation::SmIntersection {
                first: 0,
                second: 1
            }]
        );
        assert!(validate_trees(&g, &[a, b], Variant::M).unwrap().ok());
    }

    #[test]
    fn reports_structural_problems() {
        let g = path312();
        let increasing = tree(1, &[(1, 1), (2, 2)], &[(1, 2)]);
        let report = validate_trees(&g, &[increasing], Variant::M).unwrap();
        assert!(report.violations.contains(&Violation::Increase {
            tree: 0,
            parent: 1,
            child: 2
        }));

        let off_graph = tree(0, &[(0, 1), (2, 1)], &[(0, 2)]);
        let report = validate_trees(&g, &[off_graph], Variant::M).unwrap();
        assert!(report.violations.contains(&Violation::EdgeNotInGraph {
            tree: 0,
            u: 0,
            v: 2
        }));

        let zero = tree(0, &[(0, 0)], &[]);
        let report = validate_trees(&g, &[zero], Variant::M).unwrap();
        assert!(report.violations.contains(&Violation::NonPositive {
            tree: 0,
            vertex: 0
        }));
    }

    #[test]
    fn out_of_range_is_an_error() {
        let g = path312();
        let t = tree(7, &[(7, 1)], &[]);
        assert_eq!(
            validate_trees(&g, &[t], Variant::M).unwrap_err(),
            Error::VertexOutOfRange(7)
        );
    }

    #[test]
    fn cm_and_fm_checks() {
        let g = path312();
        let trees = vec![
            tree(0, &[(0, 3), (1, 1)], &[(0, 1)]),
            tree(2, &[(2, 2)], &[]),
        ];
        let cm = validate_trees(&g, &trees, Variant::CM).unwrap();
        assert_eq!(cm.violations, vec![Violation::UncoveredEdge { u: 1, v: 2 }]);
        assert!(validate_trees(&g, &trees, Variant::FM).unwrap().ok());

        let partial_root = vec![
            tree(0, &[(0, 3), (1, 1), (2, 1)], &[(0, 1), (1, 2)]),
            tree(2, &[(2, 1)], &[]),
        ];
        let fm = validate_trees(&g, &partial_root, Variant::FM).unwrap();
        assert_eq!(fm.violations, vec![Violation::FmRoot { tree: 1 }]);
    }

    #[test]
    fn zero_density_edges_need_no_cover() {
        let g = DensityGraph::new(dens(&[2, 0]), [(0, 1)]).unwrap();
        let trees = vec![tree(0, &[(0, 2)], &[])];
        assert!(validate_trees(&g, &trees, Variant::CM).unwrap().ok());
    }
}
