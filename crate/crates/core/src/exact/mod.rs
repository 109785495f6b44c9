//! Exhaustive oracle for minimum M/CM/SM/FM-tree sets on small instances.
//!
//! Each connected component of the positive vertices is solved on its own.
//! For a candidate count `k` the search picks `k` roots, then a support
//! (rooted subtree) per root, and asks an exact rational LP whether values
//! exist that are monotone on every support and sum to the densities.
//! Supports may carry zero values, which is harmless: the positive part of a
//! monotone assignment is again a tree containing the root. Integer bound
//! propagation discards most configurations before the LP runs.
//!
//! For M and FM only spanning trees of the component are tried, and among
//! those only trees without a non-tree edge between a vertex and one of its
//! ancestors: hanging the descendant from that ancestor instead keeps every
//! assignment monotone. CM uses all spanning trees (edge coverage depends on
//! the shape) and SM all subtrees (intersections depend on it).

mod candidates;
mod lp;
mod propagate;
mod search;

use std::collections::BTreeSet;

use num_traits::Signed;

pub use candidates::{enumerate_rooted_subtrees, CandidateSupport};

use crate::approx::{naive_decompose, spanning_tree_decompose};
use crate::{
    components, validate_decomposition, validate_trees, Decomposition, DensityGraph, Error,
    MonotoneTree, Result, Variant,
};
use candidates::{Local, Shape};
use search::Instance;

/// Environment variable overriding [`ExactConfig::default`]'s budget.
pub const BUDGET_ENV: &str = "MTREE_ORACLE_BUDGET";

const DEFAULT_BUDGET: u64 = 50_000_000;

/// Whether support values may be zero inside a support.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Positivity {
    /// Values are only required to be non-negative; the positive part of
    /// each support becomes the witness tree.
    Relaxed,
    /// Every support vertex must receive a positive value. Much slower; used
    /// to cross-check the relaxation.
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactConfig {
    /// Work units (propagations and LP solves) before giving up with
    /// [`Error::TooLarge`].
    pub budget: u64,
    pub positivity: Positivity,
}

impl Default for ExactConfig {
    fn default() -> Self {
        let budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        ExactConfig {
            budget,
            positivity: Positivity::Relaxed,
        }
    }
}

pub(crate) struct Budget {
    left: u64,
}

impl Budget {
    fn new(total: u64) -> Self {
        Budget { left: total }
    }

    fn spend(&mut self, units: u64) -> Result<()> {
        match self.left.checked_sub(units) {
            Some(left) => {
                self.left = left;
                Ok(())
            }
            None => Err(Error::TooLarge("oracle budget exhausted".into())),
        }
    }
}

/// Minimum tree set of `g` for `variant` with the default configuration.
pub fn exact_min(g: &DensityGraph, variant: Variant) -> Result<Decomposition> {
    exact_min_with(g, variant, &ExactConfig::default())
}

pub fn exact_min_with(
    g: &DensityGraph,
    variant: Variant,
    config: &ExactConfig,
) -> Result<Decomposition> {
    let mut budget = Budget::new(config.budget);
    let positive: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.density(v).is_positive())
        .collect();
    let h = g.induced(&positive);
    let mut trees = Vec::new();
    for comp in components(&h) {
        let sub = h.induced(&comp);
        let ids: Vec<usize> = comp.iter().map(|&i| positive[i]).collect();
        for t in solve_component(&sub, variant, config.positivity, &mut budget)? {
            trees.push(t.relabel_vertices(&ids));
        }
    }
    let d = Decomposition::new(variant, trees);
    let report = validate_decomposition(g, &d)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidDecomposition(format!("oracle witness: {v}")));
    }
    Ok(d)
}

fn solve_component(
    sub: &DensityGraph,
    variant: Variant,
    positivity: Positivity,
    budget: &mut Budget,
) -> Result<Vec<MonotoneTree>> {
    let naive = naive_decompose(sub).trees;
    let spanning = spanning_tree_decompose(sub).trees;
    let heuristic = if spanning.len() <= naive.len() {
        spanning.clone()
    } else {
        naive.clone()
    };

    let m = Instance::new(sub, Variant::M, positivity)?;
    let mut best_m = heuristic.clone();
    for k in 1..heuristic.len() {
        if let Some(w) = m.search(k, None, budget)? {
            best_m = w;
            break;
        }
    }
    if variant == Variant::M || validate_trees(sub, &best_m, variant)?.ok() {
        return Ok(best_m);
    }

    // Every tree set of the other variants is an M-tree set, so the M
    // minimum is a lower bound.
    let lower = best_m.len();
    let upper = match variant {
        Variant::SM => Some(heuristic),
        Variant::FM => Some(naive),
        _ => None,
    };
    if let Some(upper) = &upper {
        if upper.len() <= lower {
            return Ok(upper.clone());
        }
    }
    let limit = upper
        .as_ref()
        .map_or(sub.vertex_count() + sub.edge_count() + 1, Vec::len);
    let inst = Instance::new(sub, variant, positivity)?;
    for k in lower..limit {
        if let Some(w) = inst.search(k, Some(&m), budget)? {
            return Ok(w);
        }
    }
    upper.ok_or_else(|| Error::InvalidDecomposition("no tree set found".into()))
}

/// Decides whether values exist on the given supports that form a valid
/// tree set of `g` for `variant`, allowing zero values inside a support.
/// On success returns the positive parts of the supports as a witness.
pub fn feasible(
    g: &DensityGraph,
    supports: &[CandidateSupport],
    variant: Variant,
) -> Result<Option<Decomposition>> {
    let local = Local::new(g)?;
    let mut shapes = Vec::with_capacity(supports.len());
    for s in supports {
        shapes.push(to_shape(g, &local, s)?);
    }
    if variant == Variant::SM {
        for (i, a) in shapes.iter().enumerate() {
            if shapes[..i].iter().any(|b| !a.contractible_with(b)) {
                return Ok(None);
            }
        }
    }
    let refs: Vec<&Shape> = shapes.iter().collect();
    Ok(
        search::solve(&local, g.densities(), &refs, variant, Positivity::Relaxed)
            .map(|values| Decomposition::new(variant, search::cores(&refs, &values))),
    )
}

fn to_shape(g: &DensityGraph, local: &Local, s: &CandidateSupport) -> Result<Shape> {
    let bad = |why: &str| Error::InvalidInstance(format!("support rooted at {}: {why}", s.root));
    let mut vmask = 0u64;
    for &v in &s.vertices {
        g.check_vertex(v)?;
        vmask |= 1 << v;
    }
    if !s.vertices.contains(&s.root) {
        return Err(bad("root not in support"));
    }
    let mut emask = 0u128;
    for &(u, v) in &s.tree_edges {
        let id = g.edge_id(u, v).ok_or_else(|| bad("edge not in graph"))?;
        if !s.vertices.contains(&u) || !s.vertices.contains(&v) {
            return Err(bad("edge leaves the support"));
        }
        emask |= 1 << id;
    }
    let shape = Shape::new(local, s.root, vmask, emask);
    let reached: BTreeSet<usize> = shape
        .order
        .iter()
        .map(|&(c, _)| c)
        .chain([s.root])
        .collect();
    if reached != s.vertices || s.tree_edges.len() + 1 != s.vertices.len() {
        return Err(bad("edges do not form a spanning tree"));
    }
    Ok(shape)
}
