//! Monotone tree decompositions of density graphs.
//!
//! A density graph is a simple undirected graph with a non-negative rational
//! weight on every vertex. A monotone tree is a rooted subtree whose values do
//! not increase when walking away from the root. This crate decomposes density
//! graphs into small collections of monotone trees whose values sum to the
//! input density at every vertex:
//!
//! - [`sweep`]: the monotone sweep and the exact minimum algorithm for trees.
//! - [`approx`]: approximation algorithms for general graphs and cacti.
//! - [`exact`]: an exhaustive oracle for small instances.
//! - [`reductions`]: set-cover and vertex-cover gadgets, brute-force cover
//!   solvers and seeded instance generators.
//! - [`format`] and [`dot`]: file formats and Graphviz export.
//!
//! All arithmetic is exact ([`Rational`] is an arbitrary precision fraction).

pub mod approx;
pub mod dot;
mod error;
pub mod exact;
pub mod format;
mod graph;
mod rational;
pub mod reductions;
mod structure;
pub mod sweep;
mod tree;
mod validate;

pub use error::{Error, Result};
pub use graph::{edge_key, DensityGraph, Edge};
pub use rational::{parse_rational, rational, Rational};
pub use structure::{
    bfs_spanning_forest, components, cut_monotone_tree, cycles, genus, is_cactus, is_forest,
    is_tree, relative_maxima,
};
pub use tree::{Decomposition, MonotoneTree, Variant};
pub use validate::{validate_decomposition, validate_trees, ValidationReport, Violation};
