//! Approximation algorithms for density graphs that are not trees.
//!
//! - [`naive_decompose`]: one monotone DFS per relative maximum.
//! - [`spanning_tree_decompose`]: the exact tree algorithm on a BFS spanning
//!   tree; at most `2 * genus` trees above the optimum.
//! - [`cactus_sm_decompose`]: picks one edge to delete from every cycle of a
//!   cactus using [`split_sweep`]; an SM-tree set at most three times the
//!   minimum.

mod cactus;
mod naive;
mod spanning;
mod split;

pub use cactus::cactus_sm_decompose;
pub use naive::naive_decompose;
pub use spanning::spanning_tree_decompose;
pub use split::{split_sweep, SweepReport};
