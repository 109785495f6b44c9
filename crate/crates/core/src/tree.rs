use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::{edge_key, Edge, Error, Rational, Result};

/// Rooted subtree of a host graph carrying a positive value on each of its
/// vertices. A vertex belongs to the tree iff it has an entry in `values`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneTree {
    pub root: usize,
    pub values: BTreeMap<usize, Rational>,
    pub edges: BTreeSet<Edge>,
}

impl MonotoneTree {
    pub fn new(
        root: usize,
        values: impl IntoIterator<Item = (usize, Rational)>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Self {
        MonotoneTree {
            root,
            values: values.into_iter().collect(),
            edges: edges.into_iter().map(|(u, v)| edge_key(u, v)).collect(),
        }
    }

    pub fn singleton(root: usize, value: Rational) -> Self {
        Self::new(root, [(root, value)], [])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.values.contains_key(&v)
    }

    /// Value at `v`, zero when `v` is not in the tree.
    pub fn value(&self, v: usize) -> Rational {
        self.values.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.values.keys().copied()
    }

    /// Same tree with every vertex id replaced by `map[id]`.
    pub(crate) fn relabel_vertices(&self, map: &[usize]) -> Self {
        Self::new(
            map[self.root],
            self.values.iter().map(|(&v, x)| (map[v], x.clone())),
            self.edges.iter().map(|&(u, v)| (map[u], map[v])),
        )
    }

    /// Adjacency restricted to the tree edges, ascending.
    pub(crate) fn adjacency(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut adj: BTreeMap<usize, Vec<usize>> =
            self.values.keys().map(|&v| (v, Vec::new())).collect();
        for &(u, v) in &self.edges {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
        for list in adj.values_mut() {
            list.sort_unstable();
        }
        adj
    }

    /// Parent of every vertex when the edges are oriented away from the root,
    /// in BFS order. Fails unless the vertices and edges form a tree that
    /// contains the root.
    pub fn orientation(&self) -> Result<Vec<(usize, Option<usize>)>> {
        if !self.contains(self.root) {
            return Err(Error::MalformedTree(format!(
                "root {} has no value",
                self.root
            )));
        }
        if let Some(&(u, v)) = self
            .edges
            .iter()
            .find(|(u, v)| !self.contains(*u) || !self.contains(*v))
        {
            return Err(Error::MalformedTree(format!(
                "edge {u}-{v} leaves the vertex set"
            )));
        }
        if self.edges.len() + 1 != self.values.len() {
            return Err(Error::MalformedTree(
                "edge count does not match a tree".into(),
            ));
        }
        let adj = self.adjacency();
        let mut order = Vec::with_capacity(self.len());
        let mut seen = BTreeSet::from([self.root]);
        let mut queue = VecDeque::from([(self.root, None)]);
        while let Some((u, parent)) = queue.pop_front() {
            order.push((u, parent));
            for &w in &adj[&u] {
                if seen.insert(w) {
                    queue.push_back((w, Some(u)));
                }
            }
        }
        if order.len() != self.len() {
            return Err(Error::MalformedTree("tree is disconnected".into()));
        }
        Ok(order)
    }
}

/// Which family of tree sets a decomposition claims to belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// Plain monotone tree set: values sum to the density.
    M,
    /// Complete: every edge between positive vertices lies in some tree.
    CM,
    /// Strong: pairwise intersections are empty or connected and acyclic.
    SM,
    /// Full: every root carries the whole density of its vertex.
    FM,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::M, Variant::CM, Variant::SM, Variant::FM];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::M => "m",
            Variant::CM => "cm",
            Variant::SM => "sm",
            Variant::FM => "fm",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "m" => Ok(Variant::M),
            "cm" => Ok(Variant::CM),
            "sm" => Ok(Variant::SM),
            "fm" => Ok(Variant::FM),
            _ => Err(Error::InvalidInstance(format!("unknown variant {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub variant: Variant,
    pub trees: Vec<MonotoneTree>,
}

impl Decomposition {
    pub fn new(variant: Variant, trees: Vec<MonotoneTree>) -> Self {
        Decomposition { variant, trees }
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Same trees under a different variant tag.
    pub fn relabel(mut self, variant: Variant) -> Self {
        self.variant = variant;
        self
    }

    /// Per-vertex sum of tree values over `n` vertices.
    pub fn total(&self, n: usize) -> Vec<Rational> {
        let mut sum = vec![Rational::zero(); n];
        for tree in &self.trees {
            for (&v, value) in &tree.values {
                if v < n {
                    sum[v] += value;
                }
            }
        }
        sum
    }
}
