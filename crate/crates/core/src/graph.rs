use num_traits::{Signed, Zero};

use crate::{Error, Rational, Result};

/// Undirected edge stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes an unordered vertex pair.
pub fn edge_key(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph with a non-negative rational density per vertex.
///
/// Vertex ids are `0..vertex_count()`. Neighbor lists and the edge list are
/// kept sorted so every traversal in the crate is reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityGraph {
    densities: Vec<Rational>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl DensityGraph {
    pub fn new(densities: Vec<Rational>, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let n = densities.len();
        if let Some(v) = densities.iter().position(|d| d.is_negative()) {
            return Err(Error::NegativeDensity(v));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push(edge_key(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_edges(densities, list))
    }

    fn from_sorted_edges(densities: Vec<Rational>, edges: Vec<Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); densities.len()];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        DensityGraph {
            densities,
            adjacency,
            edges,
        }
    }

    /// Same structure, new densities.
    pub fn with_densities(&self, densities: Vec<Rational>) -> Result<Self> {
        if densities.len() != self.vertex_count() {
            return Err(Error::DensityCount {
                expected: self.vertex_count(),
                actual: densities.len(),
            });
        }
        if let Some(v) = densities.iter().position(|d| d.is_negative()) {
            return Err(Error::NegativeDensity(v));
        }
        Ok(DensityGraph {
            densities,
            adjacency: self.adjacency.clone(),
            edges: self.edges.clone(),
        })
    }

    /// Same vertices and densities, keeping only the edges accepted by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(Edge) -> bool) -> Self {
        let edges = self.edges.iter().copied().filter(|&e| keep(e)).collect();
        Self::from_sorted_edges(self.densities.clone(), edges)
    }

    /// Subgraph induced by `vertices` (ascending, distinct), relabelled to
    /// `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let densities = vertices.iter().map(|&v| self.densities[v].clone()).collect();
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| edge_key(index[u], index[v]))
            .collect();
        edges.sort_unstable();
        Self::from_sorted_edges(densities, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.densities.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn density(&self, v: usize) -> &Rational {
        &self.densities[v]
    }

    pub fn densities(&self) -> &[Rational] {
        &self.densities
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges in ascending `(min, max)` order; the position of an edge in this
    /// slice is its edge id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&edge_key(u, v)).ok()
    }

    pub fn is_zero(&self) -> bool {
        self.densities.iter().all(Zero::is_zero)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational;

    fn dens(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| rational(v)).collect()
    }

    #[test]
    fn neighbors_are_sorted() {
        let g = DensityGraph::new(dens(&[1, 1, 1, 1]), [(3, 0), (0, 1), (2, 0)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(g.edge_id(3, 0), Some(2));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            DensityGraph::new(dens(&[1, 1]), [(0, 0)]).unwrap_err(),
            Error::SelfLoop(0)
        );
        assert_eq!(
            DensityGraph::new(dens(&[1, 1]), [(0, 1), (1, 0)]).unwrap_err(),
            Error::DuplicateEdge(0, 1)
        );
        assert_eq!(
            DensityGraph::new(dens(&[1, 1]), [(0, 2)]).unwrap_err(),
            Error::VertexOutOfRange(2)
        );
        assert_eq!(
            DensityGraph::new(dens(&[1, -1]), []).unwrap_err(),
            Error::NegativeDensity(1)
        );
    }

    #[test]
    fn induced_relabels() {
        let g = DensityGraph::new(dens(&[1, 2, 3, 4]), [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.induced(&[1, 2, 3]);
        assert_eq!(h.densities(), dens(&[2, 3, 4]).as_slice());
        assert_eq!(h.edges(), &[(0, 1), (1, 2)]);
    }
}
