use num_traits::One;

use super::{min_cover, BRUTE_FORCE_LIMIT};
use crate::{edge_key, rational, DensityGraph, Edge, Error, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCoverInstance {
    pub vertex_count: usize,
    /// Sorted, normalized with the smaller endpoint first.
    pub edges: Vec<Edge>,
}

impl VertexCoverInstance {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list: Vec<Edge> = Vec::new();
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::VertexOutOfRange(u.max(v)));
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
        Ok(VertexCoverInstance {
            vertex_count,
            edges: list,
        })
    }

    fn neighbor_masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    /// Any two vertices have at most one common neighbor.
    pub fn is_restricted(&self) -> bool {
        if self.vertex_count > 64 {
            return false;
        }
        let adj = self.neighbor_masks();
        (0..self.vertex_count)
            .all(|u| (u + 1..self.vertex_count).all(|v| (adj[u] & adj[v]).count_ones() <= 1))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Gadget vertex of edge number `i`.
    pub fn edge_vertex(&self, i: usize) -> usize {
        self.vertex_count + i
    }
}

/// Vertex `v` keeps id `v` with density `deg(v)`; edge number `i` becomes
/// vertex `n + i` with density 1, adjacent to both endpoints.
pub fn vc_to_density_graph(vc: &VertexCoverInstance) -> Result<DensityGraph> {
    if !vc.is_restricted() {
        return Err(Error::InvalidInstance(
            "two vertices have more than one common neighbor".into(),
        ));
    }
    let n = vc.vertex_count;
    let mut densities: Vec<Rational> = (0..n).map(|v| rational(vc.degree(v) as i64)).collect();
    densities.extend(vc.edges.iter().map(|_| Rational::one()));
    let edges = vc
        .edges
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| [(u, n + i), (v, n + i)]);
    DensityGraph::new(densities, edges)
}

pub fn brute_force_vertex_cover(vc: &VertexCoverInstance) -> Result<usize> {
    if vc.vertex_count > BRUTE_FORCE_LIMIT || vc.edges.len() > 64 {
        return Err(Error::TooLarge(format!("{} vertices", vc.vertex_count)));
    }
    // Vertex v covers the edges incident to it.
    let masks: Vec<u64> = (0..vc.vertex_count)
        .map(|v| {
            vc.edges
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == v || b == v)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let target = if vc.edges.len() == 64 {
        u64::MAX
    } else {
        (1u64 << vc.edges.len()) - 1
    };
    Ok(min_cover(&masks, target).expect("all vertices cover all edges"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let vc = VertexCoverInstance::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(vc.is_restricted());
        assert_eq!(brute_force_vertex_cover(&vc).unwrap(), 2);
        let g = vc_to_density_graph(&vc).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.density(0), &rational(2));
        assert_eq!(g.density(3), &rational(1));
    }

    #[test]
    fn single_edge_is_a_path() {
        let vc = VertexCoverInstance::new(2, [(1, 0)]).unwrap();
        let g = vc_to_density_graph(&vc).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
        assert_eq!(brute_force_vertex_cover(&vc).unwrap(), 1);
    }

    #[test]
    fn no_edges() {
        let vc = VertexCoverInstance::new(3, []).unwrap();
        assert_eq!(brute_force_vertex_cover(&vc).unwrap(), 0);
        assert!(vc_to_density_graph(&vc).unwrap().is_zero());
    }

    #[test]
    fn four_cycle_is_not_restricted() {
        let vc = VertexCoverInstance::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(!vc.is_restricted());
        assert!(vc_to_density_graph(&vc).is_err());
    }
}
