//! JSON file formats for graphs, decompositions and generator sidecars.
//!
//! Rationals are written as strings in lowest terms (`"3"`, `"1/2"`), so
//! serializing and parsing again reproduces the same value.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::{
    edge_key, parse_rational, Decomposition, DensityGraph, Error, MonotoneTree, Result, Variant,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEntry {
    pub id: usize,
    pub density: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub meta: BTreeMap<String, serde_json::Value>,
}

impl GraphFile {
    pub fn from_graph(g: &DensityGraph) -> Self {
        GraphFile {
            vertices: g
                .densities()
                .iter()
                .enumerate()
                .map(|(id, d)| VertexEntry {
                    id,
                    density: d.to_string(),
                })
                .collect(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            meta: BTreeMap::new(),
        }
    }

    pub fn with_meta(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.meta.insert(key.to_string(), value.into());
        self
    }

    /// Checks ids are exactly `0..n` and builds the graph.
    pub fn to_graph(&self) -> Result<DensityGraph> {
        let n = self.vertices.len();
        let mut densities = vec![None; n];
        for entry in &self.vertices {
            let slot = densities
                .get_mut(entry.id)
                .ok_or_else(|| Error::Format(format!("vertex id {} is not in 0..{n}", entry.id)))?;
            if slot.is_some() {
                return Err(Error::Format(format!("vertex id {} repeated", entry.id)));
            }
            *slot = Some(parse_rational(&entry.density)?);
        }
        let densities = densities.into_iter().map(Option::unwrap).collect();
        DensityGraph::new(densities, self.edges.iter().map(|&[u, v]| (u, v)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeEntry {
    pub id: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeEntry {
    pub root: usize,
    pub nodes: Vec<NodeEntry>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFile {
    pub variant: String,
    pub trees: Vec<TreeEntry>,
}

impl DecompositionFile {
    pub fn from_decomposition(d: &Decomposition) -> Self {
        DecompositionFile {
            variant: d.variant.to_string(),
            trees: d
                .trees
                .iter()
                .map(|t| TreeEntry {
                    root: t.root,
                    nodes: t
                        .values
                        .iter()
                        .map(|(&id, value)| NodeEntry {
                            id,
                            value: value.to_string(),
                        })
                        .collect(),
                    edges: t.edges.iter().map(|&(u, v)| [u, v]).collect(),
                })
                .collect(),
        }
    }

    /// Structural conversion only; use the validators for semantic checks.
    pub fn to_decomposition(&self) -> Result<Decomposition> {
        let variant: Variant = self.variant.parse()?;
        let mut trees = Vec::with_capacity(self.trees.len());
        for (i, entry) in self.trees.iter().enumerate() {
            let mut values = BTreeMap::new();
            for node in &entry.nodes {
                if values.insert(node.id, parse_rational(&node.value)?).is_some() {
                    return Err(Error::Format(format!("tree {i} lists vertex {} twice", node.id)));
                }
            }
            let mut edges = BTreeSet::new();
            for &[u, v] in &entry.edges {
                if !edges.insert(edge_key(u, v)) {
                    return Err(Error::Format(format!("tree {i} lists edge {u}-{v} twice")));
                }
            }
            trees.push(MonotoneTree {
                root: entry.root,
                values,
                edges,
            });
        }
        Ok(Decomposition::new(variant, trees))
    }
}

/// Optimum of a generated cover instance, for acceptance scripts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSidecar {
    /// `"sc1"` or `"vc"`.
    pub kind: String,
    pub optimum: usize,
    /// Sets of a set-cover instance, or edges of a vertex-cover instance.
    pub instance: Vec<Vec<usize>>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Format(e.to_string())
}

pub fn parse_graph(text: &str) -> Result<DensityGraph> {
    serde_json::from_str::<GraphFile>(text)
        .map_err(json_error)?
        .to_graph()
}

pub fn parse_decomposition(text: &str) -> Result<Decomposition> {
    serde_json::from_str::<DecompositionFile>(text)
        .map_err(json_error)?
        .to_decomposition()
}

pub fn graph_to_json(file: &GraphFile) -> String {
    serde_json::to_string_pretty(file).expect("graph files always serialize")
}

pub fn decomposition_to_json(d: &Decomposition) -> String {
    serde_json::to_string_pretty(&DecompositionFile::from_decomposition(d))
        .expect("decomposition files always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rational, Rational};

    fn sample() -> DensityGraph {
        DensityGraph::new(
            vec![rational(3), Rational::new(2.into(), 4.into()), rational(0)],
            [(0, 1), (1, 2)],
        )
        .unwrap()
    }

    #[test]
    fn graph_round_trip() {
        let g = sample();
        let text = graph_to_json(&GraphFile::from_graph(&g).with_meta("seed", 7));
        assert!(text.contains("\"1/2\""));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn ids_may_come_in_any_order() {
        let text = r#"{"vertices":[{"id":1,"density":"2"},{"id":0,"density":"1"}],"edges":[[0,1]]}"#;
        let g = parse_graph(text).unwrap();
        assert_eq!(g.density(0), &rational(1));
    }

    #[test]
    fn rejects_gaps_and_bad_numbers() {
        for text in [
            r#"{"vertices":[{"id":1,"density":"2"}],"edges":[]}"#,
            r#"{"vertices":[{"id":0,"density":"1.5"}],"edges":[]}"#,
            r#"{"vertices":[{"id":0,"density":"-1"}],"edges":[]}"#,
            r#"{"vertices":[{"id":0,"density":"1"}],"edges":[[0,3]]}"#,
            r#"{"vertices":[]"#,
        ] {
            assert!(parse_graph(text).is_err(), "{text}");
        }
    }

    #[test]
    fn decomposition_round_trip() {
        let d = Decomposition::new(
            Variant::SM,
            vec![MonotoneTree::new(
                0,
                [(0, rational(3)), (1, Rational::new(1.into(), 2.into()))],
                [(1, 0)],
            )],
        );
        assert_eq!(parse_decomposition(&decomposition_to_json(&d)).unwrap(), d);
    }
}
