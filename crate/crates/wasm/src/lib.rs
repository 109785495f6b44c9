//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes and returns JSON text in the same formats as the
//! command-line tool. Errors surface as thrown strings.

use serde::Serialize;
use serde_json::Value;
use wasm_bindgen::prelude::*;

use mtree_core::approx::{cactus_sm_decompose, naive_decompose, spanning_tree_decompose};
use mtree_core::format::{parse_graph, DecompositionFile, GraphFile};
use mtree_core::reductions::{
    gen_planted, random_cactus, random_connected_graph, random_tree, PlantedShape,
};
use mtree_core::sweep::{decompose_tree, monotone_sweep};
use mtree_core::{
    genus, is_cactus, parse_rational, relative_maxima, validate_decomposition, DensityGraph,
    Variant,
};

#[derive(Serialize)]
struct DecomposeReply {
    k: usize,
    valid: bool,
    violations: Vec<String>,
    genus: usize,
    relative_maxima: usize,
    decomposition: DecompositionFile,
}

#[derive(Serialize)]
struct SweepReply {
    swept: DecompositionFile,
    remainder: GraphFile,
    remainder_minimum: Option<usize>,
}

fn to_string(value: &impl Serialize) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

fn graph(text: &str) -> Result<DensityGraph, String> {
    parse_graph(text).map_err(|e| e.to_string())
}

/// Runs `algo` (`tree`, `naive`, `spanning2g` or `cactus-sm`) and reports the
/// trees with their validation result.
pub fn decompose(graph_json: &str, algo: &str) -> Result<String, String> {
    let g = graph(graph_json)?;
    let d = match algo {
        "tree" => decompose_tree(&g),
        "naive" => Ok(naive_decompose(&g)),
        "spanning2g" => Ok(spanning_tree_decompose(&g)),
        "cactus-sm" => cactus_sm_decompose(&g),
        other => return Err(format!("unknown algorithm {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    let d = if algo == "cactus-sm" { d.relabel(Variant::SM) } else { d };
    let report = validate_decomposition(&g, &d).map_err(|e| e.to_string())?;
    to_string(&DecomposeReply {
        k: d.len(),
        valid: report.ok(),
        violations: report.violations.iter().map(ToString::to_string).collect(),
        genus: genus(&g),
        relative_maxima: relative_maxima(&g).len(),
        decomposition: DecompositionFile::from_decomposition(&d),
    })
}

/// One monotone sweep from `vertex` with starting value `alpha` (`"p"` or
/// `"p/q"`). On trees the reply also carries the minimum size of the
/// remainder.
pub fn sweep(graph_json: &str, vertex: usize, alpha: &str) -> Result<String, String> {
    let g = graph(graph_json)?;
    let alpha = parse_rational(alpha).map_err(|e| e.to_string())?;
    let s = monotone_sweep(&g, vertex, &alpha).map_err(|e| e.to_string())?;
    let swept = mtree_core::Decomposition::new(Variant::M, vec![s.swept]);
    to_string(&SweepReply {
        swept: DecompositionFile::from_decomposition(&swept),
        remainder_minimum: decompose_tree(&s.remainder).ok().map(|d| d.len()),
        remainder: GraphFile::from_graph(&s.remainder),
    })
}

/// Seeded instance: `tree`, `cactus`, `graph` (genus up to 3) or `planted`
/// (three planted trees).
pub fn generate(kind: &str, seed: u64, size: usize) -> Result<String, String> {
    let g = match kind {
        "tree" => random_tree(seed, size),
        "cactus" => random_cactus(seed, size, (size / 3).max(1)),
        "graph" => random_connected_graph(seed, size, 3),
        "planted" => gen_planted(seed, size, 3, PlantedShape::General).0,
        other => return Err(format!("unknown kind {other:?}")),
    };
    let file = GraphFile::from_graph(&g)
        .with_meta("generator", kind)
        .with_meta("seed", seed)
        .with_meta("is_cactus", Value::Bool(is_cactus(&g)));
    to_string(&file)
}

#[wasm_bindgen]
pub fn decompose_json(graph_json: &str, algo: &str) -> Result<String, JsValue> {
    decompose(graph_json, algo).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn sweep_json(graph_json: &str, vertex: usize, alpha: &str) -> Result<String, JsValue> {
    sweep(graph_json, vertex, alpha).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn generate_json(kind: &str, seed: u32, size: usize) -> Result<String, JsValue> {
    generate(kind, u64::from(seed), size.min(40)).map_err(|e| JsValue::from_str(&e))
}
