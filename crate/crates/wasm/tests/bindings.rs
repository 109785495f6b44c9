use mtree_core::format::{parse_decomposition, parse_graph};
use mtree_core::sweep::decompose_tree;
use mtree_core::validate_decomposition;
use mtree_wasm::{decompose, generate, sweep};
use serde_json::Value;

const PATH: &str = r#"{"vertices": [{"id": 0, "density": "3"}, {"id": 1, "density": "1"}, {"id": 2, "density": "2"}], "edges": [[0, 1], [1, 2]]}"#;

#[test]
fn decompose_reports_valid_trees() {
    let reply: Value = serde_json::from_str(&decompose(PATH, "tree").unwrap()).unwrap();
    assert_eq!(reply["k"], 2);
    assert_eq!(reply["valid"], true);
    assert_eq!(reply["relative_maxima"], 2);
    let d = parse_decomposition(&reply["decomposition"].to_string()).unwrap();
    assert!(validate_decomposition(&parse_graph(PATH).unwrap(), &d).unwrap().ok());
}

#[test]
fn every_algorithm_runs_on_generated_cacti() {
    for seed in 0..10 {
        let g = generate("cactus", seed, 9).unwrap();
        for algo in ["naive", "spanning2g", "cactus-sm"] {
            let reply: Value = serde_json::from_str(&decompose(&g, algo).unwrap()).unwrap();
            assert_eq!(reply["valid"], true, "seed {seed} {algo}");
        }
    }
}

#[test]
fn sweep_splits_density() {
    let reply: Value = serde_json::from_str(&sweep(PATH, 0, "3").unwrap()).unwrap();
    let remainder = parse_graph(&reply["remainder"].to_string()).unwrap();
    let densities: Vec<String> = remainder.densities().iter().map(ToString::to_string).collect();
    assert_eq!(densities, ["0", "0", "1"]);
    assert_eq!(reply["remainder_minimum"], decompose_tree(&remainder).unwrap().len());
    assert!(sweep(PATH, 0, "4").is_err());
    assert!(sweep(PATH, 0, "x").is_err());
}

#[test]
fn errors_are_messages() {
    assert!(decompose("{", "tree").unwrap_err().contains("malformed"));
    assert!(decompose(PATH, "quantum").is_err());
    assert!(generate("blob", 0, 3).is_err());
    assert_eq!(generate("tree", 5, 6).unwrap(), generate("tree", 5, 6).unwrap());
}
