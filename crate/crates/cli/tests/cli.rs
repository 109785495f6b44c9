use std::fs;
use std::path::{Path, PathBuf};

use mtree_cli::{run, EXIT_INVALID, EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE};
use mtree_core::format::parse_decomposition;
use tempfile::TempDir;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn mtree(args: &[&str]) -> Output {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("mtree").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn graph_json(densities: &[&str], edges: &[(usize, usize)]) -> String {
    let vertices: Vec<String> = densities
        .iter()
        .enumerate()
        .map(|(i, d)| format!("{{\"id\": {i}, \"density\": \"{d}\"}}"))
        .collect();
    let edges: Vec<String> = edges.iter().map(|(u, v)| format!("[{u}, {v}]")).collect();
    format!("{{\"vertices\": [{}], \"edges\": [{}]}}", vertices.join(", "), edges.join(", "))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn decompose_path_with_tree_algorithm() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "path.json", &graph_json(&["3", "1", "2"], &[(0, 1), (1, 2)]));
    let output = dir.path().join("out.json");
    let r = mtree(&["decompose", "--algo", "tree", "--input", s(&input), "--output", s(&output)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    assert_eq!(r.stdout.trim(), "k=2 algo=tree valid=true");
    let d = parse_decomposition(&fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(d.len(), 2);
}

#[test]
fn decompose_triangle_exactly() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "tri.json", &graph_json(&["1", "1", "1"], &[(0, 1), (1, 2), (0, 2)]));
    let r = mtree(&["decompose", "--algo", "exact", "--variant", "m", "--input", s(&input)]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.starts_with("k=1 algo=exact valid=true\n"));
    // Without --output the decomposition follows the summary.
    let body = r.stdout.split_once('\n').unwrap().1;
    assert_eq!(parse_decomposition(body).unwrap().len(), 1);
}

#[test]
fn precondition_failures_exit_3() {
    let dir = TempDir::new().unwrap();
    let k4 = graph_json(&["1", "2", "3", "4"], &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    let k4 = write(&dir, "k4.json", &k4);
    let r = mtree(&["decompose", "--algo", "cactus-sm", "--input", s(&k4)]);
    assert_eq!(r.code, EXIT_PRECONDITION);
    let r = mtree(&["decompose", "--algo", "tree", "--input", s(&k4)]);
    assert_eq!(r.code, EXIT_PRECONDITION);
}

#[test]
fn oracle_budget_exhaustion_exits_3() {
    let bin = env!("CARGO_BIN_EXE_mtree");
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "p.json", &graph_json(&["3", "1", "2"], &[(0, 1), (1, 2)]));
    let status = std::process::Command::new(bin)
        .args(["decompose", "--algo", "exact", "--input", s(&input)])
        .env("MTREE_ORACLE_BUDGET", "1")
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(EXIT_PRECONDITION));
}

#[test]
fn usage_and_parse_errors_exit_1() {
    let dir = TempDir::new().unwrap();
    let good = write(&dir, "g.json", &graph_json(&["1"], &[]));
    let bad = write(&dir, "bad.json", "{\"vertices\": [");
    let frac = write(&dir, "q0.json", &graph_json(&["1/0"], &[]));
    let cases: Vec<Vec<&str>> = vec![
        vec!["decompose", "--algo", "cactus-sm", "--variant", "m", "--input", s(&good)],
        vec!["decompose", "--algo", "naive", "--variant", "cm", "--input", s(&good)],
        vec!["decompose", "--algo", "naive", "--input", s(&bad)],
        vec!["decompose", "--algo", "naive", "--input", s(&frac)],
        vec!["decompose", "--algo", "naive", "--input", "/nonexistent/graph.json"],
        vec!["stats", "--input", s(&bad)],
        vec!["frobnicate"],
    ];
    for args in cases {
        assert_eq!(mtree(&args).code, EXIT_USAGE, "{args:?}");
    }
    assert_eq!(mtree(&["--help"]).code, EXIT_OK);
}

#[test]
fn validate_planted_and_tampered() {
    let dir = TempDir::new().unwrap();
    let graph = dir.path().join("g.json");
    let side = dir.path().join("d.json");
    let r = mtree(&[
        "gen", "--kind", "planted", "--seed", "4", "--size", "6", "--k", "3", "--output",
        s(&graph), "--sidecar", s(&side),
    ]);
    assert_eq!(r.code, EXIT_OK);
    let r = mtree(&["validate", "--graph", s(&graph), "--decomposition", s(&side)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stdout);
    assert_eq!(r.stdout.trim(), "valid variant=m k=3");

    // Raise the root value of the first tree by one.
    let mut d: serde_json::Value = serde_json::from_str(&fs::read_to_string(&side).unwrap()).unwrap();
    let root = d["trees"][0]["root"].as_u64().unwrap();
    let nodes = d["trees"][0]["nodes"].as_array_mut().unwrap();
    let node = nodes.iter_mut().find(|n| n["id"].as_u64() == Some(root)).unwrap();
    let value: i64 = node["value"].as_str().unwrap().parse().unwrap();
    node["value"] = serde_json::Value::String((value + 1).to_string());
    let tampered = write(&dir, "t.json", &d.to_string());
    let r = mtree(&["validate", "--graph", s(&graph), "--decomposition", s(&tampered)]);
    assert_eq!(r.code, EXIT_INVALID);
    assert!(r.stdout.lines().any(|l| l == format!("VIOLATION sum {root}")), "{}", r.stdout);
}

#[test]
fn strong_check_rejects_disconnected_overlap() {
    // Two paths around a 4-cycle meet only in the opposite corners 0 and 2.
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "c4.json", &graph_json(&["2", "1", "2", "1"], &[(0, 1), (1, 2), (2, 3), (0, 3)]));
    let trees = r#"{"variant": "m", "trees": [
        {"root": 0, "nodes": [{"id": 0, "value": "1"}, {"id": 1, "value": "1"}, {"id": 2, "value": "1"}], "edges": [[0, 1], [1, 2]]},
        {"root": 2, "nodes": [{"id": 2, "value": "1"}, {"id": 3, "value": "1"}, {"id": 0, "value": "1"}], "edges": [[2, 3], [0, 3]]}
    ]}"#;
    let d = write(&dir, "d.json", trees);
    let r = mtree(&["validate", "--graph", s(&graph), "--decomposition", s(&d)]);
    assert_eq!(r.code, EXIT_OK);
    let r = mtree(&["validate", "--graph", s(&graph), "--decomposition", s(&d), "--variant", "sm"]);
    assert_eq!(r.code, EXIT_INVALID);
    assert_eq!(r.stdout.trim(), "VIOLATION sm-intersection 0 1");
}

#[test]
fn stats_reports_structure() {
    let dir = TempDir::new().unwrap();
    let tri = write(&dir, "tri.json", &graph_json(&["1", "1", "1"], &[(0, 1), (1, 2), (0, 2)]));
    let r = mtree(&["stats", "--input", s(&tri)]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.contains("genus=1\n") && r.stdout.contains("is_cactus=true\n"));
    assert!(!r.stdout.contains("mode_forced"));

    let path = write(&dir, "path.json", &graph_json(&["3", "1", "2"], &[(0, 1), (1, 2)]));
    let r = mtree(&["stats", "--input", s(&path)]);
    assert_eq!(
        r.stdout,
        "n=3\nm=2\ncomponents=1\ngenus=0\nrelative_maxima=2\nis_cactus=true\nis_tree=true\nmode_forced=2\n"
    );

    let forest = write(&dir, "forest.json", &graph_json(&["1", "2", "3", "4"], &[(0, 1), (2, 3)]));
    let r = mtree(&["stats", "--input", s(&forest)]);
    assert!(r.stdout.contains("components=2\n") && r.stdout.contains("genus=0\n"));
}

#[test]
fn generation_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let mut files = Vec::new();
    for run_id in 0..2 {
        let g = dir.path().join(format!("g{run_id}.json"));
        let c = dir.path().join(format!("c{run_id}.json"));
        let r = mtree(&["gen", "--kind", "sc1", "--seed", "7", "--output", s(&g), "--sidecar", s(&c)]);
        assert_eq!(r.code, EXIT_OK);
        files.push((fs::read(&g).unwrap(), fs::read(&c).unwrap()));
    }
    assert_eq!(files[0], files[1]);
    let sidecar: serde_json::Value = serde_json::from_slice(&files[0].1).unwrap();
    assert_eq!(sidecar["kind"], "sc1");
    assert!(sidecar["optimum"].as_u64().unwrap() >= 1);
}

#[test]
fn planted_sidecar_has_k_trees() {
    let dir = TempDir::new().unwrap();
    let (g, d) = (dir.path().join("g.json"), dir.path().join("d.json"));
    let r = mtree(&["gen", "--kind", "planted", "--k", "3", "--output", s(&g), "--sidecar", s(&d)]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(parse_decomposition(&fs::read_to_string(&d).unwrap()).unwrap().len(), 3);
    let r = mtree(&["validate", "--graph", s(&g), "--decomposition", s(&d)]);
    assert_eq!(r.code, EXIT_OK);
}

#[test]
fn generated_cacti_are_cacti() {
    let dir = TempDir::new().unwrap();
    for seed in 0..5 {
        let g = dir.path().join(format!("c{seed}.json"));
        let seed = seed.to_string();
        let size = "10";
        assert_eq!(mtree(&["gen", "--kind", "cactus", "--seed", &seed, "--size", size, "--output", s(&g)]).code, 0);
        let r = mtree(&["stats", "--input", s(&g)]);
        assert!(r.stdout.contains("is_cactus=true\n"), "{}", r.stdout);
    }
}

#[test]
fn generated_vc_sidecar_matches_oracle() {
    let dir = TempDir::new().unwrap();
    let (g, c) = (dir.path().join("g.json"), dir.path().join("c.json"));
    let r = mtree(&["gen", "--kind", "vc", "--seed", "3", "--size", "5", "--output", s(&g), "--sidecar", s(&c)]);
    assert_eq!(r.code, EXIT_OK);
    let sidecar: serde_json::Value = serde_json::from_str(&fs::read_to_string(&c).unwrap()).unwrap();
    let r = mtree(&["decompose", "--algo", "exact", "--variant", "sm", "--input", s(&g)]);
    assert_eq!(r.code, EXIT_OK);
    let k = format!("k={} ", sidecar["optimum"]);
    assert!(r.stdout.starts_with(&k), "{} vs {}", r.stdout, k);
}

#[test]
fn dot_export() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "path.json", &graph_json(&["3", "1", "2"], &[(0, 1), (1, 2)]));
    let r = mtree(&["export-dot", "--graph", s(&path)]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.starts_with("digraph"));
    assert_eq!(r.stdout.matches("label=\"").count(), 3);
    assert_eq!(r.stdout.matches("dir=none").count(), 2);
    assert!(r.stdout.contains("0 [label=\"0:3\""));

    let d = dir.path().join("d.json");
    mtree(&["decompose", "--algo", "tree", "--input", s(&path), "--output", s(&d)]);
    let out = dir.path().join("g.dot");
    let r = mtree(&["export-dot", "--graph", s(&path), "--decomposition", s(&d), "--output", s(&out)]);
    assert_eq!(r.code, EXIT_OK);
    let dot = fs::read_to_string(&out).unwrap();
    assert!(dot.contains("class=\"tree0\"") && dot.contains("class=\"tree1\""));
    assert!(!dot.contains("class=\"tree2\""));
    assert!(dot.contains("style=bold"));

    let empty = write(&dir, "empty.json", &graph_json(&[], &[]));
    let r = mtree(&["export-dot", "--graph", s(&empty)]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.stdout, "digraph density {\n  node [shape=circle];\n}\n");
}
