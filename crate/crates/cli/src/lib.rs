//! Command-line front end: decomposing, validating, inspecting, generating
//! and drawing density graphs.
//!
//! [`run`] executes one invocation and returns the process exit code:
//! 0 on success, 1 for unusable arguments or input files, 2 when a
//! decomposition fails validation, 3 when the input violates an algorithm's
//! precondition or the exact oracle runs out of budget.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use mtree_core::approx::{cactus_sm_decompose, naive_decompose, spanning_tree_decompose};
use mtree_core::dot::to_dot;
use mtree_core::exact::exact_min;
use mtree_core::format::{
    decomposition_to_json, graph_to_json, parse_decomposition, parse_graph, CoverSidecar,
    GraphFile,
};
use mtree_core::reductions::{
    brute_force_set_cover, brute_force_vertex_cover, gen_planted, random_cactus,
    random_restricted_vc, random_sc1, random_tree, sc1_to_density_graph, vc_to_density_graph,
    PlantedShape, GENERATOR_ALGORITHM,
};
use mtree_core::sweep::{decompose_tree, mode_forced_nodes};
use mtree_core::{
    components, genus, is_cactus, is_forest, is_tree, relative_maxima, validate_decomposition,
    Decomposition, DensityGraph, Error, Variant,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "mtree", version, about = "Monotone tree decompositions of density graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose a graph and write the trees.
    Decompose {
        #[arg(long, value_enum)]
        algo: Algo,
        /// Defaults to `sm` for cactus-sm and `m` otherwise.
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[arg(long)]
        input: PathBuf,
        /// Where to write the decomposition; printed after the summary if
        /// omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a decomposition against a graph.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        decomposition: PathBuf,
        /// Overrides the variant stored in the decomposition file.
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
    },
    /// Print structural statistics, one `key=value` per line.
    Stats {
        #[arg(long)]
        input: PathBuf,
    },
    /// Generate a seeded random instance.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        size: usize,
        /// Number of planted trees.
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Host family for planted instances.
        #[arg(long, value_enum, default_value_t = ShapeArg::General)]
        shape: ShapeArg,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Planted decomposition, or the brute-force cover optimum for sc1/vc.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Render a graph, optionally with a decomposition, as Graphviz DOT.
    ExportDot {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        decomposition: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Tree,
    Naive,
    Spanning2g,
    CactusSm,
    Exact,
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    M,
    Cm,
    Sm,
    Fm,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::M => Variant::M,
            VariantArg::Cm => Variant::CM,
            VariantArg::Sm => Variant::SM,
            VariantArg::Fm => Variant::FM,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Tree,
    Cactus,
    Planted,
    Sc1,
    Vc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShapeArg {
    Tree,
    Cactus,
    General,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn precondition(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_PRECONDITION,
            message: message.into(),
        }
    }
}

/// Library errors raised by an algorithm on well-formed input are
/// precondition failures; everything else is bad input.
fn algorithm_error(e: Error) -> Failure {
    match e {
        Error::NotAForest | Error::NotACactus | Error::TooLarge(_) => {
            Failure::precondition(e.to_string())
        }
        other => Failure::usage(other.to_string()),
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_or_print(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::usage(e.to_string())),
    }
}

fn load_graph(path: &Path) -> Result<DensityGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_decomposition(path: &Path) -> Result<Decomposition, Failure> {
    parse_decomposition(&read(path)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Decompose {
            algo,
            variant,
            input,
            output,
        } => decompose(algo, variant, &input, output.as_deref(), out),
        Command::Validate {
            graph,
            decomposition,
            variant,
        } => {
            let g = load_graph(&graph)?;
            let mut d = load_decomposition(&decomposition)?;
            if let Some(v) = variant {
                d = d.relabel(v.into());
            }
            let report = validate_decomposition(&g, &d).map_err(|e| Failure::usage(e.to_string()))?;
            for v in &report.violations {
                let _ = writeln!(out, "VIOLATION {v}");
            }
            if report.ok() {
                let _ = writeln!(out, "valid variant={} k={}", d.variant, d.len());
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_INVALID)
            }
        }
        Command::Stats { input } => {
            let g = load_graph(&input)?;
            let _ = write!(out, "{}", stats(&g));
            Ok(EXIT_OK)
        }
        Command::Gen {
            kind,
            seed,
            size,
            k,
            shape,
            output,
            sidecar,
        } => generate(kind, seed, size, k, shape, output.as_deref(), sidecar.as_deref(), out),
        Command::ExportDot {
            graph,
            decomposition,
            output,
        } => {
            let g = load_graph(&graph)?;
            let d = decomposition.as_deref().map(load_decomposition).transpose()?;
            write_or_print(output.as_deref(), &to_dot(&g, d.as_ref()), out)?;
            Ok(EXIT_OK)
        }
    }
}

/// Variants each algorithm's output is guaranteed to satisfy.
fn supported(algo: Algo, variant: Variant) -> bool {
    match algo {
        Algo::Tree | Algo::Spanning2g => matches!(variant, Variant::M | Variant::SM),
        Algo::Naive => matches!(variant, Variant::M | Variant::SM | Variant::FM),
        Algo::CactusSm => variant == Variant::SM,
        Algo::Exact => true,
    }
}

fn decompose(
    algo: Algo,
    variant: Option<VariantArg>,
    input: &Path,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let variant: Variant = match (variant, algo) {
        (Some(v), _) => v.into(),
        (None, Algo::CactusSm) => Variant::SM,
        (None, _) => Variant::M,
    };
    if !supported(algo, variant) {
        return Err(Failure::usage(format!(
            "algorithm {algo} does not produce {variant} tree sets"
        )));
    }
    let g = load_graph(input)?;
    let d = match algo {
        Algo::Tree => decompose_tree(&g).map_err(algorithm_error)?,
        Algo::Naive => naive_decompose(&g),
        Algo::Spanning2g => spanning_tree_decompose(&g),
        Algo::CactusSm => cactus_sm_decompose(&g).map_err(algorithm_error)?,
        Algo::Exact => exact_min(&g, variant).map_err(algorithm_error)?,
    }
    .relabel(variant);
    let report = validate_decomposition(&g, &d).map_err(|e| Failure::usage(e.to_string()))?;
    let _ = writeln!(out, "k={} algo={algo} valid={}", d.len(), report.ok());
    if !report.ok() {
        for v in &report.violations {
            let _ = writeln!(out, "VIOLATION {v}");
        }
        return Ok(EXIT_INVALID);
    }
    write_or_print(output, &decomposition_to_json(&d), out)?;
    Ok(EXIT_OK)
}

/// `key=value` lines in a fixed order.
pub fn stats(g: &DensityGraph) -> String {
    let mut lines = vec![
        ("n", g.vertex_count().to_string()),
        ("m", g.edge_count().to_string()),
        ("components", components(g).len().to_string()),
        ("genus", genus(g).to_string()),
        ("relative_maxima", relative_maxima(g).len().to_string()),
        ("is_cactus", is_cactus(g).to_string()),
        ("is_tree", is_tree(g).to_string()),
    ];
    if is_forest(g) {
        let forced = mode_forced_nodes(g).expect("forest checked");
        lines.push(("mode_forced", forced.len().to_string()));
    }
    lines.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
}

#[allow(clippy::too_many_arguments)]
fn generate(
    kind: GenKind,
    seed: u64,
    size: usize,
    k: usize,
    shape: ShapeArg,
    output: Option<&Path>,
    sidecar: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let name = kind.to_possible_value().expect("no skipped variants");
    let (g, side) = match kind {
        GenKind::Tree => (random_tree(seed, size), None),
        GenKind::Cactus => (random_cactus(seed, size, (size / 3).max(1)), None),
        GenKind::Planted => {
            let shape = match shape {
                ShapeArg::Tree => PlantedShape::Tree,
                ShapeArg::Cactus => PlantedShape::Cactus,
                ShapeArg::General => PlantedShape::General,
            };
            let (g, d) = gen_planted(seed, size, k, shape);
            (g, Some(decomposition_to_json(&d)))
        }
        GenKind::Sc1 => {
            let sc = random_sc1(seed, size, size + 1);
            let g = sc1_to_density_graph(&sc).map_err(|e| Failure::usage(e.to_string()))?;
            let sidecar = CoverSidecar {
                kind: "sc1".into(),
                optimum: brute_force_set_cover(&sc).map_err(algorithm_error)?,
                instance: sc.sets.iter().map(|s| s.iter().copied().collect()).collect(),
            };
            (g, Some(to_json(&sidecar)))
        }
        GenKind::Vc => {
            let vc = random_restricted_vc(seed, size);
            let g = vc_to_density_graph(&vc).map_err(|e| Failure::usage(e.to_string()))?;
            let sidecar = CoverSidecar {
                kind: "vc".into(),
                optimum: brute_force_vertex_cover(&vc).map_err(algorithm_error)?,
                instance: vc.edges.iter().map(|&(u, v)| vec![u, v]).collect(),
            };
            (g, Some(to_json(&sidecar)))
        }
    };
    let file = GraphFile::from_graph(&g)
        .with_meta("generator", name.get_name())
        .with_meta("seed", seed)
        .with_meta("size", size)
        .with_meta("rng", GENERATOR_ALGORITHM);
    let file = if kind == GenKind::Planted {
        file.with_meta("k", k)
    } else {
        file
    };
    write_or_print(output, &graph_to_json(&file), out)?;
    if let (Some(path), Some(text)) = (sidecar, side) {
        write_or_print(Some(path), &text, out)?;
    }
    Ok(EXIT_OK)
}

fn to_json(sidecar: &CoverSidecar) -> String {
    serde_json::to_string_pretty(sidecar).expect("sidecars always serialize")
}
