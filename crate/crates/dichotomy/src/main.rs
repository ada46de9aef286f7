use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use dichotomy::formats::{CentersJson, EmbeddingJson, GraphJson, GridMapJson};
use dichotomy::parallel::{realizable_fraction_parallel, solve_parallel};
use dichotomy::repro;
use dichotomy::svg::{render_arrangement, render_embedding, RenderOptions};
use dichotomy_core::arrangement::UnitDiskFamily;
use dichotomy_core::bounds::{certify, Certificate, DimensionBounds};
use dichotomy_core::construct::{
    realize_auto, realize_caterpillar_long, realize_degenerate, realize_grid_short, realize_k3m, realize_k4m,
    realize_outerplanar_short, AutoOptions, ConstructError,
};
use dichotomy_core::graph::{counterexample, Counterexample};
use dichotomy_core::solver::{SolveStatus, SolverParams};
use dichotomy_core::{verify, DichotomousGraph, Embedding, Space};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "dichotomy", version, about = "Realize, verify and bound dichotomous ordinal graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Auto,
    K3m,
    K4m,
    Outerplanar,
    Grid,
    Caterpillar,
    Degenerate,
    Solver,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    Euclidean,
    Sphere,
}

#[derive(clap::Args, Clone, Copy)]
struct SolverArgs {
    #[arg(long, default_value_t = 50)]
    restarts: usize,
    #[arg(long, default_value_t = 0.05)]
    gamma: f64,
    #[arg(long, default_value_t = 2000)]
    max_iters: usize,
}

impl SolverArgs {
    fn params(self, dim: usize, seed: u64) -> SolverParams {
        let mut p = SolverParams::new(dim);
        p.restarts = self.restarts;
        p.gamma = self.gamma;
        p.max_iters = self.max_iters;
        p.seed = seed;
        p
    }
}

#[derive(Subcommand)]
enum Command {
    /// Construct an embedding; writes embedding JSON.
    Realize {
        /// Graph JSON; standard input when omitted or `-`.
        graph: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
        algorithm: Algorithm,
        /// Dimension of the target space (`R^D` or `S^D`).
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = SpaceArg::Euclidean)]
        space: SpaceArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Grid map JSON, `{"cells": [[i, j], ..]}` with 1-based indices.
        #[arg(long)]
        grid_map: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        unit_circles: bool,
        /// Output file; standard output when omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Check an embedding against a graph.
    Verify { graph: PathBuf, embedding: PathBuf },
    /// Run the numerical solver.
    Solve {
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Degeneracy, counting bounds and certificates.
    Bounds {
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
    /// Realized subsets of a unit-disk family.
    Arrangement {
        /// Centers JSON, `{"centers": [[x, y], ..]}`.
        centers: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Print a canonical non-realizable graph.
    Counterexample {
        /// k47, k55, three_deg_plane, euclidean_witness or sphere_witness.
        name: String,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Estimate the fraction of realizable edge partitions.
    Fraction {
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Run the acceptance checks and print a pass/fail table.
    Repro,
}

/// Failure that is reported as JSON on stderr with exit code 1.
struct DomainError {
    kind: &'static str,
    message: String,
    extra: Value,
}

impl DomainError {
    fn new(kind: &'static str, message: impl Into<String>) -> DomainError {
        DomainError { kind, message: message.into(), extra: Value::Null }
    }
}

impl From<anyhow::Error> for DomainError {
    fn from(e: anyhow::Error) -> DomainError {
        DomainError::new("input", format!("{e:#}"))
    }
}

impl From<ConstructError> for DomainError {
    fn from(e: ConstructError) -> DomainError {
        let kind = match e {
            ConstructError::NoMethodSucceeded(_) => "NoMethodSucceeded",
            ConstructError::NotApplicable(_) => "NotApplicable",
            _ => "ConstructionFailed",
        };
        DomainError::new(kind, e.to_string())
    }
}

fn read_source(path: Option<&Path>) -> anyhow::Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

fn read_graph(path: Option<&Path>) -> Result<DichotomousGraph, DomainError> {
    let text = read_source(path)?;
    let parsed: GraphJson = serde_json::from_str(&text).map_err(|e| DomainError::new("ParseError", e.to_string()))?;
    parsed.to_graph().map_err(|e| DomainError::new("InvalidGraph", e.to_string()))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), DomainError> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn space_of(space: SpaceArg, dim: usize) -> Space {
    match space {
        SpaceArg::Euclidean => Space::Euclidean(dim),
        SpaceArg::Sphere => Space::Sphere(dim),
    }
}

fn realize(
    g: &DichotomousGraph,
    algorithm: Algorithm,
    target: Space,
    seed: u64,
    grid_map: Option<Vec<(usize, usize)>>,
    solver: SolverArgs,
) -> Result<Embedding, DomainError> {
    let euclid_only = |name: &str| -> Result<(), DomainError> {
        match target {
            Space::Euclidean(2) => Ok(()),
            _ => Err(DomainError::new("NotApplicable", format!("{name} builds planar embeddings; use --dim 2 --space euclidean"))),
        }
    };
    let emb = match algorithm {
        Algorithm::Auto => {
            let opts = AutoOptions { target: Some(target), grid_map, seed, solver: solver.params(target.ambient_dim(), seed) };
            let out = realize_auto(g, &opts)?;
            log::info!("methods per component: {:?}", out.methods.iter().map(|m| m.name()).collect::<Vec<_>>());
            out.embedding
        }
        Algorithm::K3m => {
            euclid_only("k3m")?;
            realize_k3m(g)?
        }
        Algorithm::K4m => {
            euclid_only("k4m")?;
            realize_k4m(g)?
        }
        Algorithm::Outerplanar => {
            euclid_only("outerplanar")?;
            realize_outerplanar_short(g)?
        }
        Algorithm::Grid => {
            euclid_only("grid")?;
            let cells = grid_map.ok_or_else(|| DomainError::new("MissingGridMap", "grid needs --grid-map"))?;
            realize_grid_short(g, &cells)?
        }
        Algorithm::Caterpillar => {
            let r = realize_caterpillar_long(g)?;
            match target {
                Space::Euclidean(2) => r.planar,
                Space::Sphere(2) => r.sphere,
                _ => return Err(DomainError::new("NotApplicable", "caterpillar targets R^2 or S^2")),
            }
        }
        Algorithm::Degenerate => match target {
            Space::Euclidean(d) => realize_degenerate(g, d, seed)?.euclidean,
            Space::Sphere(d) => realize_degenerate(g, d + 1, seed)?.sphere,
        },
        Algorithm::Solver => {
            let Space::Euclidean(d) = target else {
                return Err(DomainError::new("NotApplicable", "the solver works in Euclidean space"));
            };
            let out = solve_parallel(g, &solver.params(d, seed));
            match out.status {
                SolveStatus::Found(e) => e,
                SolveStatus::Exhausted { best_objective, .. } => {
                    let mut err = DomainError::new(
                        "NoRealizationFound",
                        format!("no realization found after {} restarts", out.log.len()),
                    );
                    err.extra = json!({ "best_objective": best_objective });
                    return Err(err);
                }
            }
        }
    };
    Ok(emb)
}

fn threshold_of(g: &DichotomousGraph, emb: &Embedding) -> Result<f64, DomainError> {
    let r = verify(g, emb).map_err(|e| DomainError::new("GeometryError", e.to_string()))?;
    r.threshold.filter(|_| r.valid).ok_or_else(|| DomainError::new("VerificationFailed", format!("gap {}", r.gap)))
}

fn bounds_json(b: DimensionBounds) -> Value {
    json!({ "lo": b.lo, "hi": b.hi, "trivial": b.trivial, "note": "bounds, not values" })
}

fn run(cli: Cli) -> Result<(), DomainError> {
    match cli.command {
        Command::Realize { graph, algorithm, dim, space, seed, grid_map, svg, unit_circles, out, solver } => {
            let g = read_graph(graph.as_deref())?;
            let cells = match grid_map {
                Some(p) => {
                    let m: GridMapJson = serde_json::from_str(&read_source(Some(&p))?)
                        .map_err(|e| DomainError::new("ParseError", e.to_string()))?;
                    Some(m.pairs())
                }
                None => None,
            };
            let emb = realize(&g, algorithm, space_of(space, dim), seed, cells, solver)?;
            let threshold = threshold_of(&g, &emb)?;
            if let Some(p) = svg {
                let opts = RenderOptions { show_unit_circles: unit_circles, ..RenderOptions::default() };
                let text = render_embedding(&g, &emb, threshold, &opts)
                    .map_err(|e| DomainError::new("NotPlanar", e.to_string()))?;
                fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?;
            }
            write_output(out.as_deref(), &pretty(&EmbeddingJson::from_embedding(&emb, Some(threshold))))
        }
        Command::Verify { graph, embedding } => {
            let g = read_graph(Some(&graph))?;
            let e: EmbeddingJson = serde_json::from_str(&read_source(Some(&embedding))?)
                .map_err(|e| DomainError::new("ParseError", e.to_string()))?;
            let emb = e.to_embedding().map_err(|e| DomainError::new("GeometryError", e.to_string()))?;
            let r = verify(&g, &emb).map_err(|e| DomainError::new("GeometryError", e.to_string()))?;
            let report = json!({
                "valid": r.valid,
                "gap": r.gap,
                "max_short": r.max_short,
                "min_long": if r.min_long.is_finite() { json!(r.min_long) } else { Value::Null },
                "threshold": r.threshold,
                "per_edge_length": r.per_edge_length,
            });
            println!("{}", pretty(&report));
            if r.valid {
                Ok(())
            } else {
                let mut err = DomainError::new("InvalidEmbedding", format!("gap {} is not positive", r.gap));
                err.extra = json!({ "gap": r.gap });
                Err(err)
            }
        }
        Command::Solve { graph, dim, seed, solver } => {
            let g = read_graph(graph.as_deref())?;
            let params = solver.params(dim, seed);
            let out = solve_parallel(&g, &params);
            let (status, objective) = match &out.status {
                SolveStatus::Found(_) => ("found", 0.0),
                SolveStatus::Exhausted { best_objective, .. } => ("no realization found", *best_objective),
            };
            let report = json!({
                "status": status,
                "best_objective": objective,
                "embedding": EmbeddingJson::from_embedding(out.embedding(), None),
                "restarts": out.log.iter().map(|r| json!({
                    "index": r.index, "objective": r.objective, "iterations": r.iterations, "found": r.found,
                })).collect::<Vec<_>>(),
            });
            println!("{}", pretty(&report));
            Ok(())
        }
        Command::Bounds { graph, dim } => {
            if dim == 0 {
                return Err(DomainError::new("InvalidDimension", "dimension must be positive"));
            }
            let g = read_graph(graph.as_deref())?;
            let r = certify(&g, dim);
            let certificate = match r.certificate {
                Certificate::NotPandichotomousDense => "NotPandichotomousDense",
                Certificate::PandichotomousByDegeneracy => "PandichotomousByDegeneracy",
                Certificate::Inconclusive => "Inconclusive",
            };
            let report = json!({
                "n": r.n, "m": r.m, "d": r.d, "degeneracy": r.degeneracy,
                "warren_bound": r.warren_bound.to_string(),
                "c": r.c, "mu": r.mu,
                "certificate": certificate,
                "ped_interval": bounds_json(r.ped),
                "psd_interval": bounds_json(r.psd),
            });
            println!("{}", pretty(&report));
            Ok(())
        }
        Command::Arrangement { centers, svg } => {
            let c: CentersJson = serde_json::from_str(&read_source(Some(&centers))?)
                .map_err(|e| DomainError::new("ParseError", e.to_string()))?;
            let family = UnitDiskFamily::new(c.centers).map_err(|e| DomainError::new("ArrangementError", e.to_string()))?;
            let summary = family.summary().map_err(|e| DomainError::new("ArrangementError", e.to_string()))?;
            let n = family.len();
            let mut labels: Vec<String> = summary.labels.iter().map(|s| s.to_bitstring(n)).collect();
            labels.sort();
            if let Some(p) = svg {
                fs::write(&p, render_arrangement(&family, &summary, &RenderOptions::default()))
                    .with_context(|| format!("writing {}", p.display()))?;
            }
            println!("{}", pretty(&json!({ "count": labels.len(), "labels": labels })));
            Ok(())
        }
        Command::Counterexample { name, dim } => {
            let which = Counterexample::parse(&name, dim).map_err(|e| DomainError::new("UnknownCounterexample", e.to_string()))?;
            let g = counterexample(which).map_err(|e| DomainError::new("UnknownCounterexample", e.to_string()))?;
            println!("{}", pretty(&GraphJson::from_graph(&g)));
            Ok(())
        }
        Command::Fraction { graph, dim, samples, seed, solver } => {
            if samples == 0 {
                return Err(DomainError::new("InvalidSamples", "at least one sample is required"));
            }
            let g = read_graph(graph.as_deref())?;
            let est = realizable_fraction_parallel(&g, samples, &solver.params(dim, seed));
            let report = json!({
                "samples": est.samples,
                "found": est.found,
                "no_realization_found": est.exhausted,
                "fraction_lower_bound": est.lower_bound(),
                "note": "lower bound on the realizable fraction; unsolved samples are not shown to be non-realizable",
            });
            println!("{}", pretty(&report));
            Ok(())
        }
        Command::Repro => {
            let start = Instant::now();
            let mut all = true;
            for id in 1..=11 {
                let c = repro::run(id);
                all &= c.passed;
                println!("{c}");
            }
            let secs = start.elapsed().as_secs_f64();
            let e2e = all && secs < 300.0;
            println!(
                "[{}] 12. end-to-end repro ({secs:.1} s): {}",
                if e2e { "PASS" } else { "FAIL" },
                if all { "criteria 1-11 passed" } else { "some criteria failed" }
            );
            if e2e {
                Ok(())
            } else {
                Err(DomainError::new("ReproFailed", "at least one acceptance check failed"))
            }
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("DICHOTOMY_LOG")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let mut v = json!({ "error": e.kind, "message": e.message });
            if let (Value::Object(m), Value::Object(extra)) = (&mut v, e.extra) {
                m.extend(extra);
            }
            eprintln!("{v}");
            ExitCode::from(1)
        }
    }
}
