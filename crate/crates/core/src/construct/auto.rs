use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{
    combine_components, realize_caterpillar_long, realize_degenerate, realize_grid_short, realize_k3m, realize_k4m,
    realize_outerplanar_short, verified_unit_threshold, ConstructError,
};
use crate::geometry::{Embedding, Point, Space};
use crate::graph::{short_components, DichotomousGraph};
use crate::solver::{solve, SolveStatus, SolverParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Grid,
    Caterpillar,
    Outerplanar,
    K3m,
    K4m,
    Degenerate,
    Solver,
    /// Isolated vertex of the short subgraph; placed at the origin.
    SingleVertex,
}

impl Method {
    pub const ALL: [Method; 7] =
        [Method::Grid, Method::Caterpillar, Method::Outerplanar, Method::K3m, Method::K4m, Method::Degenerate, Method::Solver];

    pub fn name(self) -> &'static str {
        match self {
            Method::Grid => "grid",
            Method::Caterpillar => "caterpillar",
            Method::Outerplanar => "outerplanar",
            Method::K3m => "k3m",
            Method::K4m => "k4m",
            Method::Degenerate => "degenerate",
            Method::Solver => "solver",
            Method::SingleVertex => "single-vertex",
        }
    }

    /// Parses a constructor name; `single-vertex` is not selectable.
    pub fn parse(s: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MethodFailure {
    /// Index into the short components, or 0 for whole-graph attempts.
    pub component: usize,
    pub method: Method,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AutoOptions {
    /// Defaults to the plane.
    pub target: Option<Space>,
    /// 1-based grid cell of every vertex.
    pub grid_map: Option<Vec<(usize, usize)>>,
    pub seed: u64,
    /// `dim` and `seed` are overridden from the target and `seed`.
    pub solver: SolverParams,
}

impl Default for AutoOptions {
    fn default() -> AutoOptions {
        AutoOptions { target: None, grid_map: None, seed: 0, solver: SolverParams::new(2) }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AutoOutcome {
    pub embedding: Embedding,
    /// Successful method per component; a single entry for sphere targets.
    pub methods: Vec<Method>,
    /// Attempts that failed before a method succeeded.
    pub failures: Vec<MethodFailure>,
}

/// Tries each applicable constructor in turn and returns the first verified
/// embedding.
///
/// Euclidean targets are handled per short component, and the components are
/// then laid out far apart. Sphere targets are attempted on the whole graph
/// with the caterpillar construction (on `S^2` only) and the degenerate
/// construction.
pub fn realize_auto(g: &DichotomousGraph, options: &AutoOptions) -> Result<AutoOutcome, ConstructError> {
    let target = options.target.unwrap_or(Space::Euclidean(2));
    match target {
        Space::Euclidean(d) => euclidean(g, d, options),
        Space::Sphere(d) => sphere(g, d, options.seed),
    }
}

fn sphere(g: &DichotomousGraph, d: usize, seed: u64) -> Result<AutoOutcome, ConstructError> {
    let mut failures = Vec::new();
    if d == 2 {
        match realize_caterpillar_long(g).and_then(|r| verified_unit_threshold(g, r.sphere, "caterpillar")) {
            Ok(embedding) => return Ok(AutoOutcome { embedding, methods: vec![Method::Caterpillar], failures }),
            Err(e) => failures.push(MethodFailure { component: 0, method: Method::Caterpillar, reason: e.to_string() }),
        }
    }
    match realize_degenerate(g, d + 1, seed).and_then(|r| verified_unit_threshold(g, r.sphere, "degenerate")) {
        Ok(embedding) => Ok(AutoOutcome { embedding, methods: vec![Method::Degenerate], failures }),
        Err(e) => {
            failures.push(MethodFailure { component: 0, method: Method::Degenerate, reason: e.to_string() });
            Err(ConstructError::NoMethodSucceeded(failures))
        }
    }
}

fn euclidean(g: &DichotomousGraph, d: usize, options: &AutoOptions) -> Result<AutoOutcome, ConstructError> {
    if d == 0 {
        return Err(ConstructError::DimensionTooSmall(0));
    }
    if let Some(map) = &options.grid_map {
        if map.len() != g.n() {
            return Err(ConstructError::BadGridMap { have: map.len(), need: g.n() });
        }
    }
    let mut parts = Vec::new();
    let mut methods = Vec::new();
    let mut failures = Vec::new();
    for (ci, comp) in short_components(g).into_iter().enumerate() {
        let cells = options.grid_map.as_ref().map(|m| comp.vertices.iter().map(|v| m[v.0]).collect::<Vec<_>>());
        let mut done = None;
        if comp.vertices.len() == 1 {
            done = Some((Method::SingleVertex, Embedding::new(Space::Euclidean(d), vec![Point(vec![0.0; d])])?));
        }
        for method in Method::ALL {
            if done.is_some() {
                break;
            }
            match attempt(method, &comp.graph, d, cells.as_deref(), options) {
                None => {}
                Some(Ok(emb)) => {
                    done = Some((method, emb));
                    break;
                }
                Some(Err(reason)) => failures.push(MethodFailure { component: ci, method, reason }),
            }
        }
        match done {
            Some((method, emb)) => {
                methods.push(method);
                parts.push((comp.vertices, emb));
            }
            None => return Err(ConstructError::NoMethodSucceeded(failures)),
        }
    }
    let embedding = verified_unit_threshold(g, combine_components(g.n(), d, &parts), "auto")?;
    Ok(AutoOutcome { embedding, methods, failures })
}

/// `None` when the method does not apply to this input at all.
fn attempt(
    method: Method,
    g: &DichotomousGraph,
    d: usize,
    cells: Option<&[(usize, usize)]>,
    options: &AutoOptions,
) -> Option<Result<Embedding, String>> {
    let planar_only = matches!(method, Method::Grid | Method::Caterpillar | Method::Outerplanar | Method::K3m | Method::K4m);
    if planar_only && d < 2 || method == Method::Degenerate && d < 2 {
        return None;
    }
    let result = match method {
        Method::Grid => realize_grid_short(g, cells?),
        Method::Caterpillar => realize_caterpillar_long(g).map(|r| r.planar),
        Method::Outerplanar => realize_outerplanar_short(g),
        Method::K3m => realize_k3m(g),
        Method::K4m => realize_k4m(g),
        Method::Degenerate => realize_degenerate(g, d, options.seed).map(|r| r.euclidean),
        Method::SingleVertex => return None,
        Method::Solver => {
            let mut params = options.solver;
            params.dim = d;
            params.seed = options.seed;
            let out = solve(g, &params);
            match out.status {
                SolveStatus::Found(e) => Ok(e),
                SolveStatus::Exhausted { best_objective, .. } => {
                    return Some(Err(format!(
                        "no realization found after {} restarts (best objective {best_objective:e})",
                        out.log.len()
                    )))
                }
            }
        }
    };
    Some(result.and_then(|e| verified_unit_threshold(g, pad(e, d), method.name())).map_err(|e| e.to_string()))
}

fn pad(e: Embedding, d: usize) -> Embedding {
    if e.space() == Space::Euclidean(d) {
        return e;
    }
    let pts = e
        .into_coords()
        .into_iter()
        .map(|mut p: Point| {
            p.0.resize(d, 0.0);
            p
        })
        .collect();
    Embedding::new(Space::Euclidean(d), pts).expect("padded points share one dimension")
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{complete_bipartite, random_grid_instance};
    use crate::graph::{counterexample, Counterexample};
    use crate::Subset;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn k3_12_routes_to_template() {
        let subsets: Vec<Subset> = (0..12).map(|i| Subset((i % 7 + 1) as u64)).collect();
        let g = complete_bipartite(3, &subsets);
        let out = realize_auto(&g, &AutoOptions::default()).unwrap();
        assert_eq!(out.methods, [Method::K3m]);
    }

    #[test]
    fn grid_map_is_used() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (g, cells) = random_grid_instance(4, 0.8, 1.0, 0.5, &mut rng);
        let opts = AutoOptions { grid_map: Some(cells), ..AutoOptions::default() };
        let out = realize_auto(&g, &opts).unwrap();
        assert!(crate::verify(&g, &out.embedding).unwrap().valid);
        assert!(out.methods.contains(&Method::Grid));
    }

    #[test]
    fn k47_fails_in_the_plane() {
        let g = counterexample(Counterexample::K47).unwrap();
        match realize_auto(&g, &AutoOptions::default()) {
            Err(ConstructError::NoMethodSucceeded(f)) => assert!(f.iter().any(|x| x.method == Method::Solver)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
