//! Penalty-based numerical realizer with random restarts.
//!
//! A restart that exhausts its iteration budget proves nothing: an
//! [`SolveStatus::Exhausted`] outcome means "no realization found", never
//! "non-realizable".

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::geometry::{verify, Embedding, Point, Space};
use crate::graph::{generate::random_partition, DichotomousGraph, EdgeKind};

/// Relative inflation of the margin used during optimization, so that a
/// numerically converged run clears the requested margin.
const MARGIN_INFLATION: f64 = 1e-3;
/// Allowed violation of the requested margin when declaring success.
pub const MARGIN_SLACK: f64 = 5e-10;
const ARMIJO: f64 = 1e-4;
const MIN_STEP: f64 = 1e-18;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverParams {
    pub dim: usize,
    /// Margin: short edges aim below `1 - gamma`, long edges above `1 + gamma`.
    pub gamma: f64,
    pub restarts: usize,
    pub max_iters: usize,
    /// First trial step of the line search; halved on each rejection.
    pub initial_step: f64,
    pub seed: u64,
    pub tolerance: f64,
    /// Standard deviation of the Gaussian initial coordinates.
    pub init_scale: f64,
}

impl SolverParams {
    pub fn new(dim: usize) -> SolverParams {
        SolverParams {
            dim,
            gamma: 0.05,
            restarts: 50,
            max_iters: 2000,
            initial_step: 0.1,
            seed: 0,
            tolerance: 1e-12,
            init_scale: 2.0,
        }
    }

    fn check(&self) {
        assert!(self.dim >= 1, "solver dimension must be positive");
        assert!(self.gamma > 0.0 && self.gamma < 0.5, "margin must lie in (0, 0.5)");
        assert!(self.restarts >= 1, "at least one restart is required");
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RestartRecord {
    pub index: usize,
    pub objective: f64,
    pub iterations: usize,
    pub found: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SolveStatus {
    Found(Embedding),
    Exhausted { best_objective: f64, best: Embedding },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    /// Every restart that was run, by index. Serial solving stops at the
    /// first success.
    pub log: Vec<RestartRecord>,
}

impl SolveOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self.status, SolveStatus::Found(_))
    }

    pub fn embedding(&self) -> &Embedding {
        match &self.status {
            SolveStatus::Found(e) | SolveStatus::Exhausted { best: e, .. } => e,
        }
    }
}

fn edge_length(x: &[f64], dim: usize, u: usize, v: usize) -> f64 {
    let (a, b) = (&x[u * dim..(u + 1) * dim], &x[v * dim..(v + 1) * dim]);
    libm::sqrt(a.iter().zip(b).map(|(p, q)| (p - q) * (p - q)).sum())
}

/// Squared hinge on each edge; the residual is positive when the edge is on
/// the wrong side of its margin.
fn residual(kind: EdgeKind, len: f64, gamma: f64) -> f64 {
    match kind {
        EdgeKind::Short => (len - (1.0 - gamma)).max(0.0),
        EdgeKind::Long => ((1.0 + gamma) - len).max(0.0),
    }
}

/// `coords` is row-major, `n × dim`.
pub fn penalty_objective(g: &DichotomousGraph, coords: &[f64], dim: usize, gamma: f64) -> f64 {
    g.edges()
        .iter()
        .map(|e| {
            let r = residual(e.kind, edge_length(coords, dim, e.u.0, e.v.0), gamma);
            r * r
        })
        .sum()
}

pub fn penalty_gradient(g: &DichotomousGraph, coords: &[f64], dim: usize, gamma: f64) -> Vec<f64> {
    let mut grad = vec![0.0; coords.len()];
    for e in g.edges() {
        let (u, v) = (e.u.0, e.v.0);
        let len = edge_length(coords, dim, u, v);
        let r = residual(e.kind, len, gamma);
        if r == 0.0 || len == 0.0 {
            continue;
        }
        let sign = if e.kind == EdgeKind::Short { 1.0 } else { -1.0 };
        let scale = 2.0 * r * sign / len;
        for k in 0..dim {
            let diff = coords[u * dim + k] - coords[v * dim + k];
            grad[u * dim + k] += scale * diff;
            grad[v * dim + k] -= scale * diff;
        }
    }
    grad
}

/// Gradient descent with Armijo backtracking from one random start.
///
/// The generator for restart `index` is seeded with `params.seed` on stream
/// `index`, so restarts can run in any order or in parallel.
pub fn run_restart(g: &DichotomousGraph, params: &SolverParams, index: usize) -> (RestartRecord, Vec<f64>) {
    params.check();
    let dim = params.dim;
    let gamma = params.gamma * (1.0 + MARGIN_INFLATION);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(index as u64);
    let mut x: Vec<f64> =
        (0..g.n() * dim).map(|_| params.init_scale * rng.sample::<f64, _>(StandardNormal)).collect();
    let mut f = penalty_objective(g, &x, dim, gamma);
    let mut step = params.initial_step;
    let mut iterations = 0;
    while iterations < params.max_iters && f > params.tolerance {
        iterations += 1;
        let grad = penalty_gradient(g, &x, dim, gamma);
        let norm2: f64 = grad.iter().map(|c| c * c).sum();
        if norm2 == 0.0 {
            break;
        }
        let mut t = step;
        let accepted = loop {
            let trial: Vec<f64> = x.iter().zip(&grad).map(|(a, d)| a - t * d).collect();
            let ft = penalty_objective(g, &trial, dim, gamma);
            if ft <= f - ARMIJO * t * norm2 {
                break Some((trial, ft));
            }
            t /= 2.0;
            if t < MIN_STEP {
                break None;
            }
        };
        match accepted {
            Some((trial, ft)) => {
                x = trial;
                f = ft;
                step = 2.0 * t;
            }
            None => break,
        }
    }
    let found = f <= params.tolerance && meets_margin(g, &x, dim, params.gamma);
    (RestartRecord { index, objective: f, iterations, found }, x)
}

fn meets_margin(g: &DichotomousGraph, x: &[f64], dim: usize, gamma: f64) -> bool {
    g.edges().iter().all(|e| residual(e.kind, edge_length(x, dim, e.u.0, e.v.0), gamma) <= MARGIN_SLACK)
}

fn to_embedding(n: usize, dim: usize, x: &[f64]) -> Embedding {
    let pts = (0..n).map(|i| Point(x[i * dim..(i + 1) * dim].to_vec())).collect();
    Embedding::new(Space::Euclidean(dim), pts).expect("solver coordinates share one dimension")
}

/// Combines restart results into an outcome: the first success by index,
/// otherwise the lowest objective with ties going to the lower index.
/// Runs are expected in index order.
pub fn merge_restarts(g: &DichotomousGraph, dim: usize, runs: Vec<(RestartRecord, Vec<f64>)>) -> SolveOutcome {
    let mut log = Vec::with_capacity(runs.len());
    let mut best: Option<(f64, Vec<f64>)> = None;
    for (rec, x) in runs {
        log.push(rec);
        if rec.found {
            let emb = to_embedding(g.n(), dim, &x);
            if verify(g, &emb).map(|r| r.valid).unwrap_or(false) {
                return SolveOutcome { status: SolveStatus::Found(emb), log };
            }
        }
        if best.as_ref().is_none_or(|(b, _)| rec.objective < *b) {
            best = Some((rec.objective, x));
        }
    }
    let (best_objective, x) = best.unwrap_or((f64::INFINITY, vec![0.0; g.n() * dim]));
    SolveOutcome { status: SolveStatus::Exhausted { best_objective, best: to_embedding(g.n(), dim, &x) }, log }
}

/// Serial solve; stops at the first successful restart.
pub fn solve(g: &DichotomousGraph, params: &SolverParams) -> SolveOutcome {
    let mut runs = Vec::new();
    for i in 0..params.restarts {
        let run = run_restart(g, params, i);
        let found = run.0.found;
        runs.push(run);
        if found {
            break;
        }
    }
    merge_restarts(g, params.dim, runs)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FractionEstimate {
    pub samples: usize,
    pub found: usize,
    pub exhausted: usize,
}

impl FractionEstimate {
    /// Fraction of sampled partitions the solver realized. The solver is
    /// incomplete, so this is a lower bound on the true realizable fraction.
    pub fn lower_bound(&self) -> f64 {
        self.found as f64 / self.samples as f64
    }
}

/// Uniformly random short/long partitions of the edges of `g`.
pub fn sample_partitions(g: &DichotomousGraph, samples: usize, seed: u64) -> Vec<DichotomousGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).map(|_| random_partition(g, &mut rng)).collect()
}

/// Runs [`solve`] on `samples` random partitions of the edges of `g`.
/// The result is a lower bound on the realizable fraction.
pub fn realizable_fraction(g: &DichotomousGraph, samples: usize, params: &SolverParams) -> FractionEstimate {
    assert!(samples >= 1, "at least one sample is required");
    let found = sample_partitions(g, samples, params.seed)
        .iter()
        .filter(|h| solve(h, params).is_found())
        .count();
    FractionEstimate { samples, found, exhausted: samples - found }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{complete, random_tree};
    use crate::graph::Edge;

    #[test]
    fn satisfied_configuration_has_zero_objective() {
        let g = DichotomousGraph::new(2, vec![Edge::short(0, 1)]).unwrap();
        let x = [0.0, 0.0, 0.5, 0.0];
        assert_eq!(penalty_objective(&g, &x, 2, 0.1), 0.0);
        assert!(penalty_gradient(&g, &x, 2, 0.1).iter().all(|&c| c == 0.0));
    }

    #[test]
    fn long_edge_at_unit_length() {
        let g = DichotomousGraph::new(2, vec![Edge::long(0, 1)]).unwrap();
        let f = penalty_objective(&g, &[0.0, 1.0], 1, 0.1);
        assert!((f - 0.01).abs() < 1e-15);
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let g = crate::graph::generate::random_graph(8, 0.6, &mut rng);
        let x: Vec<f64> = (0..16).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let grad = penalty_gradient(&g, &x, 2, 0.05);
        for i in 0..x.len() {
            let (mut a, mut b) = (x.clone(), x.clone());
            a[i] += 1e-6;
            b[i] -= 1e-6;
            let fd = (penalty_objective(&g, &a, 2, 0.05) - penalty_objective(&g, &b, 2, 0.05)) / 2e-6;
            assert!((fd - grad[i]).abs() <= 1e-5 * fd.abs().max(1.0));
        }
    }

    fn star_k4() -> DichotomousGraph {
        DichotomousGraph::new(
            4,
            vec![Edge::short(0, 1), Edge::short(0, 2), Edge::short(0, 3), Edge::long(1, 2), Edge::long(1, 3), Edge::long(2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn star_k4_needs_two_dimensions() {
        let mut p = SolverParams::new(1);
        p.restarts = 20;
        assert!(!solve(&star_k4(), &p).is_found());
        p.dim = 2;
        let out = solve(&star_k4(), &p);
        let r = verify(&star_k4(), out.embedding()).unwrap();
        assert!(out.is_found() && r.gap >= 2.0 * p.gamma - 1e-9);
    }

    #[test]
    fn trees_are_found() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for s in 0..5 {
            let g = random_tree(20, &mut rng);
            let mut p = SolverParams::new(2);
            p.seed = s;
            assert!(solve(&g, &p).is_found());
        }
    }

    #[test]
    fn deterministic_log() {
        let g = complete(6, EdgeKind::Long);
        let mut p = SolverParams::new(1);
        p.restarts = 3;
        assert_eq!(solve(&g, &p), solve(&g, &p));
    }

    #[test]
    fn edgeless_fraction_is_one() {
        let g = DichotomousGraph::new(5, vec![]).unwrap();
        let est = realizable_fraction(&g, 4, &SolverParams::new(2));
        assert_eq!(est.lower_bound(), 1.0);
    }
}
