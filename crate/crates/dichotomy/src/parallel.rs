//! Restart-parallel solving with the same merged result as serial solving.

use dichotomy_core::solver::{merge_restarts, run_restart, sample_partitions, solve, FractionEstimate, SolveOutcome, SolverParams};
use dichotomy_core::DichotomousGraph;
use rayon::prelude::*;

/// Runs every restart in parallel and merges by restart index. The log is
/// truncated at the first success, exactly as [`solve`] would leave it.
pub fn solve_parallel(g: &DichotomousGraph, params: &SolverParams) -> SolveOutcome {
    let runs: Vec<_> = (0..params.restarts).into_par_iter().map(|i| run_restart(g, params, i)).collect();
    merge_restarts(g, params.dim, runs)
}

/// Parallel over samples; each sample is solved serially. Counts are a lower
/// bound on the realizable fraction.
pub fn realizable_fraction_parallel(g: &DichotomousGraph, samples: usize, params: &SolverParams) -> FractionEstimate {
    assert!(samples >= 1, "at least one sample is required");
    let found = sample_partitions(g, samples, params.seed).par_iter().filter(|h| solve(h, params).is_found()).count();
    FractionEstimate { samples, found, exhausted: samples - found }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dichotomy_core::graph::generate::complete;
    use dichotomy_core::EdgeKind;

    #[test]
    fn parallel_matches_serial() {
        let g = complete(5, EdgeKind::Long);
        let mut p = SolverParams::new(1);
        p.restarts = 6;
        assert_eq!(solve_parallel(&g, &p), solve(&g, &p));
        p.dim = 2;
        let g = complete(4, EdgeKind::Long);
        assert_eq!(solve_parallel(&g, &p), solve(&g, &p));
    }

    #[test]
    fn fraction_matches_serial() {
        let g = complete(4, EdgeKind::Short);
        let mut p = SolverParams::new(1);
        p.restarts = 4;
        let serial = dichotomy_core::solver::realizable_fraction(&g, 6, &p);
        assert_eq!(realizable_fraction_parallel(&g, 6, &p), serial);
    }
}
