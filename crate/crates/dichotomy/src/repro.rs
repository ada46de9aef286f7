//! Acceptance checks 1 to 11, shared by `dichotomy repro` and the test suite.

use std::collections::BTreeSet;
use std::f64::consts::FRAC_PI_2;
use std::time::Instant;

use dichotomy_core::arrangement::{cell_bound, Pt, UnitDiskFamily};
use dichotomy_core::bounds::{
    certify, density_constant_c, density_function, hyperplane_cell_bound, Certificate, MU,
};
use dichotomy_core::construct::{
    choose_k4_template, grid_coordinates, k3m_template, realize_caterpillar_long, realize_degenerate,
    realize_grid_short, realize_k3m, realize_k4m, realize_outerplanar_short, K4Variant, CENTRAL_PETAL_RADIUS,
    CYCLIC_FOUR_SIDE,
};
use dichotomy_core::graph::generate::{
    complete_bipartite, random_caterpillar_forest, random_degenerate, random_graph, random_grid_instance,
    random_outerplanar_bipartite, random_partition,
};
use dichotomy_core::graph::{counterexample, degeneracy, Counterexample};
use dichotomy_core::solver::{penalty_gradient, penalty_objective, SolverParams};
use dichotomy_core::{verify, DichotomousGraph, EdgeKind, Embedding, Subset};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::parallel::solve_parallel;

#[derive(Clone, Debug, PartialEq)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl std::fmt::Display for Criterion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:>2}. {} ({:.1} s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.seconds,
            self.detail
        )
    }
}

type Check = (u8, &'static str, fn() -> Result<String, String>);

pub const CHECKS: [Check; 11] = [
    (1, "constructor soundness", constructor_soundness),
    (2, "K_{3,m} universality", k3m_universality),
    (3, "K_{4,m} case split", k4m_case_split),
    (4, "grid length bounds", grid_bounds),
    (5, "degenerate construction duality", degenerate_duality),
    (6, "counterexample consistency", counterexample_consistency),
    (7, "density constants", constants),
    (8, "cell-bound identities", cell_bounds),
    (9, "arrangement oracle equivalence", arrangement_oracle),
    (10, "solver gradient check", gradient_check),
    (11, "certificate logic", certificate_logic),
];

pub fn run(id: u8) -> Criterion {
    let &(id, title, f) = CHECKS.iter().find(|c| c.0 == id).expect("known criterion");
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Criterion { id, title, passed, detail, seconds: start.elapsed().as_secs_f64() }
}

pub fn run_all() -> Vec<Criterion> {
    CHECKS.iter().map(|c| run(c.0)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn valid_gap(g: &DichotomousGraph, emb: &Embedding) -> Result<f64, String> {
    let r = verify(g, emb).map_err(|e| e.to_string())?;
    ensure(r.valid && r.gap > 0.0, || format!("invalid embedding, gap {}", r.gap))?;
    Ok(r.gap)
}

fn random_subsets(rng: &mut ChaCha8Rng, a: usize, m: usize) -> Vec<Subset> {
    (0..m).map(|_| Subset(rng.random_range(0..1u64 << a))).collect()
}

fn distinct_subsets(rng: &mut ChaCha8Rng, m: usize) -> Vec<Subset> {
    let mut all: Vec<Subset> = (0..16).map(Subset).collect();
    all.shuffle(rng);
    all.truncate(m);
    all
}

fn constructor_soundness() -> Result<String, String> {
    const TRIALS: usize = 500;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut min_gap = f64::INFINITY;
    let mut record = |name: &str, i: usize, r: Result<f64, String>| -> Result<(), String> {
        let gap = r.map_err(|e| format!("{name} instance {i}: {e}"))?;
        min_gap = min_gap.min(gap);
        Ok(())
    };
    for i in 0..TRIALS {
        let n = rng.random_range(2..=60);
        let chords = rng.random_range(0..=n / 3);
        let g = random_outerplanar_bipartite(n, 0.85, chords, 0.4, &mut rng);
        record("outerplanar", i, realize_outerplanar_short(&g).map_err(|e| e.to_string()).and_then(|e| valid_gap(&g, &e)))?;

        let size = rng.random_range(2..=7);
        let (g, cells) = random_grid_instance(size, 0.8, 0.7, 0.3, &mut rng);
        record("grid", i, realize_grid_short(&g, &cells).map_err(|e| e.to_string()).and_then(|e| valid_gap(&g, &e)))?;

        let comps = rng.random_range(1..=3);
        let isolated = rng.random_range(0..=3);
        let g = random_caterpillar_forest(comps, 4, 3, isolated, 0.3, &mut rng);
        record(
            "caterpillar",
            i,
            realize_caterpillar_long(&g).map_err(|e| e.to_string()).and_then(|r| {
                valid_gap(&g, &r.planar)?;
                valid_gap(&g, &r.sphere)
            }),
        )?;

        let m = rng.random_range(1..=20);
        let g = complete_bipartite(3, &random_subsets(&mut rng, 3, m));
        record("k3m", i, realize_k3m(&g).map_err(|e| e.to_string()).and_then(|e| valid_gap(&g, &e)))?;

        let m = rng.random_range(1..=6);
        let g = complete_bipartite(4, &distinct_subsets(&mut rng, m));
        record("k4m", i, realize_k4m(&g).map_err(|e| e.to_string()).and_then(|e| valid_gap(&g, &e)))?;

        let d = rng.random_range(2..=5);
        let k = rng.random_range(1..=d);
        let n = rng.random_range(2..=60);
        let fill = rng.random_range(0.3..=1.0);
        let g = random_degenerate(n, k, fill, &mut rng);
        record(
            "degenerate",
            i,
            realize_degenerate(&g, d, i as u64).map_err(|e| e.to_string()).and_then(|r| {
                valid_gap(&g, &r.euclidean)?;
                valid_gap(&g, &r.sphere)
            }),
        )?;
    }
    Ok(format!("6 constructors x {TRIALS} instances valid, smallest gap {min_gap:.3e}"))
}

/// Labels of all sample points of a square lattice covering the disks,
/// plus the outside label.
pub fn sampled_labels(family: &UnitDiskFamily, resolution: f64) -> BTreeSet<Subset> {
    let c = family.centers();
    let lo = [c.iter().map(|p| p[0]).fold(f64::INFINITY, f64::min) - 1.1, c.iter().map(|p| p[1]).fold(f64::INFINITY, f64::min) - 1.1];
    let hi = [c.iter().map(|p| p[0]).fold(f64::NEG_INFINITY, f64::max) + 1.1, c.iter().map(|p| p[1]).fold(f64::NEG_INFINITY, f64::max) + 1.1];
    let nx = ((hi[0] - lo[0]) / resolution).ceil() as usize;
    let ny = ((hi[1] - lo[1]) / resolution).ceil() as usize;
    let mut out: BTreeSet<Subset> = (0..=nx)
        .into_par_iter()
        .fold(BTreeSet::new, |mut acc, ix| {
            let x = lo[0] + ix as f64 * resolution;
            for iy in 0..=ny {
                acc.insert(family.label_of([x, lo[1] + iy as f64 * resolution]));
            }
            acc
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    out.insert(Subset::EMPTY);
    out
}

fn k3m_universality() -> Result<String, String> {
    let g = complete_bipartite(3, &(0..8).map(Subset).collect::<Vec<_>>());
    realize_k3m(&g).map_err(|e| e.to_string()).and_then(|e| valid_gap(&g, &e))?;
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let base = complete_bipartite(3, &[Subset::EMPTY; 20]);
    for i in 0..100 {
        let h = random_partition(&base, &mut rng);
        realize_k3m(&h).map_err(|e| format!("partition {i}: {e}")).and_then(|e| valid_gap(&h, &e))?;
    }
    let family = k3m_template();
    let labels: BTreeSet<Subset> = family.summary().map_err(|e| e.to_string())?.labels.into_iter().collect();
    let sampled = sampled_labels(&family, 0.005);
    ensure(labels.len() == 8 && labels == sampled, || format!("template labels {labels:?}, sampled {sampled:?}"))?;
    Ok("all 8 subsets and 100 partitions of K_{3,20} realized; template has 8 labels".into())
}

fn k4m_case_split() -> Result<String, String> {
    for v in [K4Variant::CentralPetal(CENTRAL_PETAL_RADIUS), K4Variant::CyclicFour(CYCLIC_FOUR_SIDE)] {
        let family = v.family();
        let labels: BTreeSet<Subset> = family.summary().map_err(|e| e.to_string())?.labels.into_iter().collect();
        let sampled = sampled_labels(&family, 0.005);
        let expected: BTreeSet<Subset> =
            (0..16).map(Subset).filter(|s| !v.declared_missing().contains(s)).collect();
        ensure(labels == expected && sampled == expected, || format!("{v:?}: labels {labels:?}, sampled {sampled:?}"))?;
    }
    let families: Vec<Vec<Subset>> = (1u32..1 << 16)
        .filter(|mask| mask.count_ones() <= 6)
        .map(|mask| (0..16).filter(|i| mask >> i & 1 == 1).map(Subset).collect())
        .collect();
    let failures: Vec<String> = families
        .par_iter()
        .filter_map(|f| {
            let g = complete_bipartite(4, f);
            let r = realize_k4m(&g).map_err(|e| e.to_string()).and_then(|e| valid_gap(&g, &e));
            r.err().map(|e| format!("{f:?} ({:?}): {e}", choose_k4_template(f).variant))
        })
        .collect();
    ensure(failures.is_empty(), || format!("{} families failed, first {}", failures.len(), failures[0]))?;
    Ok(format!("all {} families of at most 6 distinct subsets realized; templates match", families.len()))
}

fn grid_bounds() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut max_short, mut min_long) = (0.0f64, f64::INFINITY);
    for i in 0..200 {
        let (g, cells) = random_grid_instance(5, 1.0, 0.6, 0.4, &mut rng);
        let layout = grid_coordinates(&g, &cells).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(layout.n == 5, || format!("instance {i}: grid index {}", layout.n))?;
        for e in g.edges() {
            let (p, q) = (layout.points[e.u.0], layout.points[e.v.0]);
            let len = ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt();
            match e.kind {
                EdgeKind::Short => max_short = max_short.max(len),
                EdgeKind::Long => min_long = min_long.min(len),
            }
        }
    }
    ensure(max_short < 25.5 && min_long >= 26.0, || format!("short up to {max_short}, long from {min_long}"))?;
    Ok(format!("200 instances: short lengths <= {max_short}, long lengths >= {min_long}"))
}

fn degenerate_duality() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut count = 0;
    for d in 2..=4 {
        for i in 0..100 {
            let n = rng.random_range(2..=60);
            let fill = rng.random_range(0.3..=1.0);
            let g = random_degenerate(n, d, fill, &mut rng);
            let r = realize_degenerate(&g, d, i).map_err(|e| format!("d={d} instance {i}: {e}"))?;
            let e = verify(&g, &r.euclidean).map_err(|e| e.to_string())?;
            let s = verify(&g, &r.sphere).map_err(|e| e.to_string())?;
            let unit = g.m() == 0 || e.max_short < 1.0 && e.min_long > 1.0;
            let right = g.m() == 0 || s.max_short < FRAC_PI_2 && s.min_long > FRAC_PI_2;
            ensure(unit && right, || format!("d={d} instance {i}: threshold separation failed"))?;
            for edge in g.edges() {
                let dot = r.euclidean.point(edge.u.0).dot(r.euclidean.point(edge.v.0));
                ensure((dot > 0.0) == (edge.kind == EdgeKind::Short), || format!("d={d} instance {i}: sign test"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} graphs valid in R^d at 1 and on S^(d-1) at pi/2; sign test holds"))
}

fn counterexample_consistency() -> Result<String, String> {
    let mut params = SolverParams::new(2);
    params.restarts = 200;
    params.gamma = 0.02;
    params.seed = 6;
    let mut lines = Vec::new();
    for which in [Counterexample::K47, Counterexample::K55, Counterexample::ThreeDegPlane] {
        let g = counterexample(which).map_err(|e| e.to_string())?;
        let out = solve_parallel(&g, &params);
        ensure(!out.is_found(), || format!("{}: solver reported a realization", which.name()))?;
        let all_short = g.relabeled(|_, _| EdgeKind::Short);
        let cluster = solve_parallel(&all_short, &params);
        ensure(cluster.is_found(), || format!("{}: all-short partition not found", which.name()))?;
        let k = degeneracy(&all_short).k.max(2);
        let r = realize_degenerate(&all_short, k, 0).map_err(|e| e.to_string())?;
        valid_gap(&all_short, &r.euclidean)?;
        lines.push(format!("{} no realization found in 200 restarts", which.name()));
    }
    Ok(format!("{}; all-short re-partitions realized", lines.join(", ")))
}

fn constants() -> Result<String, String> {
    let c = density_constant_c();
    let fc = density_function(c);
    let fmu = density_function(MU);
    ensure(c > 7.181 && c < 7.182 && fc.abs() < 1e-9, || format!("c = {c}, f(c) = {fc:e}"))?;
    ensure(fmu > 1.0 / 30.0, || format!("f(mu) = {fmu}"))?;
    Ok(format!("c = {c:.10}, |f(c)| = {:.1e}, f(mu) = {fmu:.9}", fc.abs()))
}

fn random_family(rng: &mut ChaCha8Rng, n: usize, min_feature: f64) -> UnitDiskFamily {
    let half = 0.6 * (n as f64).sqrt() + 0.4;
    loop {
        let centers: Vec<Pt> =
            (0..n).map(|_| [rng.random_range(-half..half), rng.random_range(-half..half)]).collect();
        let f = UnitDiskFamily::new(centers).expect("at most six disks");
        if f.check_general_position().is_ok_and(|s| s >= min_feature) {
            return f;
        }
    }
}

fn cell_bounds() -> Result<String, String> {
    let one = BigUint::from(1u32);
    for d in 2..=10u64 {
        ensure(hyperplane_cell_bound(d + 2, d + 1) == (&one << (d + 2)) - 1u32, || format!("d+2 identity at d={d}"))?;
        ensure(hyperplane_cell_bound(d + 1, d) == (&one << (d + 1)) - 1u32, || format!("d+1 identity at d={d}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut largest = 0;
    for i in 0..1000 {
        let n = rng.random_range(1..=6);
        let f = random_family(&mut rng, n, 1e-6);
        let labels = f.summary().map_err(|e| format!("family {i}: {e}"))?.labels.len();
        ensure(labels <= n * (n - 1) + 2 && labels <= cell_bound(n), || format!("family {i}: {labels} labels for {n} disks"))?;
        largest = largest.max(labels);
    }
    Ok(format!("identities hold for d = 2..10; 1000 families within n(n-1)+2 (largest {largest})"))
}

fn arrangement_oracle() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let families: Vec<UnitDiskFamily> = (0..300).map(|_| {
        let n = rng.random_range(1..=6);
        random_family(&mut rng, n, 0.1)
    }).collect();
    for (i, f) in families.iter().enumerate() {
        let labels: BTreeSet<Subset> = f.summary().map_err(|e| format!("family {i}: {e}"))?.labels.into_iter().collect();
        let sampled = sampled_labels(f, 0.005);
        ensure(labels == sampled, || format!("family {i} {:?}: candidates {labels:?}, sampled {sampled:?}", f.centers()))?;
    }
    Ok("300 families: candidate labels equal lattice labels at resolution 0.005".into())
}

fn gradient_check() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let gamma = 0.05;
    let h = 1e-6;
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < 100 {
        let n = rng.random_range(3..=12);
        let dim = rng.random_range(1..=4);
        let g = random_graph(n, 0.5, &mut rng);
        let x: Vec<f64> = (0..n * dim).map(|_| rng.random_range(-1.5..1.5)).collect();
        let near_kink = g.edges().iter().any(|e| {
            let len = (0..dim).map(|k| (x[e.u.0 * dim + k] - x[e.v.0 * dim + k]).powi(2)).sum::<f64>().sqrt();
            let kink = if e.kind == EdgeKind::Short { 1.0 - gamma } else { 1.0 + gamma };
            (len - kink).abs() <= 1e-4 || len < 1e-3
        });
        if near_kink {
            continue;
        }
        let grad = penalty_gradient(&g, &x, dim, gamma);
        let fd: Vec<f64> = (0..x.len())
            .map(|i| {
                let (mut a, mut b) = (x.clone(), x.clone());
                a[i] += h;
                b[i] -= h;
                (penalty_objective(&g, &a, dim, gamma) - penalty_objective(&g, &b, dim, gamma)) / (2.0 * h)
            })
            .collect();
        let norm = |v: &[f64]| v.iter().map(|c| c * c).sum::<f64>().sqrt();
        let diff: Vec<f64> = grad.iter().zip(&fd).map(|(a, b)| a - b).collect();
        let rel = if norm(&grad) == 0.0 { norm(&fd) } else { norm(&diff) / norm(&grad) };
        ensure(rel < 1e-5, || format!("instance {done}: relative error {rel:e}"))?;
        worst = worst.max(rel);
        done += 1;
    }
    Ok(format!("100 instances, worst relative error {worst:.2e}"))
}

fn certificate_logic() -> Result<String, String> {
    let k32 = complete_bipartite(32, &vec![Subset::full(32); 32]);
    let r = certify(&k32, 2);
    ensure(r.certificate == Certificate::NotPandichotomousDense, || format!("K_32,32: {:?}", r.certificate))?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..500 {
        let d = rng.random_range(2..=6);
        let k = rng.random_range(1..=d);
        let n = rng.random_range(1..=60);
        let g = random_degenerate(n, k, rng.random_range(0.0..=1.0), &mut rng);
        let r = certify(&g, d);
        ensure(r.certificate == Certificate::PandichotomousByDegeneracy, || format!("degenerate instance {i}: {:?}", r.certificate))?;
    }
    let mut dense = 0;
    let mut sparse = 0;
    for i in 0..10_000 {
        let d = rng.random_range(2..=4);
        let n = rng.random_range(2..=40);
        let g = random_graph(n, rng.random_range(0.0..=1.0), &mut rng);
        let is_dense = g.m() as f64 >= MU * (d * n) as f64;
        let is_sparse = degeneracy(&g).k <= d;
        ensure(!(is_dense && is_sparse), || format!("graph {i}: both certificates apply"))?;
        let expected = if is_dense {
            Certificate::NotPandichotomousDense
        } else if is_sparse {
            Certificate::PandichotomousByDegeneracy
        } else {
            Certificate::Inconclusive
        };
        ensure(certify(&g, d).certificate == expected, || format!("graph {i}: certificate mismatch"))?;
        dense += usize::from(is_dense);
        sparse += usize::from(is_sparse);
    }
    Ok(format!("K_32,32 dense; 500 degenerate graphs certified; 10000 graphs never co-fire ({dense} dense, {sparse} sparse)"))
}
