use std::collections::BTreeSet;
use std::f64::consts::PI;

use dichotomy_core::arrangement::UnitDiskFamily;
use dichotomy_core::bounds::{certify, density_function, dimension_bounds};
use dichotomy_core::construct::{grid_coordinates, realize_caterpillar_long, realize_degenerate};
use dichotomy_core::graph::generate::{random_caterpillar_forest, random_degenerate, random_graph, random_grid_instance};
use dichotomy_core::graph::{caterpillar_decompose, counterexample, degeneracy, short_components, Counterexample};
use dichotomy_core::solver::{solve, SolverParams};
use dichotomy_core::{distance, verify, DichotomousGraph, Edge, EdgeKind, Embedding, Point, Space, VertexId};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn unit(v: Vec<f64>) -> Point {
    Point(v).normalized()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degeneracy_never_grows_when_an_edge_goes(seed in any::<u64>(), n in 2usize..30, p in 0.05f64..0.9) {
        let g = random_graph(n, p, &mut rng(seed));
        let k = degeneracy(&g).k;
        for i in 0..g.m() {
            prop_assert!(degeneracy(&g.without_edge(i)).k <= k);
        }
    }

    #[test]
    fn degeneracy_ordering_is_certified(seed in any::<u64>(), n in 1usize..40, p in 0.0f64..1.0) {
        let g = random_graph(n, p, &mut rng(seed));
        let ord = degeneracy(&g);
        prop_assert!(ord.back_degree.iter().all(|&b| b <= ord.k));
        // some subgraph has minimum degree k: the vertices from the last one
        // whose back degree reaches k
        if ord.k > 0 {
            prop_assert!(ord.back_degree.contains(&ord.k));
        }
    }

    #[test]
    fn short_components_partition_vertices(seed in any::<u64>(), n in 1usize..40, p in 0.0f64..0.5) {
        let g = random_graph(n, p, &mut rng(seed));
        let comps = short_components(&g);
        let mut seen = vec![usize::MAX; n];
        for (ci, c) in comps.iter().enumerate() {
            for v in &c.vertices {
                prop_assert_eq!(seen[v.0], usize::MAX);
                seen[v.0] = ci;
            }
        }
        prop_assert!(seen.iter().all(|&c| c != usize::MAX));
        for e in g.short_edges() {
            prop_assert_eq!(seen[e.u.0], seen[e.v.0]);
        }
    }

    #[test]
    fn caterpillar_forests_decompose_and_round_trip(seed in any::<u64>(), comps in 1usize..4, iso in 0usize..3) {
        let g = random_caterpillar_forest(comps, 5, 3, iso, 0.3, &mut rng(seed));
        let dec = caterpillar_decompose(&g).unwrap();
        let got: BTreeSet<(VertexId, VertexId)> = dec.components.iter().flat_map(|c| c.edges()).collect();
        let want: BTreeSet<(VertexId, VertexId)> =
            g.long_edges().map(|e| (e.u.min(e.v), e.u.max(e.v))).collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn long_cycles_are_not_caterpillars(len in 3usize..12, extra in 0usize..5) {
        let n = len + extra;
        let mut edges: Vec<Edge> = (0..len).map(|i| Edge::long(i, (i + 1) % len)).collect();
        edges.extend((len..n).map(|v| Edge::short(0, v)));
        let g = DichotomousGraph::new(n, edges).unwrap();
        prop_assert!(caterpillar_decompose(&g).is_err());
    }

    #[test]
    fn distances_are_metrics(
        a in prop::collection::vec(-3.0f64..3.0, 3),
        b in prop::collection::vec(-3.0f64..3.0, 3),
        c in prop::collection::vec(-3.0f64..3.0, 3),
    ) {
        let (p, q, r) = (Point(a), Point(b), Point(c));
        let e = Space::Euclidean(3);
        prop_assert_eq!(distance(e, &p, &q), distance(e, &q, &p));
        let d = |x: &Point, y: &Point| distance(e, x, y).unwrap();
        prop_assert!(d(&p, &r) <= d(&p, &q) + d(&q, &r) + 1e-9);
        prop_assume!(p.norm() > 1e-3 && q.norm() > 1e-3 && r.norm() > 1e-3);
        let (p, q, r) = (p.normalized(), q.normalized(), r.normalized());
        let s = Space::Sphere(2);
        let g = |x: &Point, y: &Point| distance(s, x, y).unwrap();
        prop_assert_eq!(g(&p, &q), g(&q, &p));
        prop_assert!(g(&p, &r) <= g(&p, &q) + g(&q, &r) + 1e-9);
    }

    #[test]
    fn geodesic_grows_with_chord(t1 in 0.0f64..PI, t2 in 0.0f64..PI) {
        prop_assume!(t1 != t2);
        let o = unit(vec![1.0, 0.0, 0.0]);
        let p = unit(vec![t1.cos(), t1.sin(), 0.0]);
        let q = unit(vec![t2.cos(), t2.sin(), 0.0]);
        let chord = |x: &Point| o.euclidean_distance(x);
        let geo = |x: &Point| distance(Space::Sphere(2), &o, x).unwrap();
        prop_assert_eq!(chord(&p) < chord(&q), geo(&p) < geo(&q));
    }

    #[test]
    fn verify_is_scale_invariant(seed in any::<u64>(), n in 2usize..12, lambda in 0.1f64..10.0) {
        let mut r = rng(seed);
        let g = random_graph(n, 0.5, &mut r);
        prop_assume!(g.m() > 0);
        let coords = (0..n).map(|i| Point(vec![(i as f64 * 0.37).sin() * 2.0, (i as f64 * 0.91).cos()])).collect();
        let emb = Embedding::new(Space::Euclidean(2), coords).unwrap();
        let a = verify(&g, &emb).unwrap();
        let b = verify(&g, &emb.scaled(lambda)).unwrap();
        prop_assert_eq!(a.valid, b.valid);
        prop_assert!((b.max_short - lambda * a.max_short).abs() <= 1e-9 * lambda.max(1.0) * a.max_short.max(1.0));
        if a.min_long.is_finite() {
            prop_assert!((b.min_long - lambda * a.min_long).abs() <= 1e-9 * lambda.max(1.0) * a.min_long.max(1.0));
        }
        if let (Some(x), Some(y)) = (a.threshold, b.threshold) {
            prop_assert!((y - lambda * x).abs() <= 1e-9 * lambda.max(1.0) * x.max(1.0));
        }
    }

    #[test]
    fn arrangement_witnesses_reclassify(centers in prop::collection::vec((0.0f64..4.0, 0.0f64..4.0), 1..=6)) {
        let family = UnitDiskFamily::new(centers.iter().map(|&(x, y)| [x, y]).collect()).unwrap();
        prop_assume!(family.check_general_position().is_ok());
        let s = family.summary().unwrap();
        let n = family.len();
        prop_assert!(s.labels.len() <= n * (n - 1) + 2);
        for (label, w) in s.labels.iter().zip(&s.witnesses) {
            prop_assert_eq!(family.label_of(*w), *label);
        }
    }

    #[test]
    fn degenerate_signs_match_kinds(seed in any::<u64>(), d in 2usize..=5, n in 2usize..=50) {
        let mut r = rng(seed);
        let g = random_degenerate(n, d, 0.8, &mut r);
        let out = realize_degenerate(&g, d, seed).unwrap();
        for e in g.edges() {
            let dot = out.euclidean.point(e.u.0).dot(out.euclidean.point(e.v.0));
            prop_assert_eq!(dot > 0.0, e.kind == EdgeKind::Short);
            prop_assert!(dot != 0.0);
        }
    }

    #[test]
    fn grid_lengths_before_scaling(seed in any::<u64>(), size in 2usize..=8) {
        let (g, cells) = random_grid_instance(size, 0.9, 0.6, 0.4, &mut rng(seed));
        let layout = grid_coordinates(&g, &cells).unwrap();
        let n2 = (layout.n * layout.n) as f64;
        for e in g.edges() {
            let (p, q) = (layout.points[e.u.0], layout.points[e.v.0]);
            let len = ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt();
            let (a, b) = (cells[e.u.0], cells[e.v.0]);
            match e.kind {
                EdgeKind::Short => prop_assert!(len < n2 + 0.5),
                // diagonal pairs on a 3x3 grid can come in at 7*sqrt(2)
                EdgeKind::Long if layout.n >= 4 || a.0 == b.0 || a.1 == b.1 => prop_assert!(len >= n2 + 1.0),
                EdgeKind::Long => prop_assert!(len > n2 + 0.75),
            }
        }
    }

    #[test]
    fn caterpillar_far_pairs_are_the_long_edges(seed in any::<u64>(), comps in 1usize..=3, iso in 0usize..3) {
        let g = random_caterpillar_forest(comps, 5, 4, iso, 0.4, &mut rng(seed));
        let r = realize_caterpillar_long(&g).unwrap();
        let far: BTreeSet<(usize, usize)> = (0..g.n())
            .flat_map(|a| (a + 1..g.n()).map(move |b| (a, b)))
            .filter(|&(a, b)| {
                let (p, q) = (r.circle[a], r.circle[b]);
                (p[0] - q[0]).hypot(p[1] - q[1]) >= 1.0 - 1e-12
            })
            .collect();
        let long: BTreeSet<(usize, usize)> = g.long_edges().map(|e| (e.u.0.min(e.v.0), e.u.0.max(e.v.0))).collect();
        prop_assert_eq!(far, long);
    }

    #[test]
    fn dimension_bounds_are_ordered_and_shrink(seed in any::<u64>(), n in 2usize..40, p in 0.0f64..1.0) {
        let g = random_graph(n, p, &mut rng(seed));
        let k = degeneracy(&g).k;
        let (ped, psd) = dimension_bounds(k);
        prop_assert!(ped.lo <= ped.hi && psd.lo <= psd.hi);
        if g.m() > 0 {
            let h = g.without_edge(0);
            prop_assert!(certify(&h, 2).ped.hi <= certify(&g, 2).ped.hi);
        }
    }

    #[test]
    fn certificates_never_co_fire(seed in any::<u64>(), n in 2usize..40, p in 0.0f64..1.0, d in 2usize..5) {
        let g = random_graph(n, p, &mut rng(seed));
        let dense = g.m() as f64 >= dichotomy_core::bounds::MU * (d * n) as f64;
        let sparse = degeneracy(&g).k <= d;
        prop_assert!(!(dense && sparse));
    }
}

#[test]
fn counterexample_degeneracies() {
    let cases = [
        (Counterexample::K47, 4),
        (Counterexample::K55, 5),
        (Counterexample::ThreeDegPlane, 3),
        (Counterexample::EuclideanWitness(2), 4),
        (Counterexample::EuclideanWitness(4), 6),
        (Counterexample::SphereWitness(2), 3),
        (Counterexample::SphereWitness(3), 4),
    ];
    for (which, k) in cases {
        assert_eq!(degeneracy(&counterexample(which).unwrap()).k, k, "{which:?}");
    }
}

#[test]
fn density_function_increases() {
    let mut prev = density_function(2.0);
    let mut x = 2.001;
    while x <= 8.0 {
        let f = density_function(x);
        assert!(f > prev, "not increasing at {x}");
        prev = f;
        x += 1e-3;
    }
}

#[test]
fn found_outcomes_clear_twice_the_margin() {
    let mut r = rng(21);
    for i in 0..20 {
        let g = random_degenerate(15, 2, 0.7, &mut r);
        let mut p = SolverParams::new(2);
        p.seed = i;
        let out = solve(&g, &p);
        assert!(out.is_found(), "instance {i}");
        let rep = verify(&g, out.embedding()).unwrap();
        assert!(rep.gap >= 2.0 * p.gamma - 1e-9, "instance {i}: gap {}", rep.gap);
    }
}

#[test]
fn k3_5_partitions_are_all_found() {
    use dichotomy_core::graph::generate::complete_bipartite;
    use dichotomy_core::solver::realizable_fraction;
    let g = complete_bipartite(3, &[dichotomy_core::Subset::EMPTY; 5]);
    let mut p = SolverParams::new(2);
    p.seed = 3;
    assert_eq!(realizable_fraction(&g, 25, &p).lower_bound(), 1.0);
}

#[test]
fn k16_on_the_line_loses_partitions() {
    use dichotomy_core::graph::generate::complete;
    use dichotomy_core::solver::realizable_fraction;
    let g = complete(16, EdgeKind::Short);
    let mut p = SolverParams::new(1);
    p.restarts = 10;
    p.seed = 5;
    assert!(realizable_fraction(&g, 6, &p).lower_bound() < 1.0);
}

#[test]
fn single_long_edge_sphere_target() {
    let g = DichotomousGraph::new(2, vec![Edge::long(0, 1)]).unwrap();
    let r = realize_caterpillar_long(&g).unwrap();
    let rep = verify(&g, &r.sphere).unwrap();
    assert!(rep.valid && rep.min_long > 0.0);
}
