//! Graph builders and random instance generators.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{DichotomousGraph, Edge, EdgeKind, VertexId};
use crate::subset::Subset;

/// `K_{a,|subsets|}` with `U = 0..a`; vertex `a + i` is short to exactly the
/// members of `subsets[i]`.
pub fn complete_bipartite(a: usize, subsets: &[Subset]) -> DichotomousGraph {
    let mut edges = Vec::with_capacity(a * subsets.len());
    for (i, s) in subsets.iter().enumerate() {
        for u in 0..a {
            let kind = if s.contains(u) { EdgeKind::Short } else { EdgeKind::Long };
            edges.push(Edge::new(u, a + i, kind));
        }
    }
    DichotomousGraph::new(a + subsets.len(), edges).expect("complete bipartite graph is simple")
}

/// Complete graph with every edge of the given kind.
pub fn complete(n: usize, kind: EdgeKind) -> DichotomousGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push(Edge::new(u, v, kind));
        }
    }
    DichotomousGraph::new(n, edges).expect("complete graph is simple")
}

fn random_kind<R: Rng + ?Sized>(rng: &mut R) -> EdgeKind {
    if rng.random_bool(0.5) {
        EdgeKind::Short
    } else {
        EdgeKind::Long
    }
}

/// Same graph, every edge labeled short or long uniformly at random.
pub fn random_partition<R: Rng + ?Sized>(g: &DichotomousGraph, rng: &mut R) -> DichotomousGraph {
    g.relabeled(|_, _| random_kind(rng))
}

/// Erdős–Rényi graph `G(n, p)` with uniform edge kinds.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> DichotomousGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push(Edge::new(u, v, random_kind(rng)));
            }
        }
    }
    DichotomousGraph::new(n, edges).expect("generated graph is simple")
}

/// Random tree on `n` vertices with uniform edge kinds.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DichotomousGraph {
    random_degenerate(n, 1, 1.0, rng)
}

/// Every vertex `i > 0` is joined to up to `k` earlier vertices, so the result
/// is at most `k`-degenerate. With `fill = 1` each vertex takes exactly
/// `min(k, i)` back edges.
pub fn random_degenerate<R: Rng + ?Sized>(n: usize, k: usize, fill: f64, rng: &mut R) -> DichotomousGraph {
    let mut edges = Vec::new();
    let mut earlier: Vec<usize> = Vec::new();
    for v in 0..n {
        earlier.shuffle(rng);
        let cap = k.min(v);
        let take = if fill >= 1.0 { cap } else { (0..cap).filter(|_| rng.random_bool(fill)).count() };
        for &u in earlier.iter().take(take) {
            edges.push(Edge::new(u, v, random_kind(rng)));
        }
        earlier.push(v);
    }
    DichotomousGraph::new(n, edges).expect("generated graph is simple")
}

/// Bipartite graph whose short subgraph is outerplanar, shipped with the
/// rotation system of a convex drawing. Vertices sit on a circle in index
/// order; short edges are non-crossing chords between opposite parities and
/// long edges are random further opposite-parity pairs.
pub fn random_outerplanar_bipartite<R: Rng + ?Sized>(
    n: usize,
    boundary_p: f64,
    chords: usize,
    long_p: f64,
    rng: &mut R,
) -> DichotomousGraph {
    let n = n + n % 2;
    let mut short: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        if n > 2 || i == 0 {
            let j = (i + 1) % n;
            if rng.random_bool(boundary_p) {
                short.push((i.min(j), i.max(j)));
            }
        }
    }
    let crosses = |(a, b): (usize, usize), (c, d): (usize, usize)| (a < c && c < b && b < d) || (c < a && a < d && d < b);
    for _ in 0..chords * 4 {
        if short.len() >= 2 * n {
            break;
        }
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        let (a, b) = (a.min(b), a.max(b));
        if (b - a) % 2 == 0 || b - a == 1 || (a == 0 && b == n - 1) {
            continue;
        }
        if short.contains(&(a, b)) || short.iter().any(|&e| crosses(e, (a, b))) {
            continue;
        }
        short.push((a, b));
    }
    let mut edges: Vec<Edge> = short.iter().map(|&(a, b)| Edge::short(a, b)).collect();
    for a in 0..n {
        for b in (a + 1..n).step_by(2) {
            if !short.contains(&(a, b)) && rng.random_bool(long_p) {
                edges.push(Edge::long(a, b));
            }
        }
    }
    let g = DichotomousGraph::new(n, edges).expect("generated graph is simple");
    let angle = |i: usize| 2.0 * core::f64::consts::PI * i as f64 / n as f64;
    let order = (0..n)
        .map(|v| {
            let (x0, y0) = (libm::cos(angle(v)), libm::sin(angle(v)));
            let mut nbrs: Vec<(f64, VertexId)> = g
                .neighbors(VertexId(v))
                .iter()
                .map(|&(w, _)| {
                    let (x, y) = (libm::cos(angle(w.0)), libm::sin(angle(w.0)));
                    (libm::atan2(y - y0, x - x0), w)
                })
                .collect();
            // clockwise means decreasing angle
            nbrs.sort_by(|a, b| b.0.total_cmp(&a.0));
            nbrs.into_iter().map(|(_, w)| w).collect()
        })
        .collect();
    g.with_adjacency_order(order).expect("convex rotation lists every neighbor")
}

/// Random instance on an `size x size` grid. Returns the graph and the
/// 1-based cell of every vertex; short edges only join grid-adjacent cells.
pub fn random_grid_instance<R: Rng + ?Sized>(
    size: usize,
    occupancy: f64,
    short_p: f64,
    long_p: f64,
    rng: &mut R,
) -> (DichotomousGraph, Vec<(usize, usize)>) {
    let mut cells = Vec::new();
    for i in 1..=size {
        for j in 1..=size {
            if rng.random_bool(occupancy) {
                cells.push((i, j));
            }
        }
    }
    if cells.is_empty() {
        cells.push((1, 1));
    }
    cells.shuffle(rng);
    let n = cells.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (cells[u], cells[v]);
            let adjacent = a.0.abs_diff(b.0) + a.1.abs_diff(b.1) == 1;
            if adjacent && rng.random_bool(short_p) {
                edges.push(Edge::short(u, v));
            } else if rng.random_bool(long_p) {
                edges.push(Edge::long(u, v));
            }
        }
    }
    (DichotomousGraph::new(n, edges).expect("generated graph is simple"), cells)
}

/// Random graph whose long subgraph is a caterpillar forest: `components`
/// caterpillars with spines of length `1..=max_spine` and up to `max_leaves`
/// leaves per spine vertex, a few long-isolated vertices, and random short
/// edges between all remaining pairs.
pub fn random_caterpillar_forest<R: Rng + ?Sized>(
    components: usize,
    max_spine: usize,
    max_leaves: usize,
    isolated: usize,
    short_p: f64,
    rng: &mut R,
) -> DichotomousGraph {
    let mut long: Vec<(usize, usize)> = Vec::new();
    let mut n = 0;
    for _ in 0..components {
        let spine_len = rng.random_range(1..=max_spine.max(1));
        let spine: Vec<usize> = (n..n + spine_len).collect();
        n += spine_len;
        for w in spine.windows(2) {
            long.push((w[0], w[1]));
        }
        for &s in &spine {
            for _ in 0..rng.random_range(0..=max_leaves) {
                long.push((s, n));
                n += 1;
            }
        }
    }
    n += isolated;
    let mut relabel: Vec<usize> = (0..n).collect();
    relabel.shuffle(rng);
    let mut is_long = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for &(a, b) in &long {
        let (a, b) = (relabel[a], relabel[b]);
        is_long[a][b] = true;
        is_long[b][a] = true;
        edges.push(Edge::long(a, b));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !is_long[u][v] && rng.random_bool(short_p) {
                edges.push(Edge::short(u, v));
            }
        }
    }
    DichotomousGraph::new(n, edges).expect("generated graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{caterpillar_decompose, degeneracy};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn degenerate_generator_respects_k() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for k in 1..5 {
            let g = random_degenerate(40, k, 1.0, &mut rng);
            assert!(degeneracy(&g).k <= k);
        }
    }

    #[test]
    fn caterpillar_generator_decomposes() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let g = random_caterpillar_forest(3, 5, 3, 2, 0.3, &mut rng);
            assert!(caterpillar_decompose(&g).is_ok());
        }
    }

    #[test]
    fn outerplanar_generator_is_bipartite() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = random_outerplanar_bipartite(16, 0.8, 6, 0.2, &mut rng);
            assert!(g.bipartition().is_some());
        }
    }
}
