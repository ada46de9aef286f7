use alloc::vec;
use alloc::vec::Vec;

use super::{combine_components, planar, verified_unit_threshold, ConstructError};
use crate::geometry::{verify, Embedding};
use crate::graph::{bfs_layering, short_components, DichotomousGraph, EdgeKind, Layering, LayeringError, VertexId};

/// Final slack `y_L - (L - 1)` of the deepest layer, as a fraction of `y_1`.
const FINAL_SLACK: f64 = 0.02;

/// Layered drawing for bipartite graphs whose short subgraph is outerplanar.
///
/// Every short component is drawn on its own from BFS layers rooted at its
/// smallest vertex, using the adjacency order as the clockwise rotation
/// system. The components are then spread out along the x-axis.
pub fn realize_outerplanar_short(g: &DichotomousGraph) -> Result<Embedding, ConstructError> {
    if g.bipartition().is_none() {
        return Err(ConstructError::NotBipartite);
    }
    let mut parts = Vec::new();
    for comp in short_components(g) {
        let points = layered_drawing(&comp.graph)?;
        let emb = planar(&points);
        let report = verify(&comp.graph, &emb)?;
        if !(report.gap > 0.0) {
            return Err(ConstructError::NumericalFailure { layer: worst_layer(&comp.graph, &report.per_edge_length)?, gap: report.gap });
        }
        parts.push((comp.vertices, verified_unit_threshold(&comp.graph, emb, "outerplanar")?));
    }
    let emb = combine_components(g.n(), 2, &parts);
    verified_unit_threshold(g, emb, "outerplanar")
}

fn worst_layer(g: &DichotomousGraph, lengths: &[f64]) -> Result<usize, ConstructError> {
    let layering = bfs_layering(g, VertexId(0))?;
    let worst = g
        .edges()
        .iter()
        .zip(lengths)
        .filter(|(e, _)| e.kind == EdgeKind::Long)
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(e, _)| layering.layer_of[e.u.0].max(layering.layer_of[e.v.0]));
    Ok(worst.unwrap_or(0))
}

#[derive(Clone, Copy)]
struct Interval {
    lo: f64,
    hi: f64,
}

struct Drawing<'a> {
    lay: &'a Layering,
    x: Vec<f64>,
    y: Vec<f64>,
    strip: Vec<Interval>,
    /// `pair_right[v]`: `v` and its right neighbor on the layer are a pair of
    /// an internal face.
    pair_right: Vec<bool>,
}

fn inconsistent(v: VertexId, why: &'static str) -> ConstructError {
    ConstructError::Layering(LayeringError::InconsistentEmbedding(v, why))
}

impl Drawing<'_> {
    fn closes_face(&self, v: VertexId) -> bool {
        self.lay.parents[v.0].len() == 2
    }

    fn is_first_pair(&self, a: VertexId, b: VertexId) -> bool {
        self.lay.parents[a.0].last() == self.lay.parents[b.0].first()
    }

    /// Open interval of `ℓ_{k+1}` within unit distance of `v ∈ V_k`.
    fn circle_range(&self, v: VertexId, k: usize) -> Interval {
        let dy = self.y[k + 1] - self.y[k];
        let w = libm::sqrt((1.0 - dy * dy).max(0.0));
        Interval { lo: self.x[v.0] - w, hi: self.x[v.0] + w }
    }
}

fn compute_pairs(lay: &Layering, n: usize) -> Vec<bool> {
    let mut pair_right = vec![false; n];
    for layer in lay.layers.iter().rev() {
        for w in layer.windows(2) {
            let (a, b) = (w[0], w[1]);
            pair_right[a.0] = match (lay.children[a.0].last(), lay.children[b.0].first()) {
                (Some(&la), Some(&fb)) => la == fb || pair_right[la.0],
                _ => false,
            };
        }
    }
    pair_right
}

fn layered_drawing(g: &DichotomousGraph) -> Result<Vec<[f64; 2]>, ConstructError> {
    let n = g.n();
    if n == 1 {
        return Ok(vec![[0.0, 0.0]]);
    }
    let lay = bfs_layering(g, VertexId(0))?;
    let depth = lay.layers.len();
    let ratio = libm::pow(FINAL_SLACK, 1.0 / depth as f64);
    let mut dr = Drawing {
        lay: &lay,
        x: vec![0.0; n],
        y: vec![0.0; depth + 1],
        strip: vec![Interval { lo: f64::NEG_INFINITY, hi: f64::INFINITY }; n],
        pair_right: compute_pairs(&lay, n),
    };
    dr.y[1] = 0.5;
    for k in 0..depth - 1 {
        split_strips(&mut dr, k)?;
        place_children(&mut dr, k)?;
        let next_y = contract_pairs(&mut dr, k + 1, ratio)?;
        dr.y[k + 2] = next_y;
    }
    Ok(g.vertices().map(|v| [dr.x[v.0], dr.y[lay.layer_of[v.0]]]).collect())
}

/// Strips of the vertices on layer `k`, carved from their parents' strips.
fn split_strips(dr: &mut Drawing<'_>, k: usize) -> Result<(), ConstructError> {
    if k == 0 {
        return Ok(());
    }
    let mut portions: Vec<Vec<Interval>> = vec![Vec::new(); dr.x.len()];
    for &u in &dr.lay.layers[k - 1] {
        let kids = &dr.lay.children[u.0];
        let su = dr.strip[u.0];
        let ranges: Vec<Interval> = kids
            .iter()
            .map(|&c| {
                let r = dr.circle_range(c, k);
                Interval { lo: r.lo.max(su.lo), hi: r.hi.min(su.hi) }
            })
            .collect();
        let mut cut = su.lo;
        for (i, &c) in kids.iter().enumerate() {
            let next_cut = if i + 1 == kids.len() {
                su.hi
            } else if dr.pair_right[c.0] {
                (dr.x[c.0] + dr.x[kids[i + 1].0]) / 2.0
            } else {
                (ranges[i].hi + ranges[i + 1].lo) / 2.0
            };
            if i + 1 < kids.len() && !(dr.x[c.0] < next_cut && next_cut < dr.x[kids[i + 1].0]) {
                return Err(ConstructError::NumericalFailure { layer: k, gap: next_cut - dr.x[c.0] });
            }
            portions[c.0].push(Interval { lo: cut, hi: next_cut });
            cut = next_cut;
        }
    }
    for &v in &dr.lay.layers[k] {
        let p = &portions[v.0];
        let lo = p.iter().map(|i| i.lo).fold(f64::INFINITY, f64::min);
        let hi = p.iter().map(|i| i.hi).fold(f64::NEG_INFINITY, f64::max);
        if p.len() == 2 && p[0].hi != p[1].lo {
            return Err(inconsistent(v, "parent strips are not adjacent"));
        }
        dr.strip[v.0] = Interval { lo, hi };
    }
    Ok(())
}

/// Places layer `k + 1` on `ℓ_{k+1}`: face-closing vertices at the crossing
/// of their parents' unit circles, the rest spread evenly over the range of
/// their parent.
fn place_children(dr: &mut Drawing<'_>, k: usize) -> Result<(), ConstructError> {
    for &v in &dr.lay.layers[k] {
        let kids = &dr.lay.children[v.0];
        if kids.is_empty() {
            continue;
        }
        let r = dr.circle_range(v, k);
        let s = dr.strip[v.0];
        let range = Interval { lo: r.lo.max(s.lo), hi: r.hi.min(s.hi) };
        if !(range.lo < range.hi) {
            return Err(ConstructError::NumericalFailure { layer: k + 1, gap: range.hi - range.lo });
        }
        let free: Vec<VertexId> = kids.iter().copied().filter(|&c| !dr.closes_face(c)).collect();
        for (i, &c) in free.iter().enumerate() {
            let t = (i + 1) as f64 / (free.len() + 1) as f64;
            dr.x[c.0] = range.lo + t * (range.hi - range.lo);
        }
        if let Some(&c) = kids.last() {
            if dr.closes_face(c) && dr.lay.parents[c.0][0] == v {
                let right = dr.lay.parents[c.0][1];
                dr.x[c.0] = (dr.x[v.0] + dr.x[right.0]) / 2.0;
            }
        }
    }
    check_order(dr, k + 1)
}

fn check_order(dr: &Drawing<'_>, k: usize) -> Result<(), ConstructError> {
    for w in dr.lay.layers[k].windows(2) {
        let gap = dr.x[w[1].0] - dr.x[w[0].0];
        if !(gap > 0.0) {
            return Err(ConstructError::NumericalFailure { layer: k, gap });
        }
    }
    Ok(())
}

/// Moves every pair on layer `k` to a common distance `d` and returns the
/// height of the next line.
fn contract_pairs(dr: &mut Drawing<'_>, k: usize, ratio: f64) -> Result<f64, ConstructError> {
    let layer = dr.lay.layers[k].clone();
    let slack = dr.y[k] - (k as f64 - 1.0);
    let target = k as f64 + ratio * slack;
    let pairs: Vec<(VertexId, VertexId)> = layer
        .windows(2)
        .filter(|w| dr.pair_right[w[0].0])
        .map(|w| (w[0], w[1]))
        .collect();
    let min_gap = layer
        .windows(2)
        .map(|w| dr.x[w[1].0] - dr.x[w[0].0])
        .fold(f64::INFINITY, f64::min);
    if pairs.is_empty() {
        let top = if min_gap < 2.0 { dr.y[k] + libm::sqrt(1.0 - min_gap * min_gap / 4.0) } else { f64::NEG_INFINITY };
        return Ok(top.max(target));
    }
    let h = target - dr.y[k];
    let mut d = min_gap;
    d = d.min(2.0 * libm::sqrt((1.0 - h * h).max(0.0)));
    let mut fixed = vec![false; dr.x.len()];
    for &v in &layer {
        fixed[v.0] = dr.closes_face(v);
    }
    let mut non_first = Vec::new();
    let mut first = Vec::new();
    for &(a, b) in &pairs {
        if dr.is_first_pair(a, b) {
            first.push((a, b));
        } else {
            let boundary = dr.strip[dr.lay.parents[a.0].last().unwrap().0].hi;
            if fixed[a.0] || fixed[b.0] {
                return Err(inconsistent(a, "vertex of a continuing pair is pinned twice"));
            }
            d = d.min(2.0 * (boundary - dr.x[a.0])).min(2.0 * (dr.x[b.0] - boundary));
            non_first.push((a, b, boundary));
        }
    }
    if !(d > 0.0) {
        return Err(ConstructError::NumericalFailure { layer: k, gap: d });
    }
    for &(a, b, m) in &non_first {
        dr.x[a.0] = m - d / 2.0;
        dr.x[b.0] = m + d / 2.0;
        fixed[a.0] = true;
        fixed[b.0] = true;
    }
    // consecutive first pairs form chains; each chain is spaced `d` apart,
    // anchored at its pinned vertex if it has one
    let mut i = 0;
    while i < first.len() {
        let mut chain = vec![first[i].0, first[i].1];
        while i + 1 < first.len() && first[i + 1].0 == *chain.last().unwrap() {
            i += 1;
            chain.push(first[i].1);
        }
        i += 1;
        let pinned: Vec<usize> = (0..chain.len()).filter(|&j| fixed[chain[j].0]).collect();
        let origin = match pinned.first() {
            Some(&p) => dr.x[chain[p].0] - p as f64 * d,
            None => {
                let mid = (dr.x[chain[0].0] + dr.x[chain.last().unwrap().0]) / 2.0;
                mid - (chain.len() - 1) as f64 * d / 2.0
            }
        };
        for &p in pinned.iter().skip(1) {
            let err = dr.x[chain[p].0] - (origin + p as f64 * d);
            if libm::fabs(err) > 1e-12 {
                return Err(inconsistent(chain[p], "chain of first pairs is pinned twice"));
            }
        }
        for (j, &v) in chain.iter().enumerate() {
            if !fixed[v.0] {
                dr.x[v.0] = origin + j as f64 * d;
                fixed[v.0] = true;
            }
        }
    }
    check_order(dr, k)?;
    Ok(dr.y[k] + libm::sqrt(1.0 - d * d / 4.0))
}
