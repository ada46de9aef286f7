use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::ConstructError;
use crate::geometry::{Embedding, Point, Space};
use crate::graph::{degeneracy, DichotomousGraph, EdgeKind};
use crate::linalg::least_norm;

pub const MAX_ATTEMPTS: usize = 32;
const GRAM_TOLERANCE: f64 = 1e-10;
const INITIAL_PERTURBATION: f64 = 1e-3;

#[derive(Clone, Debug, PartialEq)]
pub struct DegenerateRealization {
    /// Points on the sphere of radius `√2/2` in `R^d`; threshold 1.
    pub euclidean: Embedding,
    /// The same directions on `S^{d-1}`; threshold `π/2`.
    pub sphere: Embedding,
    pub attempts: usize,
}

/// Places a graph of degeneracy at most `d` so that short edges have positive
/// and long edges negative dot products.
///
/// Vertices are added in degeneracy order. A new vertex solves
/// `⟨±q_j, x⟩ = 1` for its earlier neighbors `q_j`, adding a random kernel
/// component when underdetermined, then moves by a small random perturbation
/// that keeps every required sign.
pub fn realize_degenerate(g: &DichotomousGraph, d: usize, seed: u64) -> Result<DegenerateRealization, ConstructError> {
    if d < 2 {
        return Err(ConstructError::DimensionTooSmall(d));
    }
    let ord = degeneracy(g);
    if ord.k > d {
        return Err(ConstructError::DegeneracyTooHigh { k: ord.k, d });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=MAX_ATTEMPTS {
        if let Some(points) = place(g, &ord.order, d, &mut rng) {
            let euclidean = Embedding::new(Space::Euclidean(d), points.clone())?;
            let sphere = Embedding::on_sphere(d - 1, points)?;
            return Ok(DegenerateRealization { euclidean, sphere, attempts: attempt });
        }
    }
    Err(ConstructError::SingularSystem(MAX_ATTEMPTS))
}

fn gaussian(d: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    (0..d).map(|_| rng.sample::<f64, _>(StandardNormal)).collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn with_norm(v: &[f64], r: f64) -> Vec<f64> {
    let n = libm::sqrt(v.iter().map(|x| x * x).sum::<f64>());
    v.iter().map(|x| x * r / n).collect()
}

fn place(g: &DichotomousGraph, order: &[crate::VertexId], d: usize, rng: &mut ChaCha8Rng) -> Option<Vec<Point>> {
    let radius = libm::sqrt(2.0) / 2.0;
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    let mut points: Vec<Vec<f64>> = vec![Vec::new(); n];
    for (i, &v) in order.iter().enumerate() {
        let mut rows: Vec<Vec<f64>> = Vec::new();
        for &(w, kind) in g.neighbors(v) {
            if pos[w.0] < i {
                let sign = if kind == EdgeKind::Short { 1.0 } else { -1.0 };
                rows.push(points[w.0].iter().map(|c| sign * c).collect());
            }
        }
        let base = if rows.is_empty() {
            gaussian(d, rng)
        } else {
            let refs: Vec<&[f64]> = rows.iter().map(Vec::as_slice).collect();
            let mut x = least_norm(&refs, &vec![1.0; rows.len()], GRAM_TOLERANCE)?;
            if rows.len() < d {
                // random kernel direction of comparable length
                let z = with_norm(&gaussian(d, rng), libm::sqrt(dot(&x, &x)));
                let rz: Vec<f64> = rows.iter().map(|r| dot(r, &z)).collect();
                let proj = least_norm(&refs, &rz, GRAM_TOLERANCE)?;
                for k in 0..d {
                    x[k] += z[k] - proj[k];
                }
            }
            x
        };
        let base = with_norm(&base, radius);
        let signs_hold = |p: &[f64]| rows.iter().all(|r| dot(r, p) > 0.0);
        if !signs_hold(&base) {
            return None;
        }
        let mut chosen = base.clone();
        let mut sigma = INITIAL_PERTURBATION;
        for _ in 0..40 {
            let noise = gaussian(d, rng);
            let candidate: Vec<f64> = base.iter().zip(&noise).map(|(b, z)| b + sigma * z).collect();
            let candidate = with_norm(&candidate, radius);
            if signs_hold(&candidate) {
                chosen = candidate;
                break;
            }
            sigma /= 2.0;
        }
        points[v.0] = chosen;
        pos[v.0] = i;
    }
    Some(points.into_iter().map(Point).collect())
}
