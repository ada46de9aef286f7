use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{planar, verified_unit_threshold, ConstructError};
use crate::geometry::{Embedding, Point};
use crate::graph::{caterpillar_decompose, DichotomousGraph, VertexId};

/// Radius of the circle of `S^2` that receives the planar circle.
const SPHERE_CIRCLE_RADIUS: f64 = 0.5;

/// Circle placement parameters for `k` spine slots.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CaterpillarParams {
    /// The circle has radius `1/2 + epsilon`.
    pub epsilon: f64,
    /// Points at distance at least 1 from `p` form an arc of half-width
    /// `epsilon_prime` around the antipode of `p`.
    pub epsilon_prime: f64,
    pub k: usize,
    pub alpha: f64,
}

impl CaterpillarParams {
    pub fn for_slots(k: usize) -> CaterpillarParams {
        let k = k.max(1);
        let epsilon_prime = PI / (4.0 * k as f64);
        let epsilon = (1.0 / libm::cos(epsilon_prime / 2.0) - 1.0) / 2.0;
        CaterpillarParams { epsilon, epsilon_prime, k, alpha: epsilon_prime / (2.0 * k as f64) }
    }

    pub fn radius(&self) -> f64 {
        0.5 + self.epsilon
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CaterpillarRealization {
    pub params: CaterpillarParams,
    /// Spine slot of every vertex on the circle, or `None` for vertices at
    /// the center and for leaves.
    pub slot: Vec<Option<usize>>,
    /// Unscaled circle placement, long edges exactly the pairs at distance
    /// at least 1.
    pub circle: Vec<[f64; 2]>,
    /// Planar embedding rescaled to threshold 1.
    pub planar: Embedding,
    /// The same circle placed on a circle of `S^2`.
    pub sphere: Embedding,
}

/// Realizes graphs whose long subgraph is a caterpillar forest.
///
/// Caterpillars with at least one edge are laid out one after another on the
/// spine slots with an empty slot between consecutive caterpillars; vertices
/// without long edges sit at the center of the circle.
pub fn realize_caterpillar_long(g: &DichotomousGraph) -> Result<CaterpillarRealization, ConstructError> {
    let dec = caterpillar_decompose(g)?;
    let mut slot = vec![None; g.n()];
    let mut spine_slots: Vec<(usize, VertexId, &[VertexId])> = Vec::new();
    let mut next = 0;
    for c in dec.components.iter().filter(|c| c.vertex_count() > 1) {
        for (s, leaves) in c.spine.iter().zip(&c.leaves) {
            slot[s.0] = Some(next);
            spine_slots.push((next, *s, leaves));
            next += 1;
        }
        next += 1;
    }
    let k = next.saturating_sub(1).max(1);
    let params = CaterpillarParams::for_slots(k);
    let r = params.radius();
    let at = |t: f64| [r * libm::cos(t), r * libm::sin(t)];
    let mut circle = vec![[0.0, 0.0]; g.n()];
    for &(s, v, leaves) in &spine_slots {
        let theta = s as f64 * (PI + params.epsilon_prime);
        circle[v.0] = at(theta);
        let i = (s + 1) as f64;
        let mid = theta + PI + i * params.alpha;
        let width = params.alpha / 4.0;
        for (j, l) in leaves.iter().enumerate() {
            let t = mid + width * ((j as f64 + 0.5) / leaves.len() as f64 - 0.5);
            circle[l.0] = at(t);
        }
    }
    let planar_emb = verified_unit_threshold(g, planar(&circle), "caterpillar")?;
    let h = libm::sqrt(1.0 - SPHERE_CIRCLE_RADIUS * SPHERE_CIRCLE_RADIUS);
    let lifted = circle
        .iter()
        .map(|p| {
            let s = SPHERE_CIRCLE_RADIUS / r;
            Point(vec![p[0] * s, p[1] * s, h])
        })
        .collect();
    let sphere = Embedding::on_sphere(2, lifted)?;
    let sphere = verified_unit_threshold(g, sphere, "caterpillar")?;
    Ok(CaterpillarRealization { params, slot, circle, planar: planar_emb, sphere })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn far_pairs(points: &[[f64; 2]]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..points.len() {
            for b in a + 1..points.len() {
                if libm::hypot(points[a][0] - points[b][0], points[a][1] - points[b][1]) >= 1.0 - 1e-12 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    #[test]
    fn single_long_edge() {
        let g = DichotomousGraph::new(2, vec![Edge::long(0, 1)]).unwrap();
        let r = realize_caterpillar_long(&g).unwrap();
        assert!(crate::verify(&g, &r.planar).unwrap().valid);
        assert!(crate::verify(&g, &r.sphere).unwrap().valid);
    }

    #[test]
    fn spine_of_five_has_exactly_four_far_pairs() {
        let g = DichotomousGraph::new(5, (1..5).map(|i| Edge::long(i - 1, i)).collect()).unwrap();
        let r = realize_caterpillar_long(&g).unwrap();
        let mut far = far_pairs(&r.circle);
        far.sort();
        let mut expected: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u.0, e.v.0)).collect();
        expected.sort();
        assert_eq!(far, expected);
    }

    #[test]
    fn parameters_satisfy_the_angle_bound() {
        for k in 1..50 {
            let p = CaterpillarParams::for_slots(k);
            assert!(p.epsilon > 0.0 && p.epsilon_prime < PI / (2.0 * k as f64));
            let back = 2.0 * libm::acos(1.0 / (1.0 + 2.0 * p.epsilon));
            assert!((back - p.epsilon_prime).abs() < 1e-9);
        }
    }
}
