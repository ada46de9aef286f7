use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{planar, verified_unit_threshold, ConstructError};
use crate::geometry::Embedding;
use crate::graph::{DichotomousGraph, EdgeKind, VertexId};

/// Unscaled grid drawing. `n` is the largest grid index in use.
#[derive(Clone, Debug, PartialEq)]
pub struct GridLayout {
    pub n: usize,
    pub points: Vec<[f64; 2]>,
}

impl GridLayout {
    /// Factor that puts the threshold at 1.
    pub fn scale(&self) -> f64 {
        let n2 = (self.n * self.n) as f64;
        1.0 / (n2 + 0.75)
    }
}

/// Perturbed grid coordinates: a vertex in cell `(i, j)` gets x equal to
/// `i n²` when the edge to `(i-1, j)` is short and `i n² + i` otherwise, and
/// likewise for y. Cells on the first row or column use `n²`.
pub fn grid_coordinates(g: &DichotomousGraph, cells: &[(usize, usize)]) -> Result<GridLayout, ConstructError> {
    if cells.len() != g.n() || cells.iter().any(|&(i, j)| i == 0 || j == 0) {
        return Err(ConstructError::BadGridMap { have: cells.len(), need: g.n() });
    }
    let mut owner: BTreeMap<(usize, usize), VertexId> = BTreeMap::new();
    for (v, &c) in cells.iter().enumerate() {
        if let Some(&u) = owner.get(&c) {
            return Err(ConstructError::NonInjectiveGridMap(u, VertexId(v)));
        }
        owner.insert(c, VertexId(v));
    }
    for e in g.short_edges() {
        let (a, b) = (cells[e.u.0], cells[e.v.0]);
        if a.0.abs_diff(b.0) + a.1.abs_diff(b.1) != 1 {
            return Err(ConstructError::NotGridAdjacent(e.u, e.v));
        }
    }
    let n = cells.iter().map(|&(i, j)| i.max(j)).max().unwrap_or(1);
    let n2 = (n * n) as f64;
    let short_to = |v: usize, c: (usize, usize)| {
        owner.get(&c).is_some_and(|&u| g.kind(VertexId(v), u) == Some(EdgeKind::Short))
    };
    let points = cells
        .iter()
        .enumerate()
        .map(|(v, &(i, j))| {
            let x = if i == 1 {
                n2
            } else if short_to(v, (i - 1, j)) {
                i as f64 * n2
            } else {
                i as f64 * n2 + i as f64
            };
            let y = if j == 1 {
                n2
            } else if short_to(v, (i, j - 1)) {
                j as f64 * n2
            } else {
                j as f64 * n2 + j as f64
            };
            [x, y]
        })
        .collect();
    Ok(GridLayout { n, points })
}

/// Realizes a graph whose short edges all join grid-adjacent cells.
pub fn realize_grid_short(g: &DichotomousGraph, cells: &[(usize, usize)]) -> Result<Embedding, ConstructError> {
    let layout = grid_coordinates(g, cells)?;
    let s = layout.scale();
    let points: Vec<[f64; 2]> = layout.points.iter().map(|p| [p[0] * s, p[1] * s]).collect();
    verified_unit_threshold(g, planar(&points), "grid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use alloc::vec;

    fn len(p: [f64; 2], q: [f64; 2]) -> f64 {
        libm::hypot(p[0] - q[0], p[1] - q[1])
    }

    #[test]
    fn two_by_two_square_with_long_diagonal() {
        let cells = vec![(1, 1), (2, 1), (2, 2), (1, 2)];
        let g = DichotomousGraph::new(
            4,
            vec![Edge::short(0, 1), Edge::short(1, 2), Edge::short(2, 3), Edge::short(3, 0), Edge::long(0, 2)],
        )
        .unwrap();
        let layout = grid_coordinates(&g, &cells).unwrap();
        for e in g.short_edges() {
            assert!(len(layout.points[e.u.0], layout.points[e.v.0]) <= libm::sqrt(16.0 + 4.0));
        }
        assert!(crate::verify(&g, &realize_grid_short(&g, &cells).unwrap()).unwrap().valid);
    }

    #[test]
    fn all_long_grid() {
        let cells = vec![(1, 1), (2, 1), (1, 2), (2, 2)];
        let g = DichotomousGraph::new(
            4,
            vec![Edge::long(0, 1), Edge::long(0, 2), Edge::long(1, 3), Edge::long(2, 3)],
        )
        .unwrap();
        let layout = grid_coordinates(&g, &cells).unwrap();
        for e in g.edges() {
            assert!(len(layout.points[e.u.0], layout.points[e.v.0]) >= 5.0);
        }
        assert!(crate::verify(&g, &realize_grid_short(&g, &cells).unwrap()).unwrap().valid);
    }

    #[test]
    fn diagonal_long_pair_on_three_grid_is_below_n2_plus_one() {
        let cells = vec![(3, 2), (2, 3), (2, 2)];
        let g = DichotomousGraph::new(3, vec![Edge::long(0, 1), Edge::short(0, 2), Edge::short(1, 2)]).unwrap();
        let layout = grid_coordinates(&g, &cells).unwrap();
        assert_eq!(layout.n, 3);
        let d = len(layout.points[0], layout.points[1]);
        assert_eq!(d, libm::sqrt(98.0));
        assert!(d < 10.0 && d > 9.75);
        assert!(crate::verify(&g, &realize_grid_short(&g, &cells).unwrap()).unwrap().valid);
    }

    #[test]
    fn diagonal_short_edge_is_rejected() {
        let g = DichotomousGraph::new(2, vec![Edge::short(0, 1)]).unwrap();
        assert_eq!(
            grid_coordinates(&g, &[(1, 1), (2, 2)]),
            Err(ConstructError::NotGridAdjacent(VertexId(0), VertexId(1)))
        );
        assert!(matches!(grid_coordinates(&g, &[(1, 1), (1, 1)]), Err(ConstructError::NonInjectiveGridMap(..))));
    }
}
