//! Metric spaces, embeddings and the realization verifier.

mod chord;

use alloc::vec::Vec;
use core::f64::consts::PI;

use thiserror::Error;

use crate::graph::{DichotomousGraph, EdgeKind};

pub use chord::{chord_cap_check, ChordError};

/// Tolerance on `‖p‖ = 1` for sphere points.
pub const SPHERE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    Euclidean(usize),
    /// The unit sphere `S^d` inside `R^{d+1}` with the geodesic metric.
    Sphere(usize),
}

impl Space {
    pub fn ambient_dim(self) -> usize {
        match self {
            Space::Euclidean(d) => d,
            Space::Sphere(d) => d + 1,
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Space::Euclidean(d) | Space::Sphere(d) => d,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Point(pub Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Point {
        Point(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dot(&self, other: &Point) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.dot(self))
    }

    #[must_use]
    pub fn scaled(&self, s: f64) -> Point {
        Point(self.0.iter().map(|x| x * s).collect())
    }

    #[must_use]
    pub fn normalized(&self) -> Point {
        self.scaled(1.0 / self.norm())
    }

    pub fn euclidean_distance(&self, other: &Point) -> f64 {
        let s: f64 = self.0.iter().zip(&other.0).map(|(a, b)| (a - b) * (a - b)).sum();
        libm::sqrt(s)
    }
}

impl From<Vec<f64>> for Point {
    fn from(v: Vec<f64>) -> Point {
        Point(v)
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum GeometryError {
    #[error("space dimension must be at least 1")]
    ZeroDimension,
    #[error("point {index} has {got} coordinates, the space needs {expected}")]
    DimensionMismatch { index: usize, expected: usize, got: usize },
    #[error("point {index} has norm {norm}, not on the unit sphere")]
    NotOnSphere { index: usize, norm: f64 },
    #[error("embedding has {have} points but the graph has {need} vertices")]
    MissingCoordinates { have: usize, need: usize },
}

/// One point per vertex in a declared space.
#[derive(Clone, Debug, PartialEq)]
pub struct Embedding {
    space: Space,
    coords: Vec<Point>,
}

impl Embedding {
    pub fn new(space: Space, coords: Vec<Point>) -> Result<Embedding, GeometryError> {
        if space.dim() == 0 {
            return Err(GeometryError::ZeroDimension);
        }
        let expected = space.ambient_dim();
        for (index, p) in coords.iter().enumerate() {
            if p.dim() != expected {
                return Err(GeometryError::DimensionMismatch { index, expected, got: p.dim() });
            }
            if let Space::Sphere(_) = space {
                let norm = p.norm();
                if !(libm::fabs(norm - 1.0) <= SPHERE_TOLERANCE) {
                    return Err(GeometryError::NotOnSphere { index, norm });
                }
            }
        }
        Ok(Embedding { space, coords })
    }

    /// Sphere embedding from arbitrary nonzero vectors, renormalized.
    pub fn on_sphere(d: usize, coords: Vec<Point>) -> Result<Embedding, GeometryError> {
        Embedding::new(Space::Sphere(d), coords.iter().map(Point::normalized).collect())
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn coords(&self) -> &[Point] {
        &self.coords
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.coords[i]
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn into_coords(self) -> Vec<Point> {
        self.coords
    }

    /// Euclidean embeddings only: multiply every coordinate by `s`.
    #[must_use]
    pub fn scaled(&self, s: f64) -> Embedding {
        debug_assert!(matches!(self.space, Space::Euclidean(_)));
        Embedding { space: self.space, coords: self.coords.iter().map(|p| p.scaled(s)).collect() }
    }
}

/// Euclidean length or central angle in `[0, π]`.
pub fn distance(space: Space, p: &Point, q: &Point) -> Result<f64, GeometryError> {
    let expected = space.ambient_dim();
    for (index, x) in [p, q].into_iter().enumerate() {
        if x.dim() != expected {
            return Err(GeometryError::DimensionMismatch { index, expected, got: x.dim() });
        }
    }
    Ok(unchecked_distance(space, p, q))
}

pub(crate) fn unchecked_distance(space: Space, p: &Point, q: &Point) -> f64 {
    match space {
        Space::Euclidean(_) => p.euclidean_distance(q),
        Space::Sphere(_) => libm::acos(p.dot(q).clamp(-1.0, 1.0)),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RealizationReport {
    /// Indexed like `DichotomousGraph::edges`.
    pub per_edge_length: Vec<f64>,
    /// `0` when there are no short edges.
    pub max_short: f64,
    /// `+∞` when there are no long edges.
    pub min_long: f64,
    pub gap: f64,
    pub valid: bool,
    /// Strictly between `max_short` and `min_long` when valid.
    pub threshold: Option<f64>,
}

/// Checks strict separation of short and long edge lengths. No tolerance is
/// applied to the comparison.
pub fn verify(g: &DichotomousGraph, emb: &Embedding) -> Result<RealizationReport, GeometryError> {
    if emb.len() < g.n() {
        return Err(GeometryError::MissingCoordinates { have: emb.len(), need: g.n() });
    }
    let space = emb.space();
    let mut max_short = 0.0f64;
    let mut min_long = f64::INFINITY;
    let mut per_edge_length = Vec::with_capacity(g.m());
    for e in g.edges() {
        let len = unchecked_distance(space, emb.point(e.u.0), emb.point(e.v.0));
        per_edge_length.push(len);
        match e.kind {
            EdgeKind::Short => max_short = max_short.max(len),
            EdgeKind::Long => min_long = min_long.min(len),
        }
    }
    let gap = min_long - max_short;
    let valid = gap > 0.0;
    let threshold = if !valid {
        None
    } else if min_long.is_finite() {
        Some(max_short + gap / 2.0)
    } else {
        Some(match space {
            Space::Euclidean(_) if max_short > 0.0 => 2.0 * max_short,
            Space::Euclidean(_) => 1.0,
            Space::Sphere(_) => (max_short + PI) / 2.0,
        })
    };
    Ok(RealizationReport { per_edge_length, max_short, min_long, gap, valid, threshold })
}
