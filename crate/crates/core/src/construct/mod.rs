//! One constructor per realizable graph class, plus the dispatcher.

mod auto;
mod caterpillar;
mod degenerate;
mod grid;
mod k_templates;
mod outerplanar;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::arrangement::ArrangementError;
use crate::geometry::{verify, Embedding, GeometryError, Point, Space};
use crate::graph::{DichotomousGraph, LayeringError, NotACaterpillar, VertexId};

pub use auto::{realize_auto, AutoOptions, AutoOutcome, Method, MethodFailure};
pub use caterpillar::{realize_caterpillar_long, CaterpillarParams, CaterpillarRealization};
pub use degenerate::{realize_degenerate, DegenerateRealization, MAX_ATTEMPTS};
pub use grid::{grid_coordinates, realize_grid_short, GridLayout};
pub use k_templates::{
    choose_k4_template, k3m_template, realize_k3m, realize_k4m, K4Template, K4Variant, CENTRAL_PETAL_RADIUS, CYCLIC_FOUR_SIDE,
    K3M_SIDE,
};
pub use outerplanar::realize_outerplanar_short;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum ConstructError {
    #[error("graph is not a complete bipartite K_{{{0},m}}")]
    NotCompleteBipartite(usize),
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error(transparent)]
    Layering(#[from] LayeringError),
    #[error("numerical failure at layer {layer}: gap {gap}")]
    NumericalFailure { layer: usize, gap: f64 },
    #[error("short edge {0}-{1} does not join grid-adjacent cells")]
    NotGridAdjacent(VertexId, VertexId),
    #[error("vertices {0} and {1} share a grid cell")]
    NonInjectiveGridMap(VertexId, VertexId),
    #[error("grid map has {have} entries for {need} vertices or uses a zero index")]
    BadGridMap { have: usize, need: usize },
    #[error(transparent)]
    NotACaterpillar(#[from] NotACaterpillar),
    #[error("degeneracy {k} exceeds dimension {d}")]
    DegeneracyTooHigh { k: usize, d: usize },
    #[error("dimension {0} is below the supported minimum")]
    DimensionTooSmall(usize),
    #[error("linear system stayed singular after {0} attempts")]
    SingularSystem(usize),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("{method} produced an invalid embedding (gap {gap})")]
    VerificationFailed { method: &'static str, gap: f64 },
    #[error("no method succeeded: {}", summarize(.0))]
    NoMethodSucceeded(Vec<MethodFailure>),
}

fn summarize(failures: &[MethodFailure]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, f) in failures.iter().enumerate() {
        if i > 0 {
            s.push_str("; ");
        }
        let _ = write!(s, "component {} {}: {}", f.component, f.method.name(), f.reason);
    }
    s
}

/// Verifies `emb` and rescales a Euclidean embedding so the threshold is 1.
pub(crate) fn verified_unit_threshold(
    g: &DichotomousGraph,
    emb: Embedding,
    method: &'static str,
) -> Result<Embedding, ConstructError> {
    let report = verify(g, &emb)?;
    match report.threshold {
        Some(t) if report.valid => Ok(match emb.space() {
            Space::Euclidean(_) if t > 0.0 && t.is_finite() => emb.scaled(1.0 / t),
            _ => emb,
        }),
        _ => Err(ConstructError::VerificationFailed { method, gap: report.gap }),
    }
}

pub(crate) fn planar(points: &[[f64; 2]]) -> Embedding {
    Embedding::new(Space::Euclidean(2), points.iter().map(|p| Point(vec![p[0], p[1]])).collect())
        .expect("planar points are two dimensional")
}

/// Lays out per-component Euclidean embeddings with threshold 1 along the
/// first axis, `3` apart, padding every point to `dim` coordinates.
pub(crate) fn combine_components(n: usize, dim: usize, parts: &[(Vec<VertexId>, Embedding)]) -> Embedding {
    let mut coords = vec![Point(vec![0.0; dim]); n];
    let mut offset = 0.0;
    for (vertices, emb) in parts {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for p in emb.coords() {
            lo = lo.min(p.0[0]);
            hi = hi.max(p.0[0]);
        }
        for (local, v) in vertices.iter().enumerate() {
            let mut c = emb.point(local).0.clone();
            c.resize(dim, 0.0);
            c[0] += offset - lo;
            coords[v.0] = Point(c);
        }
        offset += (hi - lo) + 3.0;
    }
    Embedding::new(Space::Euclidean(dim), coords).expect("padded points share one dimension")
}
