//! Geometric realizations of dichotomous ordinal graphs.
//!
//! A dichotomous ordinal graph is a simple graph whose edges are labeled
//! either short or long. A realization places the vertices in a metric space
//! so that every short edge is strictly shorter than every long edge. This
//! crate contains the graph model, the realization verifier, one constructor
//! per known realizable class, a penalty-based numerical fallback, and the
//! counting bounds that rule realizations out for dense graphs.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod arrangement;
pub mod bounds;
pub mod construct;
pub mod geometry;
pub mod graph;
mod linalg;
pub mod solver;
pub mod subset;

pub use geometry::{distance, verify, Embedding, Point, RealizationReport, Space};
pub use graph::{DichotomousGraph, Edge, EdgeKind, GraphError, VertexId};
pub use subset::Subset;
