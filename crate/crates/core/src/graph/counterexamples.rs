//! Canonical dichotomous ordinal graphs that have no realization in the
//! plane or in a given dimension.

use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use super::generate::complete_bipartite;
use super::{DichotomousGraph, Edge};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// `K_{4,7}`: all four triples and the three pairs containing the last
    /// vertex of `U`. Vertices `0..4` form `U`.
    K47,
    /// `K_{5,5}` with `V(w_i) = {u_i, u_{i+1 mod 4}, u_5}` for `i < 5` and
    /// `V(w_5) = U \ {u_5}`. Vertices `0..5` form `U`.
    K55,
    /// The 3-degenerate 8-vertex graph: long triangle `v_0 v_1 v_2` (ids 0..3),
    /// `c` (id 3) short to the triangle, `w_i` (ids 4..7) long to `c` and short
    /// to the triangle minus `v_i`, and `x` (id 7) short to every `w_i`.
    ThreeDegPlane,
    /// `d + 2` base vertices plus one vertex per short/long assignment to them.
    EuclideanWitness(usize),
    /// `d + 1` base vertices plus one vertex per short/long assignment to them.
    SphereWitness(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CounterexampleError {
    #[error("unknown counterexample `{0}`")]
    UnknownName(String),
    #[error("dimension {0} is too small, need at least 2")]
    DimensionTooSmall(usize),
    #[error("counterexample `{0}` needs a dimension")]
    MissingDimension(String),
}

impl Counterexample {
    pub fn parse(name: &str, d: Option<usize>) -> Result<Counterexample, CounterexampleError> {
        let need_dim = || {
            let d = d.ok_or_else(|| CounterexampleError::MissingDimension(name.into()))?;
            if d < 2 {
                Err(CounterexampleError::DimensionTooSmall(d))
            } else {
                Ok(d)
            }
        };
        match name {
            "k47" => Ok(Counterexample::K47),
            "k55" => Ok(Counterexample::K55),
            "three_deg_plane" => Ok(Counterexample::ThreeDegPlane),
            "euclidean_witness" => Ok(Counterexample::EuclideanWitness(need_dim()?)),
            "sphere_witness" => Ok(Counterexample::SphereWitness(need_dim()?)),
            _ => Err(CounterexampleError::UnknownName(name.into())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Counterexample::K47 => "k47",
            Counterexample::K55 => "k55",
            Counterexample::ThreeDegPlane => "three_deg_plane",
            Counterexample::EuclideanWitness(_) => "euclidean_witness",
            Counterexample::SphereWitness(_) => "sphere_witness",
        }
    }
}

pub fn k47_subsets() -> Vec<Subset> {
    let mut out: Vec<Subset> = (0..4).map(|i| Subset::singleton(i).complement(4)).collect();
    out.extend((0..3).map(|i| Subset::from_indices([i, 3])));
    out
}

pub fn k55_subsets() -> Vec<Subset> {
    let mut out: Vec<Subset> = (0..4).map(|i| Subset::from_indices([i, (i + 1) % 4, 4])).collect();
    out.push(Subset::full(4));
    out
}

fn witness(base: usize) -> DichotomousGraph {
    let subsets: Vec<Subset> = (0..1u64 << base).map(Subset).collect();
    complete_bipartite(base, &subsets)
}

pub fn counterexample(which: Counterexample) -> Result<DichotomousGraph, CounterexampleError> {
    Ok(match which {
        Counterexample::K47 => complete_bipartite(4, &k47_subsets()),
        Counterexample::K55 => complete_bipartite(5, &k55_subsets()),
        Counterexample::ThreeDegPlane => {
            let (c, x) = (3, 7);
            let mut edges = Vec::new();
            for (a, b) in [(0, 1), (1, 2), (0, 2)] {
                edges.push(Edge::long(a, b));
            }
            for v in 0..3 {
                edges.push(Edge::short(c, v));
            }
            for i in 0..3 {
                let w = 4 + i;
                edges.push(Edge::long(w, c));
                for v in (0..3).filter(|&v| v != i) {
                    edges.push(Edge::short(w, v));
                }
                edges.push(Edge::short(x, w));
            }
            DichotomousGraph::new(8, edges).expect("static graph is simple")
        }
        Counterexample::EuclideanWitness(d) | Counterexample::SphereWitness(d) if d < 2 => {
            return Err(CounterexampleError::DimensionTooSmall(d))
        }
        Counterexample::EuclideanWitness(d) => witness(d + 2),
        Counterexample::SphereWitness(d) => witness(d + 1),
    })
}
