//! Graph model: simple undirected graphs whose edges are labeled short or long.

mod caterpillar;
mod components;
pub mod counterexamples;
mod degeneracy;
pub mod generate;
mod layering;

use alloc::collections::BTreeMap;
use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

pub use caterpillar::{caterpillar_decompose, Caterpillar, CaterpillarDecomposition, NotACaterpillar};
pub use components::{short_components, ShortComponent};
pub use counterexamples::{counterexample, Counterexample, CounterexampleError};
pub use degeneracy::{degeneracy, DegeneracyOrdering};
pub use layering::{bfs_layering, Layering, LayeringError};

/// Dense vertex index in `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum EdgeKind {
    Short,
    Long,
}

impl EdgeKind {
    pub fn flipped(self) -> EdgeKind {
        match self {
            EdgeKind::Short => EdgeKind::Long,
            EdgeKind::Long => EdgeKind::Short,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn new(u: usize, v: usize, kind: EdgeKind) -> Edge {
        Edge { u: VertexId(u), v: VertexId(v), kind }
    }

    pub fn short(u: usize, v: usize) -> Edge {
        Edge::new(u, v, EdgeKind::Short)
    }

    pub fn long(u: usize, v: usize) -> Edge {
        Edge::new(u, v, EdgeKind::Long)
    }

    fn key(&self) -> (usize, usize) {
        pair_key(self.u, self.v)
    }
}

fn pair_key(a: VertexId, b: VertexId) -> (usize, usize) {
    if a.0 <= b.0 {
        (a.0, b.0)
    } else {
        (b.0, a.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {0} references vertex {1} but the graph has {2} vertices")]
    VertexOutOfRange(usize, usize, usize),
    #[error("edge {0} is a self loop on vertex {1}")]
    SelfLoop(usize, usize),
    #[error("edge {0} duplicates the vertex pair ({1}, {2})")]
    DuplicateEdge(usize, usize, usize),
    #[error("adjacency order for vertex {0}: {1}")]
    BadAdjacencyOrder(usize, &'static str),
}

/// A simple graph `G = (V, E_s ∪ E_l)` with every edge labeled short or long.
///
/// The optional adjacency order is a per-vertex rotation of neighbors. It only
/// matters for the outerplanar constructor, which reads the clockwise order of
/// short neighbors around each vertex from it.
#[derive(Clone, PartialEq, Debug)]
pub struct DichotomousGraph {
    n: usize,
    edges: Vec<Edge>,
    adjacency_order: Option<Vec<Vec<VertexId>>>,
    adj: Vec<Vec<(VertexId, EdgeKind)>>,
    index: BTreeMap<(usize, usize), usize>,
}

impl DichotomousGraph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<DichotomousGraph, GraphError> {
        let mut index = BTreeMap::new();
        let mut adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for w in [e.u, e.v] {
                if w.0 >= n {
                    return Err(GraphError::VertexOutOfRange(i, w.0, n));
                }
            }
            if e.u == e.v {
                return Err(GraphError::SelfLoop(i, e.u.0));
            }
            let (a, b) = e.key();
            if index.insert((a, b), i).is_some() {
                return Err(GraphError::DuplicateEdge(i, a, b));
            }
            adj[e.u.0].push((e.v, e.kind));
            adj[e.v.0].push((e.u, e.kind));
        }
        Ok(DichotomousGraph { n, edges, adjacency_order: None, adj, index })
    }

    /// Attach a neighbor rotation. Each list must contain every short
    /// neighbor of its vertex exactly once and may also list long neighbors.
    pub fn with_adjacency_order(
        mut self,
        order: Vec<Vec<VertexId>>,
    ) -> Result<DichotomousGraph, GraphError> {
        if order.len() != self.n {
            return Err(GraphError::BadAdjacencyOrder(order.len(), "one list per vertex required"));
        }
        for (v, list) in order.iter().enumerate() {
            let mut seen = BTreeMap::new();
            for &w in list {
                if self.kind(VertexId(v), w).is_none() {
                    return Err(GraphError::BadAdjacencyOrder(v, "lists a non-neighbor"));
                }
                if seen.insert(w, ()).is_some() {
                    return Err(GraphError::BadAdjacencyOrder(v, "lists a neighbor twice"));
                }
            }
            let shorts = self.adj[v].iter().filter(|(_, k)| *k == EdgeKind::Short);
            for (w, _) in shorts {
                if !seen.contains_key(w) {
                    return Err(GraphError::BadAdjacencyOrder(v, "misses a short neighbor"));
                }
            }
        }
        self.adjacency_order = Some(order);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn adjacency_order(&self) -> Option<&[Vec<VertexId>]> {
        self.adjacency_order.as_deref()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId)
    }

    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeKind)] {
        &self.adj[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.0].len()
    }

    pub fn kind(&self, a: VertexId, b: VertexId) -> Option<EdgeKind> {
        self.index.get(&pair_key(a, b)).map(|&i| self.edges[i].kind)
    }

    pub fn short_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.kind == EdgeKind::Short)
    }

    pub fn long_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.kind == EdgeKind::Long)
    }

    /// Short neighbors of `v` in rotation order (adjacency order when given,
    /// edge-list order otherwise).
    pub fn short_rotation(&self, v: VertexId) -> Vec<VertexId> {
        match &self.adjacency_order {
            Some(order) => order[v.0]
                .iter()
                .copied()
                .filter(|&w| self.kind(v, w) == Some(EdgeKind::Short))
                .collect(),
            None => self.adj[v.0]
                .iter()
                .filter(|(_, k)| *k == EdgeKind::Short)
                .map(|(w, _)| *w)
                .collect(),
        }
    }

    /// Same underlying graph with every edge relabeled by `f`.
    pub fn relabeled<F: FnMut(usize, &Edge) -> EdgeKind>(&self, mut f: F) -> DichotomousGraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| Edge { kind: f(i, e), ..*e })
            .collect();
        let mut g = DichotomousGraph::new(self.n, edges).expect("relabeling keeps the graph simple");
        g.adjacency_order = self.adjacency_order.clone();
        g
    }

    /// Same graph without edge `i`.
    pub fn without_edge(&self, i: usize) -> DichotomousGraph {
        let mut edges = self.edges.clone();
        edges.remove(i);
        let mut g = DichotomousGraph::new(self.n, edges).expect("removing an edge keeps the graph simple");
        g.adjacency_order = self.adjacency_order.as_ref().map(|order| {
            let e = self.edges[i];
            let mut order = order.clone();
            order[e.u.0].retain(|&w| w != e.v);
            order[e.v.0].retain(|&w| w != e.u);
            order
        });
        g
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`. The adjacency order is restricted accordingly.
    pub fn induced(&self, vertices: &[VertexId]) -> DichotomousGraph {
        let mut local = vec![usize::MAX; self.n];
        for (i, v) in vertices.iter().enumerate() {
            local[v.0] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| local[e.u.0] != usize::MAX && local[e.v.0] != usize::MAX)
            .map(|e| Edge::new(local[e.u.0], local[e.v.0], e.kind))
            .collect();
        let mut g = DichotomousGraph::new(vertices.len(), edges).expect("induced subgraph is simple");
        if let Some(order) = &self.adjacency_order {
            let restricted = vertices
                .iter()
                .map(|v| {
                    order[v.0]
                        .iter()
                        .filter(|w| local[w.0] != usize::MAX)
                        .map(|w| VertexId(local[w.0]))
                        .collect()
                })
                .collect();
            g.adjacency_order = Some(restricted);
        }
        g
    }

    /// Two-coloring of the whole graph (both edge kinds), if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for &(w, _) in &self.adj[v] {
                    match side[w.0] {
                        None => {
                            side[w.0] = Some(!sv);
                            queue.push_back(w.0);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    /// If the graph is complete bipartite `K_{a,b}`, returns the two sides
    /// (smaller side first; ties keep the side containing vertex 0 first).
    pub fn complete_bipartite_sides(&self) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
        let side = self.bipartition()?;
        let left: Vec<VertexId> = self.vertices().filter(|v| !side[v.0]).collect();
        let right: Vec<VertexId> = self.vertices().filter(|v| side[v.0]).collect();
        if left.is_empty() || right.is_empty() || left.len() * right.len() != self.m() {
            return None;
        }
        if right.len() < left.len() {
            Some((right, left))
        } else {
            Some((left, right))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_simple_input() {
        assert_eq!(
            DichotomousGraph::new(2, vec![Edge::short(0, 0)]),
            Err(GraphError::SelfLoop(0, 0))
        );
        assert_eq!(
            DichotomousGraph::new(3, vec![Edge::short(0, 1), Edge::long(1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0, 1))
        );
        assert_eq!(
            DichotomousGraph::new(2, vec![Edge::short(0, 2)]),
            Err(GraphError::VertexOutOfRange(0, 2, 2))
        );
    }

    #[test]
    fn adjacency_order_is_validated() {
        let g = DichotomousGraph::new(3, vec![Edge::short(0, 1), Edge::short(0, 2)]).unwrap();
        let bad = vec![vec![VertexId(1)], vec![VertexId(0)], vec![VertexId(0)]];
        assert!(matches!(
            g.clone().with_adjacency_order(bad),
            Err(GraphError::BadAdjacencyOrder(0, _))
        ));
        let good = vec![vec![VertexId(2), VertexId(1)], vec![VertexId(0)], vec![VertexId(0)]];
        let g = g.with_adjacency_order(good).unwrap();
        assert_eq!(g.short_rotation(VertexId(0)), [VertexId(2), VertexId(1)]);
    }

    #[test]
    fn complete_bipartite_detection() {
        let mut edges = Vec::new();
        for u in 0..3 {
            for w in 3..8 {
                edges.push(Edge::short(u, w));
            }
        }
        let g = DichotomousGraph::new(8, edges).unwrap();
        let (a, b) = g.complete_bipartite_sides().unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(b.len(), 5);
        let g = g.without_edge(0);
        assert!(g.complete_bipartite_sides().is_none());
    }

    #[test]
    fn triangle_is_not_bipartite() {
        let g = DichotomousGraph::new(3, vec![Edge::short(0, 1), Edge::short(1, 2), Edge::long(0, 2)]).unwrap();
        assert!(g.bipartition().is_none());
    }
}
