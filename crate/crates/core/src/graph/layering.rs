use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use super::{DichotomousGraph, VertexId};

/// BFS layers of the short subgraph with a left-to-right order on every
/// layer derived from the rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layering {
    pub layers: Vec<Vec<VertexId>>,
    pub layer_of: Vec<usize>,
    /// Position of each vertex inside its layer.
    pub position: Vec<usize>,
    /// Parents in the previous layer, left to right (at most two).
    pub parents: Vec<Vec<VertexId>>,
    /// Children in the next layer, left to right.
    pub children: Vec<Vec<VertexId>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LayeringError {
    #[error("root {0} is out of range")]
    BadRoot(usize),
    #[error("short subgraph is not connected; vertex {0} is unreachable")]
    NotConnected(VertexId),
    #[error("vertex {0} has more than two parents")]
    TooManyParents(VertexId),
    #[error("short edge {0}-{1} joins two vertices of the same layer")]
    SameLayerEdge(VertexId, VertexId),
    #[error("adjacency order is not an outerplanar embedding near vertex {0}: {1}")]
    InconsistentEmbedding(VertexId, &'static str),
}

struct Rotation {
    rot: Vec<Vec<VertexId>>,
    pos: Vec<BTreeMap<VertexId, usize>>,
}

impl Rotation {
    fn new(g: &DichotomousGraph) -> Rotation {
        let rot: Vec<Vec<VertexId>> = g.vertices().map(|v| g.short_rotation(v)).collect();
        let pos = rot
            .iter()
            .map(|r| r.iter().enumerate().map(|(i, &w)| (w, i)).collect())
            .collect();
        Rotation { rot, pos }
    }

    /// Clockwise successor of `u` around `v`.
    fn succ(&self, v: VertexId, u: VertexId) -> VertexId {
        let r = &self.rot[v.0];
        r[(self.pos[v.0][&u] + 1) % r.len()]
    }

    fn pred(&self, v: VertexId, u: VertexId) -> VertexId {
        let r = &self.rot[v.0];
        r[(self.pos[v.0][&u] + r.len() - 1) % r.len()]
    }

    /// Neighbors of `v` clockwise, starting right after `u`.
    fn after(&self, v: VertexId, u: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let r = &self.rot[v.0];
        let start = self.pos[v.0][&u] + 1;
        (0..r.len() - 1).map(move |i| r[(start + i) % r.len()])
    }

    /// A corner `(a, root, b)` of a face whose boundary walk meets every
    /// vertex, so that the children of the root start at `b`.
    fn outer_corner(&self, root: VertexId, n: usize) -> Option<(VertexId, VertexId)> {
        let mut used: Vec<Vec<bool>> = self.rot.iter().map(|r| vec![false; r.len()]).collect();
        for s in 0..n {
            for i in 0..self.rot[s].len() {
                if used[s][i] {
                    continue;
                }
                let mut seen = vec![false; n];
                let mut corner = None;
                let (mut u, mut v) = (VertexId(s), self.rot[s][i]);
                loop {
                    used[u.0][self.pos[u.0][&v]] = true;
                    seen[u.0] = true;
                    let w = self.succ(v, u);
                    if v == root && corner.is_none() {
                        corner = Some((u, w));
                    }
                    u = v;
                    v = w;
                    if u == VertexId(s) && v == self.rot[s][i] {
                        break;
                    }
                }
                if seen.iter().all(|&b| b) {
                    return corner;
                }
            }
        }
        None
    }
}

/// Layers of the short subgraph of the connected graph `g` rooted at `root`.
///
/// Children of the root are read clockwise from the outer-face corner; the
/// children of any other vertex are read clockwise starting after its
/// leftmost parent.
pub fn bfs_layering(g: &DichotomousGraph, root: VertexId) -> Result<Layering, LayeringError> {
    let n = g.n();
    if root.0 >= n {
        return Err(LayeringError::BadRoot(root.0));
    }
    let rotation = Rotation::new(g);
    let mut layer_of = vec![usize::MAX; n];
    layer_of[root.0] = 0;
    let mut frontier = vec![root];
    let mut depth = 0;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &v in &frontier {
            for &w in &rotation.rot[v.0] {
                if layer_of[w.0] == usize::MAX {
                    layer_of[w.0] = depth + 1;
                    next.push(w);
                }
            }
        }
        depth += 1;
        frontier = next;
    }
    if let Some(v) = (0..n).find(|&v| layer_of[v] == usize::MAX) {
        return Err(LayeringError::NotConnected(VertexId(v)));
    }
    for v in g.vertices() {
        for &w in &rotation.rot[v.0] {
            if layer_of[w.0] == layer_of[v.0] && v < w {
                return Err(LayeringError::SameLayerEdge(v, w));
            }
        }
        let parents = rotation.rot[v.0].iter().filter(|w| layer_of[w.0] + 1 == layer_of[v.0]).count();
        if parents > 2 {
            return Err(LayeringError::TooManyParents(v));
        }
    }

    let mut layers: Vec<Vec<VertexId>> = vec![vec![root]];
    let mut position = vec![0; n];
    let mut parents: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut children: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    loop {
        let k = layers.len() - 1;
        let mut next: Vec<VertexId> = Vec::new();
        for &v in &layers[k] {
            let is_child = |w: &VertexId| layer_of[w.0] == k + 1;
            let kids: Vec<VertexId> = if rotation.rot[v.0].is_empty() {
                Vec::new()
            } else if k == 0 {
                match rotation.outer_corner(v, n) {
                    Some((_, b)) => core::iter::once(b).chain(rotation.after(v, b)).collect(),
                    None => return Err(LayeringError::InconsistentEmbedding(v, "no face meets every vertex")),
                }
            } else {
                let ps = &parents[v.0];
                let left = ps[0];
                if ps.len() == 2 && rotation.rot[v.0].len() > 2 && rotation.pred(v, left) != ps[1] {
                    return Err(LayeringError::InconsistentEmbedding(v, "parents are not consecutive"));
                }
                rotation.after(v, left).filter(|w| is_child(w)).collect()
            };
            for (i, &c) in kids.iter().enumerate() {
                if parents[c.0].is_empty() {
                    next.push(c);
                } else if i != 0 || next.last() != Some(&c) {
                    return Err(LayeringError::InconsistentEmbedding(c, "shared child is not between its parents"));
                }
                parents[c.0].push(v);
            }
            children[v.0] = kids;
        }
        if next.is_empty() {
            break;
        }
        for (i, &v) in next.iter().enumerate() {
            position[v.0] = i;
        }
        layers.push(next);
    }
    for v in g.vertices() {
        if v != root && parents[v.0].is_empty() {
            return Err(LayeringError::InconsistentEmbedding(v, "vertex missing from the layer order"));
        }
    }
    Ok(Layering { layers, layer_of, position, parents, children })
}
