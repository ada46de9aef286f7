use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use super::{DichotomousGraph, EdgeKind, VertexId};

/// One component of the long subgraph. `leaves[i]` hangs off `spine[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caterpillar {
    pub spine: Vec<VertexId>,
    pub leaves: Vec<Vec<VertexId>>,
}

impl Caterpillar {
    pub fn vertex_count(&self) -> usize {
        self.spine.len() + self.leaves.iter().map(Vec::len).sum::<usize>()
    }

    /// The long edges this caterpillar stands for, as sorted pairs.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for w in self.spine.windows(2) {
            out.push(sorted(w[0], w[1]));
        }
        for (s, ls) in self.spine.iter().zip(&self.leaves) {
            for &l in ls {
                out.push(sorted(*s, l));
            }
        }
        out
    }
}

fn sorted(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaterpillarDecomposition {
    /// Ordered by smallest member vertex. Vertices without long edges form
    /// single-vertex components.
    pub components: Vec<Caterpillar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("long subgraph component {0:?} is not a caterpillar")]
pub struct NotACaterpillar(pub Vec<VertexId>);

pub fn caterpillar_decompose(g: &DichotomousGraph) -> Result<CaterpillarDecomposition, NotACaterpillar> {
    let n = g.n();
    let long_nbrs: Vec<Vec<VertexId>> = g
        .vertices()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|(_, k)| *k == EdgeKind::Long)
                .map(|(w, _)| *w)
                .collect()
        })
        .collect();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut members = vec![VertexId(s)];
        let mut head = 0;
        while head < members.len() {
            let v = members[head];
            head += 1;
            for &w in &long_nbrs[v.0] {
                if !seen[w.0] {
                    seen[w.0] = true;
                    members.push(w);
                }
            }
        }
        members.sort();
        components.push(decompose_tree(&members, &long_nbrs).ok_or(NotACaterpillar(members))?);
    }
    Ok(CaterpillarDecomposition { components })
}

fn decompose_tree(members: &[VertexId], nbrs: &[Vec<VertexId>]) -> Option<Caterpillar> {
    let edge_count: usize = members.iter().map(|v| nbrs[v.0].len()).sum::<usize>() / 2;
    if edge_count + 1 != members.len() {
        return None;
    }
    match members.len() {
        1 => return Some(Caterpillar { spine: vec![members[0]], leaves: vec![Vec::new()] }),
        2 => {
            return Some(Caterpillar {
                spine: members.to_vec(),
                leaves: vec![Vec::new(), Vec::new()],
            })
        }
        _ => {}
    }
    let inner = |v: VertexId| nbrs[v.0].len() >= 2;
    let spine_nbrs = |v: VertexId| nbrs[v.0].iter().copied().filter(|&w| inner(w)).collect::<Vec<_>>();
    let inner_vertices: Vec<VertexId> = members.iter().copied().filter(|&v| inner(v)).collect();
    if inner_vertices.iter().any(|&v| spine_nbrs(v).len() > 2) {
        return None;
    }
    // ends of the spine path; the tree minus its leaves is connected
    let start = *inner_vertices.iter().find(|&&v| spine_nbrs(v).len() <= 1)?;
    let mut spine = vec![start];
    let mut prev: Option<VertexId> = None;
    let mut cur = start;
    loop {
        let next = spine_nbrs(cur).into_iter().find(|&w| Some(w) != prev);
        match next {
            Some(w) => {
                prev = Some(cur);
                cur = w;
                spine.push(w);
            }
            None => break,
        }
    }
    if spine.len() != inner_vertices.len() {
        return None;
    }
    let leaves = spine
        .iter()
        .map(|&s| {
            let mut ls: Vec<VertexId> = nbrs[s.0].iter().copied().filter(|&w| !inner(w)).collect();
            ls.sort();
            ls
        })
        .collect();
    Some(Caterpillar { spine, leaves })
}
