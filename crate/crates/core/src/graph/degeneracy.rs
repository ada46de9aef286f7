use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{DichotomousGraph, VertexId};

/// Vertex ordering in which every vertex has at most `k` earlier neighbors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    pub order: Vec<VertexId>,
    /// Indexed by vertex id: neighbors placed before the vertex in `order`.
    pub back_degree: Vec<usize>,
    pub k: usize,
}

impl DegeneracyOrdering {
    /// Position of every vertex in `order`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, v) in self.order.iter().enumerate() {
            pos[v.0] = i;
        }
        pos
    }
}

/// Min-degree peeling with a bucket queue. Ties go to the smallest id; the
/// returned order is the reversed removal order, so `k` is the degeneracy.
pub fn degeneracy(g: &DichotomousGraph) -> DegeneracyOrdering {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); max_deg + 1];
    for (v, &d) in deg.iter().enumerate() {
        buckets[d].insert(v);
    }
    let mut removed = vec![false; n];
    let mut back_degree = vec![0; n];
    let mut removal = Vec::with_capacity(n);
    let mut k = 0;
    let mut low: usize = 0;
    for _ in 0..n {
        // a removal lowers neighbor degrees by one, so the minimum can drop by one
        low = low.saturating_sub(1);
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = buckets[low].pop_first().unwrap();
        removed[v] = true;
        back_degree[v] = low;
        k = k.max(low);
        removal.push(VertexId(v));
        for &(w, _) in g.neighbors(VertexId(v)) {
            if !removed[w.0] {
                let d = deg[w.0];
                buckets[d].remove(&w.0);
                deg[w.0] = d - 1;
                buckets[d - 1].insert(w.0);
            }
        }
    }
    removal.reverse();
    DegeneracyOrdering { order: removal, back_degree, k }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn path(n: usize) -> DichotomousGraph {
        DichotomousGraph::new(n, (1..n).map(|i| Edge::short(i - 1, i)).collect()).unwrap()
    }

    #[test]
    fn path_is_one_degenerate() {
        let o = degeneracy(&path(5));
        assert_eq!(o.k, 1);
        let pos = o.positions();
        for v in 0..5 {
            let earlier = path(5)
                .neighbors(VertexId(v))
                .iter()
                .filter(|(w, _)| pos[w.0] < pos[v])
                .count();
            assert_eq!(earlier, o.back_degree[v]);
        }
    }

    #[test]
    fn empty_graph() {
        let g = DichotomousGraph::new(0, Vec::new()).unwrap();
        assert_eq!(degeneracy(&g).k, 0);
        let g = DichotomousGraph::new(3, Vec::new()).unwrap();
        assert_eq!(degeneracy(&g).k, 0);
    }
}
