use alloc::vec;
use alloc::vec::Vec;

use super::{DichotomousGraph, EdgeKind, VertexId};

/// One connected component of the short subgraph, as an induced subgraph.
/// Local vertex `i` of `graph` is `vertices[i]` in the parent graph.
#[derive(Clone, Debug)]
pub struct ShortComponent {
    pub vertices: Vec<VertexId>,
    pub graph: DichotomousGraph,
}

/// Components of `(V, E_s)` ordered by their smallest vertex. Long edges
/// between different components are dropped.
pub fn short_components(g: &DichotomousGraph) -> Vec<ShortComponent> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut groups: Vec<Vec<VertexId>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = groups.len();
        comp[s] = id;
        let mut members = vec![VertexId(s)];
        let mut head = 0;
        while head < members.len() {
            let v = members[head];
            head += 1;
            for &(w, kind) in g.neighbors(v) {
                if kind == EdgeKind::Short && comp[w.0] == usize::MAX {
                    comp[w.0] = id;
                    members.push(w);
                }
            }
        }
        members.sort();
        groups.push(members);
    }
    groups
        .into_iter()
        .map(|vertices| ShortComponent { graph: g.induced(&vertices), vertices })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    #[test]
    fn two_triangles_joined_by_a_long_edge() {
        let mut edges = Vec::new();
        for (a, b) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
            edges.push(Edge::short(a, b));
        }
        edges.push(Edge::long(2, 3));
        let g = DichotomousGraph::new(6, edges).unwrap();
        let comps = short_components(&g);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.graph.m() == 3 && c.graph.long_edges().count() == 0));
    }

    #[test]
    fn no_short_edges_gives_singletons() {
        let g = DichotomousGraph::new(4, vec![Edge::long(0, 1), Edge::long(2, 3)]).unwrap();
        let comps = short_components(&g);
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|c| c.vertices.len() == 1 && c.graph.m() == 0));
    }
}
