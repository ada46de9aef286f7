//! JSON file formats for graphs, embeddings, disk centers and grid maps.

use dichotomy_core::{DichotomousGraph, Edge, EdgeKind, Embedding, GraphError, Point, Space, VertexId};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindJson {
    Short,
    Long,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub u: usize,
    pub v: usize,
    pub kind: KindJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<EdgeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adjacency_order: Option<Vec<Vec<usize>>>,
}

impl GraphJson {
    pub fn from_graph(g: &DichotomousGraph) -> GraphJson {
        GraphJson {
            n: g.n(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeJson {
                    u: e.u.0,
                    v: e.v.0,
                    kind: match e.kind {
                        EdgeKind::Short => KindJson::Short,
                        EdgeKind::Long => KindJson::Long,
                    },
                })
                .collect(),
            adjacency_order: g.adjacency_order().map(|o| o.iter().map(|r| r.iter().map(|v| v.0).collect()).collect()),
        }
    }

    pub fn to_graph(&self) -> Result<DichotomousGraph, GraphError> {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let kind = match e.kind {
                    KindJson::Short => EdgeKind::Short,
                    KindJson::Long => EdgeKind::Long,
                };
                Edge::new(e.u, e.v, kind)
            })
            .collect();
        let g = DichotomousGraph::new(self.n, edges)?;
        match &self.adjacency_order {
            None => Ok(g),
            Some(order) => g.with_adjacency_order(order.iter().map(|r| r.iter().map(|&v| VertexId(v)).collect()).collect()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceJson {
    Euclidean(usize),
    Sphere(usize),
}

impl From<Space> for SpaceJson {
    fn from(s: Space) -> SpaceJson {
        match s {
            Space::Euclidean(d) => SpaceJson::Euclidean(d),
            Space::Sphere(d) => SpaceJson::Sphere(d),
        }
    }
}

impl From<SpaceJson> for Space {
    fn from(s: SpaceJson) -> Space {
        match s {
            SpaceJson::Euclidean(d) => Space::Euclidean(d),
            SpaceJson::Sphere(d) => Space::Sphere(d),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub space: SpaceJson,
    pub coords: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
}

impl EmbeddingJson {
    pub fn from_embedding(emb: &Embedding, threshold: Option<f64>) -> EmbeddingJson {
        EmbeddingJson {
            space: emb.space().into(),
            coords: emb.coords().iter().map(|p| p.0.clone()).collect(),
            threshold,
        }
    }

    pub fn to_embedding(&self) -> Result<Embedding, dichotomy_core::geometry::GeometryError> {
        Embedding::new(self.space.into(), self.coords.iter().cloned().map(Point).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CentersJson {
    pub centers: Vec<[f64; 2]>,
}

/// 1-based `[row, column]` cell per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridMapJson {
    pub cells: Vec<[usize; 2]>,
}

impl GridMapJson {
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.cells.iter().map(|c| (c[0], c[1])).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let text = r#"{"n":3,"edges":[{"u":0,"v":1,"kind":"short"},{"u":1,"v":2,"kind":"long"}]}"#;
        let parsed: GraphJson = serde_json::from_str(text).unwrap();
        let g = parsed.to_graph().unwrap();
        assert_eq!(serde_json::to_string(&GraphJson::from_graph(&g)).unwrap(), text);
    }

    #[test]
    fn embedding_space_tags() {
        let text = r#"{"space":{"sphere":1},"coords":[[1.0,0.0],[0.0,1.0]]}"#;
        let e: EmbeddingJson = serde_json::from_str(text).unwrap();
        assert_eq!(e.to_embedding().unwrap().space(), Space::Sphere(1));
        assert_eq!(serde_json::to_string(&e).unwrap(), text);
    }
}
