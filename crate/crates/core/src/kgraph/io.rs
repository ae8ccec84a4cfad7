use serde::{Deserialize, Serialize};

use super::graph::KGraph;
use super::morphism::Morphism;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub k: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDoc>,
    #[serde(default)]
    pub squares: Vec<SquareDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub id: String,
    pub color: usize,
    pub range: String,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SquareDoc {
    pub lhs: [String; 2],
    pub rhs: [String; 2],
}

/// `{"vertex": v}` for identities, `{"edges": [..]}` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MorphismLiteral {
    Vertex { vertex: String },
    Edges { edges: Vec<String> },
}

impl GraphDoc {
    pub fn from_json(text: &str) -> Result<GraphDoc> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph document serializes")
    }
}

impl KGraph {
    pub fn from_json(text: &str) -> Result<KGraph> {
        KGraph::load(&GraphDoc::from_json(text)?)
    }

    pub fn to_doc(&self) -> GraphDoc {
        GraphDoc {
            k: self.k(),
            vertices: (0..self.num_vertices()).map(|v| self.vertex_name(v).to_string()).collect(),
            edges: (0..self.num_edges())
                .map(|e| {
                    let edge = self.edge(e);
                    EdgeDoc {
                        id: edge.id.clone(),
                        color: edge.color,
                        range: self.vertex_name(edge.range).to_string(),
                        source: self.vertex_name(edge.source).to_string(),
                    }
                })
                .collect(),
            squares: self
                .squares()
                .iter()
                .map(|&(a, b, b2, a2)| SquareDoc {
                    lhs: [self.edge(a).id.clone(), self.edge(b).id.clone()],
                    rhs: [self.edge(b2).id.clone(), self.edge(a2).id.clone()],
                })
                .collect(),
        }
    }

    pub fn to_literal(&self, m: &Morphism) -> MorphismLiteral {
        if m.is_identity() {
            MorphismLiteral::Vertex { vertex: self.vertex_name(m.range()).to_string() }
        } else {
            MorphismLiteral::Edges {
                edges: m.word().iter().map(|&e| self.edge(e).id.clone()).collect(),
            }
        }
    }

    pub fn from_literal(&self, lit: &MorphismLiteral) -> Result<Morphism> {
        match lit {
            MorphismLiteral::Vertex { vertex } => Ok(self.identity(self.vertex_id(vertex)?)),
            MorphismLiteral::Edges { edges } => {
                if edges.is_empty() {
                    return Err(Error::Schema("empty edge list in morphism literal".into()));
                }
                let ids = edges.iter().map(|e| self.edge_id(e)).collect::<Result<Vec<_>>>()?;
                self.morphism_from_word(&ids)
            }
        }
    }
}
