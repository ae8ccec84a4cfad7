use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::graph::{EdgeId, KGraph, VertexId};
use super::io::GraphDoc;
use super::morphism::Morphism;
use crate::error::{Error, Result};

/// A degree-preserving functor between k-graphs, given on the skeleton.
#[derive(Clone, Debug)]
pub struct KGraphMorphism<'a> {
    domain: &'a KGraph,
    codomain: &'a KGraph,
    vertex_map: Vec<VertexId>,
    edge_map: Vec<EdgeId>,
}

/// Codomain given inline or as a path to a graph file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CodomainRef {
    Path(String),
    Inline(GraphDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct GraphMorphismDoc {
    pub codomain: CodomainRef,
    pub vertex_map: BTreeMap<String, String>,
    pub edge_map: BTreeMap<String, String>,
}

impl<'a> KGraphMorphism<'a> {
    pub fn new(
        domain: &'a KGraph,
        codomain: &'a KGraph,
        vertex_map: &BTreeMap<String, String>,
        edge_map: &BTreeMap<String, String>,
    ) -> Result<Self> {
        if domain.k() != codomain.k() {
            return Err(Error::InvalidMorphism(format!(
                "rank mismatch: {} vs {}",
                domain.k(),
                codomain.k()
            )));
        }
        let mut vmap = Vec::with_capacity(domain.num_vertices());
        for v in domain.vertices() {
            let name = domain.vertex_name(v);
            let img = vertex_map
                .get(name)
                .ok_or_else(|| Error::InvalidMorphism(format!("vertex `{}` is unmapped", name)))?;
            vmap.push(codomain.vertex_id(img)?);
        }
        let mut emap = Vec::with_capacity(domain.num_edges());
        for e in 0..domain.num_edges() {
            let edge = domain.edge(e);
            let img = edge_map
                .get(&edge.id)
                .ok_or_else(|| Error::InvalidMorphism(format!("edge `{}` is unmapped", edge.id)))?;
            let f = codomain.edge_id(img)?;
            let fe = codomain.edge(f);
            if fe.color != edge.color {
                return Err(Error::InvalidMorphism(format!("edge `{}` changes color", edge.id)));
            }
            if fe.range != vmap[edge.range] || fe.source != vmap[edge.source] {
                return Err(Error::InvalidMorphism(format!(
                    "edge `{}` endpoints are not preserved",
                    edge.id
                )));
            }
            emap.push(f);
        }
        let phi = KGraphMorphism { domain, codomain, vertex_map: vmap, edge_map: emap };
        for &(a, b, b2, a2) in domain.squares() {
            let lhs = codomain.morphism_from_word(&[phi.edge_map[a], phi.edge_map[b]])?;
            let rhs = codomain.morphism_from_word(&[phi.edge_map[b2], phi.edge_map[a2]])?;
            if lhs != rhs {
                return Err(Error::InvalidMorphism(format!(
                    "square [{},{}] is not sent to a relation",
                    domain.edge(a).id,
                    domain.edge(b).id
                )));
            }
        }
        Ok(phi)
    }

    pub fn identity(g: &'a KGraph) -> Self {
        KGraphMorphism {
            domain: g,
            codomain: g,
            vertex_map: g.vertices().collect(),
            edge_map: (0..g.num_edges()).collect(),
        }
    }

    pub fn from_doc(domain: &'a KGraph, codomain: &'a KGraph, doc: &GraphMorphismDoc) -> Result<Self> {
        Self::new(domain, codomain, &doc.vertex_map, &doc.edge_map)
    }

    pub fn domain(&self) -> &'a KGraph {
        self.domain
    }

    pub fn codomain(&self) -> &'a KGraph {
        self.codomain
    }

    pub fn map_vertex(&self, v: VertexId) -> VertexId {
        self.vertex_map[v]
    }

    pub fn apply(&self, m: &Morphism) -> Result<Morphism> {
        if m.range() >= self.domain.num_vertices()
            || m.word().iter().any(|&e| e >= self.domain.num_edges())
            || !self.domain.word_is_composable(m.word())
        {
            return Err(Error::InvalidMorphism("morphism is not in the domain".into()));
        }
        if m.is_identity() {
            return Ok(self.codomain.identity(self.vertex_map[m.range()]));
        }
        let word: Vec<EdgeId> = m.word().iter().map(|&e| self.edge_map[e]).collect();
        self.codomain.morphism_from_word(&word)
    }
}
