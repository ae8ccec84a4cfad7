#![allow(dead_code)]

use kgraph_core::{Degree, KGraph, Morphism};

pub fn deg(coords: &[u32]) -> Degree {
    Degree::from_coords(coords.to_vec())
}

pub fn word(g: &KGraph, ids: &[&str]) -> Morphism {
    let w: Vec<_> = ids.iter().map(|id| g.edge_id(id).unwrap()).collect();
    g.morphism_from_word(&w).unwrap()
}

pub fn vertex(g: &KGraph, name: &str) -> Morphism {
    g.identity(g.vertex_id(name).unwrap())
}

pub fn names(g: &KGraph, m: &Morphism) -> Vec<String> {
    g.word_names(m.word())
}
