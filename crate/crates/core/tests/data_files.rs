use std::path::PathBuf;

use kgraph_core::cocycle::cubical_cocycle_check;
use kgraph_core::cubical::CochainTable;
use kgraph_core::builders::{fig8_doc, omega_doc, single_loop_doc, torus2, torus2_doc};
use kgraph_core::{Degree, GraphDoc, GraphMorphismDoc, KGraph, KGraphMorphism};

fn data(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn deg(v: &[u32]) -> Degree {
    Degree::from_coords(v.to_vec())
}

#[test]
fn shipped_graphs_match_builders() {
    let cases: Vec<(&str, GraphDoc)> = vec![
        ("omega-1-2.json", omega_doc(&deg(&[2]))),
        ("omega-2-11.json", omega_doc(&deg(&[1, 1]))),
        ("omega-2-22.json", omega_doc(&deg(&[2, 2]))),
        ("omega-3-111.json", omega_doc(&deg(&[1, 1, 1]))),
        ("torus2.json", torus2_doc()),
        ("fig8.json", fig8_doc()),
        ("single-loop.json", single_loop_doc()),
    ];
    for (file, doc) in cases {
        assert_eq!(GraphDoc::from_json(&data(file)).unwrap(), doc, "{file}");
        let mut g = KGraph::load(&doc).unwrap();
        assert!(g.validate(&Degree::uniform(doc.k, 2)).pass, "{file}");
    }
}

#[test]
fn broken_torus_fails_validation() {
    let mut g = KGraph::from_json(&data("broken-torus.json")).unwrap();
    assert!(!g.validate(&Degree::uniform(2, 2)).pass);
}

#[test]
fn shipped_morphisms_are_graph_morphisms() {
    for (dom, file, cod) in [
        ("fig8.json", "fig8-to-single-loop.json", "single-loop.json"),
        ("omega-2-11.json", "omega-2-11-to-torus2.json", "torus2.json"),
    ] {
        let d = KGraph::from_json(&data(dom)).unwrap();
        let c = KGraph::from_json(&data(cod)).unwrap();
        let doc: GraphMorphismDoc = serde_json::from_str(&data(file)).unwrap();
        KGraphMorphism::from_doc(&d, &c, &doc).unwrap();
    }
}

#[test]
fn shipped_cocycles_are_closed() {
    let g = torus2();
    for file in ["torus2-top-cocycle.json", "torus2-one-cocycle.json"] {
        let t = CochainTable::from_json(&g, &data(file)).unwrap();
        assert!(cubical_cocycle_check(&g, &t).unwrap().pass, "{file}");
    }
}
