mod common;

use common::{deg, names, vertex, word};
use kgraph_core::builders::{fig8, omega, omega_doc, single_loop, single_loop_doc, standard_graphs, torus2, torus2_doc};
use kgraph_core::{ColorSet, Degree, Error, GraphDoc, KGraph, KGraphMorphism};
use std::collections::BTreeMap;

#[test]
fn degree_basics() {
    let d = deg(&[2, 0, 1]);
    assert_eq!(d.total(), 3);
    assert_eq!(d.color_type(), ColorSet::new(vec![1, 3]));
    assert_eq!(Degree::parse("2,2").unwrap(), deg(&[2, 2]));
    assert_eq!(deg(&[0, 3, 0]).color_type(), ColorSet::new(vec![2]));
    assert_eq!(Degree::box_points(&deg(&[0, 0]), &deg(&[1, 1])).len(), 4);
}

#[test]
fn load_single_loop_and_torus() {
    let g = single_loop();
    assert_eq!((g.k(), g.num_vertices(), g.num_edges()), (1, 1, 1));
    let t = torus2();
    assert_eq!((t.k(), t.num_vertices(), t.num_edges(), t.squares().len()), (2, 1, 2, 1));
}

#[test]
fn color_out_of_range_is_rejected() {
    let mut doc = torus2_doc();
    doc.edges[0].color = 3;
    assert!(matches!(KGraph::load(&doc), Err(Error::Schema(_))));
}

#[test]
fn unknown_fields_are_rejected() {
    let text = r#"{"k":1,"vertices":["v"],"edges":[],"extra":1}"#;
    assert!(GraphDoc::from_json(text).is_err());
}

#[test]
fn json_round_trip() {
    for (name, g) in standard_graphs() {
        let text = g.to_doc().to_json();
        let back = KGraph::from_json(&text).unwrap();
        assert_eq!(back.to_doc(), g.to_doc(), "{name}");
    }
}

#[test]
fn validation_oracles() {
    let mut t = torus2();
    assert!(t.validate(&deg(&[2, 2])).pass);

    let mut doc = torus2_doc();
    doc.squares.clear();
    let mut broken = KGraph::load(&doc).unwrap();
    let report = broken.validate(&deg(&[2, 2]));
    assert!(!report.pass);
    let v1 = report.checks.iter().find(|c| c.check == "V1").unwrap();
    assert!(!v1.pass);
    assert_eq!(v1.witness.as_deref(), Some(&["e".to_string(), "f".to_string()][..]));

    let mut cube = omega(&deg(&[1, 1, 1]));
    let report = cube.validate(&deg(&[1, 1, 1]));
    assert!(report.pass);
    assert!(report.checks.iter().find(|c| c.check == "V3").unwrap().generators_tested > 0);
}

#[test]
fn composition_oracles() {
    let o = omega(&deg(&[1, 1]));
    let a = word(&o, &["e1:0,0"]);
    let b = word(&o, &["e2:1,0"]);
    let ab = o.compose(&a, &b).unwrap();
    assert_eq!(ab.degree(), &deg(&[1, 1]));
    assert_eq!(ab.range(), o.vertex_id("0,0").unwrap());
    assert_eq!(ab.source(), o.vertex_id("1,1").unwrap());

    let id = vertex(&o, "0,0");
    assert_eq!(o.compose(&id, &ab).unwrap(), ab);

    let t = torus2();
    let fe = word(&t, &["f", "e"]);
    assert_eq!(names(&t, &fe), vec!["e", "f"]);
}

#[test]
fn segment_oracles() {
    let o = omega(&deg(&[2]));
    let lam = word(&o, &["e1:0", "e1:1"]);
    let seg = o.segment(&lam, &deg(&[1]), &deg(&[2])).unwrap();
    assert_eq!(names(&o, &seg), vec!["e1:1"]);

    let t = torus2();
    let ef = word(&t, &["e", "f"]);
    let seg = t.segment(&ef, &deg(&[0, 1]), &deg(&[1, 1])).unwrap();
    assert_eq!(names(&t, &seg), vec!["e"]);
    assert_eq!(t.segment(&ef, &deg(&[0, 0]), &deg(&[1, 1])).unwrap(), ef);
}

#[test]
fn color_type_oracles() {
    let t = torus2();
    assert!(t.identity(0).color_type().is_empty());
    assert_eq!(word(&t, &["e", "f"]).color_type(), ColorSet::new(vec![1, 2]));
}

#[test]
fn enumeration_oracles() {
    let t = torus2();
    let ms = t.enumerate_morphisms(&deg(&[1, 1]));
    assert_eq!(ms.len(), 1);
    assert_eq!(names(&t, &ms[0]), vec!["e", "f"]);

    let f = fig8();
    let words: Vec<Vec<String>> = f.enumerate_morphisms(&deg(&[2])).iter().map(|m| names(&f, m)).collect();
    assert_eq!(words, vec![vec!["a", "a"], vec!["a", "b"], vec!["b", "a"], vec!["b", "b"]]);

    assert_eq!(omega(&deg(&[1, 1])).enumerate_morphisms(&deg(&[1, 1])).len(), 1);
}

#[test]
fn cube_count_oracles() {
    let t = torus2();
    assert_eq!((t.enumerate_cubes(0).len(), t.enumerate_cubes(1).len(), t.enumerate_cubes(2).len()), (1, 2, 1));
    let f = fig8();
    assert_eq!((f.enumerate_cubes(1).len(), f.enumerate_cubes(2).len()), (2, 0));
    assert_eq!(omega(&deg(&[2, 2])).enumerate_cubes(2).len(), 4);
}

#[test]
fn face_oracles() {
    let t = torus2();
    let ef = word(&t, &["e", "f"]);
    assert_eq!(names(&t, &t.face(&ef, 1, 0).unwrap()), vec!["f"]);
    assert_eq!(names(&t, &t.face(&ef, 1, 1).unwrap()), vec!["f"]);
    assert_eq!(names(&t, &t.face(&ef, 2, 0).unwrap()), vec!["e"]);
    assert_eq!(names(&t, &t.face(&ef, 2, 1).unwrap()), vec!["e"]);

    let o = omega(&deg(&[1, 1]));
    let e = word(&o, &["e1:0,0"]);
    assert_eq!(o.face(&e, 1, 0).unwrap(), vertex(&o, "0,0"));
    assert_eq!(o.face(&e, 1, 1).unwrap(), vertex(&o, "1,0"));

    let sq = o.enumerate_cubes(2).remove(0);
    let front = o.face(&sq, 1, 0).unwrap();
    assert_eq!((front.range(), front.degree()), (o.vertex_id("0,0").unwrap(), &deg(&[0, 1])));
}

#[test]
fn builder_oracles() {
    let o = omega(&deg(&[2]));
    assert_eq!((o.num_vertices(), o.num_edges()), (3, 2));
    assert_eq!(o.morphisms_up_to(&deg(&[2])).len(), 6);
    let o = omega(&deg(&[1, 1]));
    assert_eq!(o.num_vertices(), 4);
    assert_eq!(o.morphisms_up_to(&deg(&[1, 1])).len(), 9);
    assert!(torus2().is_validated());
    assert_eq!(omega_doc(&deg(&[1, 1])).squares.len(), 1);
}

#[test]
fn finiteness_oracles() {
    assert!(omega(&deg(&[2, 2])).is_finite_category(&deg(&[3, 3])).finite);
    let r = fig8().is_finite_category(&deg(&[5]));
    assert!(!r.finite);
    assert_eq!(r.witness.unwrap().len(), 6);
    assert!(!single_loop().is_finite_category(&deg(&[1])).finite);
    assert_eq!(omega(&deg(&[2, 1])).max_degree(), Some(deg(&[2, 1])));
    assert_eq!(torus2().max_degree(), None);
}

#[test]
fn graph_morphism_oracles() {
    let f8 = fig8();
    let sl = single_loop();
    let vmap = BTreeMap::from([("v".to_string(), "v".to_string())]);
    let emap = BTreeMap::from([("a".to_string(), "e".to_string()), ("b".to_string(), "e".to_string())]);
    let phi = KGraphMorphism::new(&f8, &sl, &vmap, &emap).unwrap();
    let ab = word(&f8, &["a", "b"]);
    assert_eq!(names(&sl, &phi.apply(&ab).unwrap()), vec!["e", "e"]);
    assert_eq!(phi.apply(&f8.identity(0)).unwrap(), sl.identity(0));

    let id = KGraphMorphism::identity(&f8);
    for m in f8.morphisms_up_to(&deg(&[2])) {
        assert_eq!(id.apply(&m).unwrap(), m);
    }

    let bad = BTreeMap::from([("a".to_string(), "e".to_string())]);
    assert!(KGraphMorphism::new(&f8, &sl, &vmap, &bad).is_err());
}

#[test]
fn single_loop_doc_shape() {
    let doc = single_loop_doc();
    assert_eq!(doc.edges.len(), 1);
    assert!(doc.squares.is_empty());
}
