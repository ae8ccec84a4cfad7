use super::degree::Degree;
use super::graph::KGraph;
use super::io::{EdgeDoc, GraphDoc, SquareDoc};

fn coord_name(p: &Degree) -> String {
    p.coords().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn edge(id: &str, color: usize, range: &str, source: &str) -> EdgeDoc {
    EdgeDoc { id: id.into(), color, range: range.into(), source: source.into() }
}

fn square(lhs: [&str; 2], rhs: [&str; 2]) -> SquareDoc {
    SquareDoc { lhs: [lhs[0].into(), lhs[1].into()], rhs: [rhs[0].into(), rhs[1].into()] }
}

fn finish(doc: GraphDoc) -> KGraph {
    let mut g = KGraph::load(&doc).expect("builder produces a well-formed document");
    let bound = Degree::uniform(g.k(), 2);
    let report = g.validate(&bound);
    assert!(report.pass, "builder produced an invalid graph: {:?}", report);
    g
}

/// Document for the grid category on `{n ∈ ℕ^k : n ≤ m}`: vertex names are
/// comma-joined coordinates, edge `e{i}:{a}` runs from `a + e_i` to `a`.
pub fn omega_doc(m: &Degree) -> GraphDoc {
    let k = m.k();
    let zero = Degree::zero(k);
    let points = Degree::box_points(&zero, m);
    let vertices = points.iter().map(coord_name).collect();
    let name = |i: usize, a: &Degree| format!("e{}:{}", i, coord_name(a));
    let mut edges = Vec::new();
    let mut squares = Vec::new();
    for a in &points {
        for i in 1..=k {
            let ai = a.add(&Degree::unit(k, i));
            if !ai.le(m) {
                continue;
            }
            edges.push(edge(&name(i, a), i, &coord_name(a), &coord_name(&ai)));
            for j in (i + 1)..=k {
                let aj = a.add(&Degree::unit(k, j));
                if !ai.add(&Degree::unit(k, j)).le(m) {
                    continue;
                }
                squares.push(square(
                    [&name(i, a), &name(j, &ai)],
                    [&name(j, a), &name(i, &aj)],
                ));
            }
        }
    }
    GraphDoc { k, vertices, edges, squares }
}

pub fn omega(m: &Degree) -> KGraph {
    finish(omega_doc(m))
}

pub fn torus2_doc() -> GraphDoc {
    GraphDoc {
        k: 2,
        vertices: vec!["v".into()],
        edges: vec![edge("e", 1, "v", "v"), edge("f", 2, "v", "v")],
        squares: vec![square(["e", "f"], ["f", "e"])],
    }
}

pub fn torus2() -> KGraph {
    finish(torus2_doc())
}

pub fn fig8_doc() -> GraphDoc {
    GraphDoc {
        k: 1,
        vertices: vec!["v".into()],
        edges: vec![edge("a", 1, "v", "v"), edge("b", 1, "v", "v")],
        squares: Vec::new(),
    }
}

pub fn fig8() -> KGraph {
    finish(fig8_doc())
}

pub fn single_loop_doc() -> GraphDoc {
    GraphDoc {
        k: 1,
        vertices: vec!["v".into()],
        edges: vec![edge("e", 1, "v", "v")],
        squares: Vec::new(),
    }
}

pub fn single_loop() -> KGraph {
    finish(single_loop_doc())
}

/// The seven standard graphs with their names.
pub fn standard_graphs() -> Vec<(&'static str, KGraph)> {
    vec![
        ("omega(1,2)", omega(&Degree::from_coords(vec![2]))),
        ("omega(2,(1,1))", omega(&Degree::from_coords(vec![1, 1]))),
        ("omega(2,(2,2))", omega(&Degree::from_coords(vec![2, 2]))),
        ("omega(3,(1,1,1))", omega(&Degree::from_coords(vec![1, 1, 1]))),
        ("torus2", torus2()),
        ("fig8", fig8()),
        ("singleLoop", single_loop()),
    ]
}
