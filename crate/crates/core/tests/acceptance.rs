//! One line per acceptance criterion; the test fails if any criterion fails.

use std::collections::BTreeMap;

use kgraph_core::builders::{fig8, omega, single_loop, standard_graphs, torus2, torus2_doc};
use kgraph_core::categorical::{
    cat_boundary, cat_homology, enumerate_tuples, initial_homotopy, initial_homotopy_unit, initial_vertex,
    standard_homotopy, standard_homotopy_unit, tuple_boundary, CatHomologyOptions,
};
use kgraph_core::chain::Chain;
use kgraph_core::chain_maps::{
    cubulate, resolution_tuples, tailed_cubes, triangulate, verify_chain_map_identities, verify_naturality, ColorOrder,
    VerifyReport,
};
use kgraph_core::cocycle::{cubical_cocycle_check, degree1_path_independence, random_table, round_trip};
use kgraph_core::cubical::{
    boundary_matrix, boundary_with_tail, coboundary, cubical_cohomology, cubical_homology, uct_check, CochainTable,
    CubicalBasis,
};
use kgraph_core::{AbelianGroup, Coefficients, Degree, KGraph, KGraphMorphism};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

const Z: Coefficients = Coefficients::Z;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn bound2(g: &KGraph) -> Degree {
    Degree::uniform(g.k(), 2)
}

fn omegas() -> Vec<(String, KGraph)> {
    [vec![2], vec![1, 1], vec![2, 2], vec![1, 1, 1]]
        .into_iter()
        .map(|m| {
            let d = Degree::from_coords(m);
            (format!("omega{d}"), omega(&d))
        })
        .collect()
}

fn reports() -> Vec<(&'static str, VerifyReport)> {
    standard_graphs()
        .into_iter()
        .map(|(name, g)| (name, verify_chain_map_identities(&g, &bound2(&g))))
        .collect()
}

fn checks_pass(reports: &[(&str, VerifyReport)], names: &[&str]) -> Outcome {
    for (graph, r) in reports {
        for name in names {
            let c = r.check(name).ok_or_else(|| format!("{graph}: no check {name}"))?;
            ensure(c.pass && c.generators_tested > 0, || {
                format!("{graph}: {name} failed at {:?}", c.first_witness)
            })?;
        }
    }
    Ok(())
}

fn complex_laws() -> Outcome {
    for (name, g) in standard_graphs() {
        let basis = CubicalBasis::new(&g);
        for reduced in [false, true] {
            for n in 0..=g.k() as i64 + 1 {
                let a = boundary_matrix(&g, &basis, n, reduced).map_err(|e| e.to_string())?;
                let b = boundary_matrix(&g, &basis, n + 1, reduced).map_err(|e| e.to_string())?;
                ensure(a.mul(&b).is_zero(), || format!("{name}: cubical ∂∂ ≠ 0 at {n}"))?;
            }
        }
        for x in tailed_cubes(&g, &bound2(&g)) {
            let dd = boundary_with_tail(&g, &x)
                .and_then(|c| c.map_linear(|y| boundary_with_tail(&g, y)))
                .map_err(|e| e.to_string())?;
            ensure(dd.is_zero(), || format!("{name}: tailed ∂∂ ≠ 0 at {}", x.describe(&g)))?;
        }
        for t in resolution_tuples(&g, &bound2(&g)) {
            let dd = tuple_boundary(&g, &t)
                .and_then(|c| c.map_linear(|s| tuple_boundary(&g, s)))
                .map_err(|e| e.to_string())?;
            ensure(dd.is_zero(), || format!("{name}: ∂^P∂^P ≠ 0 at {}", t.describe(&g)))?;
        }
    }
    Ok(())
}

fn box_after_nabla() -> Outcome {
    for (name, g) in standard_graphs() {
        for n in 0..=g.k() as i64 {
            for cube in g.enumerate_cubes(n) {
                let x = kgraph_core::chain::Tailed::bare(&g, cube);
                let back = triangulate(&g, &x)
                    .and_then(|c| c.map_linear(|t| cubulate(&g, t, ColorOrder::Forward)))
                    .map_err(|e| e.to_string())?;
                ensure(back == Chain::single(x.clone(), 1), || format!("{name}: {}", x.describe(&g)))?;
            }
        }
    }
    Ok(())
}

fn initial_vertex_vanishing() -> Outcome {
    for (name, g) in omegas() {
        for n in -1..=g.k() as i64 + 1 {
            let h = cubical_homology(&g, n, Z, true).map_err(|e| e.to_string())?;
            ensure(h.is_trivial(), || format!("{name}: reduced H_{n} = {h}"))?;
        }
    }
    Ok(())
}

fn homology_values() -> Outcome {
    let expect = |g: &KGraph, name: &str, n: i64, want: AbelianGroup| -> Outcome {
        let got = cubical_homology(g, n, Z, false).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{name}: H_{n} = {got}"))
    };
    let t = torus2();
    expect(&t, "torus2", 0, AbelianGroup::free(1))?;
    expect(&t, "torus2", 1, AbelianGroup::free(2))?;
    expect(&t, "torus2", 2, AbelianGroup::free(1))?;
    let h2 = cubical_cohomology(&t, 2, Z).map_err(|e| e.to_string())?;
    ensure(h2 == AbelianGroup::free(1), || format!("torus2: H^2 = {h2}"))?;
    let f = fig8();
    expect(&f, "fig8", 0, AbelianGroup::free(1))?;
    expect(&f, "fig8", 1, AbelianGroup::free(2))?;
    let s = single_loop();
    expect(&s, "singleLoop", 0, AbelianGroup::free(1))?;
    expect(&s, "singleLoop", 1, AbelianGroup::free(1))
}

fn categorical_equals_cubical() -> Outcome {
    let g = omega(&Degree::from_coords(vec![1, 1]));
    let opts = CatHomologyOptions::new(Degree::from_coords(vec![1, 1]));
    for coeff in [Z, Coefficients::zmod(2).unwrap()] {
        for n in 0..=3 {
            let cat = cat_homology(&g, n, coeff, &opts).map_err(|e| e.to_string())?;
            let cub = cubical_homology(&g, n, coeff, false).map_err(|e| e.to_string())?;
            ensure(cat == cub, || format!("n = {n} {coeff:?}: {cat} vs {cub}"))?;
        }
    }
    Ok(())
}

fn homotopy_identities() -> Outcome {
    for (name, g) in standard_graphs() {
        for len in 1..=3 {
            for t in enumerate_tuples(&g, len, &bound2(&g)) {
                let mut got = standard_homotopy(&g, &t)
                    .and_then(|c| c.map_linear(|s| tuple_boundary(&g, s)))
                    .map_err(|e| e.to_string())?;
                if len == 1 {
                    got.add(&standard_homotopy_unit(&g, t.source()));
                } else {
                    let rest = tuple_boundary(&g, &t)
                        .and_then(|c| c.map_linear(|s| standard_homotopy(&g, s)))
                        .map_err(|e| e.to_string())?;
                    got.add(&rest);
                }
                ensure(got == Chain::single(t.clone(), 1), || format!("{name}: standard at {}", t.describe(&g)))?;
            }
        }
    }
    for (name, g) in omegas() {
        let iv = initial_vertex(&g).ok_or_else(|| format!("{name}: no initial vertex"))?;
        let max = g.max_degree().ok_or_else(|| format!("{name}: infinite"))?;
        for len in 0..=3 {
            for t in enumerate_tuples(&g, len, &max) {
                let mut got = initial_homotopy(&iv, &t)
                    .and_then(|c| c.map_linear(|s| cat_boundary(&g, s)))
                    .map_err(|e| e.to_string())?;
                if len == 0 {
                    got.add(&initial_homotopy_unit(&iv));
                } else {
                    let rest = cat_boundary(&g, &t)
                        .and_then(|c| c.map_linear(|s| initial_homotopy(&iv, s)))
                        .map_err(|e| e.to_string())?;
                    got.add(&rest);
                }
                ensure(got == Chain::single(t.clone(), 1), || format!("{name}: initial at {}", t.describe(&g)))?;
            }
        }
    }
    Ok(())
}

fn uct() -> Outcome {
    for (name, g) in standard_graphs() {
        for n in 0..=g.k() as i64 {
            for m in [2, 3, 4] {
                let r = uct_check(&g, n, m).map_err(|e| e.to_string())?;
                ensure(r.pass, || format!("{name}: n = {n}, m = {m}: {} vs {} + {}", r.cohomology, r.hom, r.ext))?;
            }
        }
    }
    Ok(())
}

fn cochain_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for (name, g) in standard_graphs() {
        for n in 0..=g.k() {
            for _ in 0..50 {
                let table = random_table(&g, n, Z, &mut rng);
                ensure(round_trip(&g, &table, ColorOrder::Forward).map_err(|e| e.to_string())?, || {
                    format!("{name}: round trip failed in degree {n}")
                })?;
            }
        }
        let closed = coboundary(&g, &random_table(&g, 0, Z, &mut rng)).map_err(|e| e.to_string())?;
        let report = degree1_path_independence(&g, &closed, &bound2(&g), 20, 0).map_err(|e| e.to_string())?;
        ensure(report.pass, || format!("{name}: {:?}", report.first_witness))?;
    }
    Ok(())
}

fn naturality() -> Outcome {
    let f8 = fig8();
    let sl = single_loop();
    let v = BTreeMap::from([("v".to_string(), "v".to_string())]);
    let e = BTreeMap::from([("a".to_string(), "e".to_string()), ("b".to_string(), "e".to_string())]);
    let phi = KGraphMorphism::new(&f8, &sl, &v, &e).map_err(|e| e.to_string())?;
    let r = verify_naturality(&phi, &Degree::from_coords(vec![3]));
    ensure(r.pass, || format!("fig8 → singleLoop: {:?}", r.checks))?;

    let grid = omega(&Degree::from_coords(vec![1, 1]));
    let t = torus2();
    let vmap = grid.vertices().map(|x| (grid.vertex_name(x).to_string(), "v".to_string())).collect();
    let emap = (0..grid.num_edges())
        .map(|x| {
            let edge = grid.edge(x);
            (edge.id.clone(), if edge.color == 1 { "e" } else { "f" }.to_string())
        })
        .collect();
    let psi = KGraphMorphism::new(&grid, &t, &vmap, &emap).map_err(|e| e.to_string())?;
    let r = verify_naturality(&psi, &Degree::from_coords(vec![1, 1]));
    ensure(r.pass, || format!("omega(2,(1,1)) → torus2: {:?}", r.checks))
}

fn structural_vanishing() -> Outcome {
    for (name, g) in standard_graphs() {
        let k = g.k() as i64;
        for n in [-2, -1, k + 1, k + 2] {
            for coeff in [Z, Coefficients::zmod(2).unwrap()] {
                let h = cubical_homology(&g, n, coeff, false).map_err(|e| e.to_string())?;
                let c = cubical_cohomology(&g, n, coeff).map_err(|e| e.to_string())?;
                ensure(h.is_trivial() && c.is_trivial(), || format!("{name}: degree {n}: {h}, {c}"))?;
            }
        }
    }
    Ok(())
}

fn negative_controls() -> Outcome {
    let mut doc = torus2_doc();
    doc.squares.clear();
    let mut broken = KGraph::load(&doc).map_err(|e| e.to_string())?;
    let report = broken.validate(&Degree::from_coords(vec![2, 2]));
    let flagged = report.checks.iter().any(|c| (c.check == "V1" || c.check == "V4") && !c.pass && c.witness.is_some());
    ensure(!report.pass && flagged && !broken.is_validated(), || "corrupted torus2 validated".into())?;

    let o = omega(&Degree::from_coords(vec![2, 2]));
    let bad = CochainTable::tabulate(&o, 1, Z, |c| i64::from(c.degree().get(1)) * (c.range() as i64 + 1));
    let r = cubical_cocycle_check(&o, &bad).map_err(|e| e.to_string())?;
    ensure(!r.pass && r.first_witness.is_some(), || "non-closed table accepted".into())
}

fn main() {
    let reports = reports();
    let criteria: Vec<(&str, Outcome)> = vec![
        ("1 complex laws", complex_laws()),
        ("2 cubulation inverts triangulation", box_after_nabla()),
        ("3 chain-map identities", checks_pass(&reports, &["nabla-chain-map", "box-chain-map"])),
        (
            "4 face and Xi identities",
            checks_pass(&reports, &["fbox-k", "box-0-xi", "box-n-xi", "box-l-xi", "rect-boundary"]),
        ),
        ("5 initial-vertex vanishing", initial_vertex_vanishing()),
        ("6 homology values", homology_values()),
        ("7 categorical equals cubical", categorical_equals_cubical()),
        ("8 homotopy identities", homotopy_identities()),
        ("9 universal coefficients", uct()),
        ("10 cochain round trip", cochain_round_trip()),
        ("11 naturality", naturality()),
        ("12 structural vanishing", structural_vanishing()),
        ("13 negative controls", negative_controls()),
    ];
    let mut failed = Vec::new();
    for (name, outcome) in &criteria {
        match outcome {
            Ok(()) => println!("PASS  {name}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(*name);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed.len(), criteria.len());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
