use std::path::{Path, PathBuf};

use kgraph_core::categorical::{cat_homology, CatHomologyOptions, ComposableTuple};
use kgraph_core::chain_maps::{verify_chain_map_identities, verify_naturality, ColorOrder};
use kgraph_core::cocycle::{
    cat_to_cub, catalog, categorical_cocycle_check, cubical_cocycle_check, degree1_path_independence,
    translate_to_categorical, CubulatedCochain, TupleValue,
};
use kgraph_core::cubical::{cubical_cohomology_in, cubical_homology_in, uct_check, CochainTable, CubicalBasis, UctReport};
use kgraph_core::{
    AbelianGroup, CodomainRef, Coefficients, Degree, GraphMorphismDoc, KGraph, KGraphMorphism, MorphismLiteral,
};
use serde::{Deserialize, Serialize};

use crate::args::{Cli, Command, Direction, GroupOpts, Order};
use crate::io::{degree, emit, load_graph, load_valid, parse, Failure, Outcome, CHECK, OK, VALIDATION};

pub fn run(cli: &Cli) -> Outcome<u8> {
    let out = cli.out.as_ref();
    match &cli.command {
        Command::Validate { graph, bound } => {
            let mut g = load_graph(graph)?;
            let bound = match bound {
                Some(b) => degree(b, g.k())?,
                None => Degree::uniform(g.k(), 2),
            };
            let report = g.validate(&bound);
            emit(&report, out)?;
            Ok(if report.pass { OK } else { VALIDATION })
        }
        Command::Info { graph } => {
            let g = load_valid(graph, out)?;
            emit(&info(&g), out)?;
            Ok(OK)
        }
        Command::Homology { graph, opts, reduced } => {
            let g = load_valid(graph, out)?;
            let basis = CubicalBasis::new(&g);
            groups(&g, opts, out, |n, c| cubical_homology_in(&g, &basis, n, c, *reduced))
        }
        Command::Cohomology { graph, opts } => {
            let g = load_valid(graph, out)?;
            let basis = CubicalBasis::new(&g);
            groups(&g, opts, out, |n, c| cubical_cohomology_in(&g, &basis, n, c))
        }
        Command::CatHomology { graph, opts, probe_bound, reduced, max_generators } => {
            let g = load_valid(graph, out)?;
            let settings = CatHomologyOptions {
                probe: degree(probe_bound, g.k())?,
                max_generators: *max_generators,
                reduced: *reduced,
            };
            groups(&g, opts, out, |n, c| cat_homology(&g, n, c, &settings))
        }
        Command::Verify { graph, bound, naturality } => {
            let g = load_valid(graph, out)?;
            let bound = degree(bound, g.k())?;
            let mut report = verify_chain_map_identities(&g, &bound);
            if let Some(path) = naturality {
                let doc: GraphMorphismDoc = parse(path)?;
                let codomain = match &doc.codomain {
                    CodomainRef::Path(p) => load_valid(&relative_to(path, p), out)?,
                    CodomainRef::Inline(inner) => {
                        let mut c = KGraph::load(inner)?;
                        if !c.validate(&Degree::uniform(c.k(), 2)).pass {
                            return Err(Failure { code: VALIDATION, message: "codomain failed validation".into() });
                        }
                        c
                    }
                };
                let phi = KGraphMorphism::from_doc(&g, &codomain, &doc)?;
                let natural = verify_naturality(&phi, &bound);
                report.checks.extend(natural.checks);
                report.pass &= natural.pass;
            }
            emit(&report, out)?;
            Ok(if report.pass { OK } else { CHECK })
        }
        Command::Translate { graph, direction, cocycle, tuples, evaluator, degree, coeff, color_order } => {
            let g = load_valid(graph, out)?;
            let order = match color_order {
                Order::Forward => ColorOrder::Forward,
                Order::Reversed => ColorOrder::Reversed,
            };
            match direction {
                Direction::CubToCat => {
                    let cocycle = cocycle.as_ref().ok_or_else(|| Failure::schema("--cocycle is required"))?;
                    let tuples = tuples.as_ref().ok_or_else(|| Failure::schema("--tuples is required"))?;
                    cub_to_cat(&g, cocycle, tuples, order, cli.seed, out)
                }
                Direction::CatToCub => {
                    let name = evaluator.as_ref().ok_or_else(|| Failure::schema("--evaluator is required"))?;
                    let coeff = Coefficients::parse(coeff)?;
                    let f = catalog(name, *degree, coeff)?;
                    let table = cat_to_cub(&g, &f)?;
                    emit(&table.to_doc(&g), out)?;
                    Ok(OK)
                }
            }
        }
        Command::Uct { graph, m, n } => {
            let g = load_valid(graph, out)?;
            let degrees: Vec<i64> = match n {
                Some(n) => vec![*n],
                None => (0..=g.k() as i64).collect(),
            };
            let reports = degrees.iter().map(|&n| uct_check(&g, n, *m)).collect::<Result<Vec<UctReport>, _>>()?;
            let pass = reports.iter().all(|r| r.pass);
            emit(&UctSummary { pass, reports }, out)?;
            Ok(if pass { OK } else { CHECK })
        }
    }
}

fn relative_to(file: &Path, target: &str) -> PathBuf {
    let t = Path::new(target);
    if t.is_absolute() {
        return t.to_path_buf();
    }
    file.parent().map_or_else(|| t.to_path_buf(), |dir| dir.join(t))
}

#[derive(Serialize)]
struct Info {
    k: usize,
    vertices: usize,
    edges: usize,
    squares: usize,
    cubes: Vec<usize>,
    #[serde(rename = "maxDegree", skip_serializing_if = "Option::is_none")]
    max_degree: Option<Degree>,
}

fn info(g: &KGraph) -> Info {
    Info {
        k: g.k(),
        vertices: g.num_vertices(),
        edges: g.num_edges(),
        squares: g.squares().len(),
        cubes: (0..=g.k() as i64).map(|n| g.enumerate_cubes(n).len()).collect(),
        max_degree: g.max_degree(),
    }
}

#[derive(Serialize)]
struct Single {
    group: AbelianGroup,
}

#[derive(Serialize)]
struct Entry {
    n: i64,
    group: AbelianGroup,
}

#[derive(Serialize)]
struct Many {
    groups: Vec<Entry>,
}

fn groups(
    g: &KGraph,
    opts: &GroupOpts,
    out: Option<&PathBuf>,
    mut compute: impl FnMut(i64, Coefficients) -> kgraph_core::Result<AbelianGroup>,
) -> Outcome<u8> {
    let coeff = Coefficients::parse(&opts.coeff)?;
    match opts.n {
        Some(n) => emit(&Single { group: compute(n, coeff)? }, out)?,
        None => {
            let groups = (0..=g.k() as i64)
                .map(|n| Ok(Entry { n, group: compute(n, coeff)? }))
                .collect::<Outcome<Vec<_>>>()?;
            emit(&Many { groups }, out)?
        }
    }
    Ok(OK)
}

#[derive(Serialize)]
struct UctSummary {
    pass: bool,
    reports: Vec<UctReport>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TuplesDoc {
    tuples: Vec<Vec<MorphismLiteral>>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Translation {
    direction: &'static str,
    color_order: ColorOrder,
    degree: usize,
    checks: Vec<kgraph_core::chain_maps::CheckReport>,
    values: Vec<TupleValue>,
}

fn read_tuples(g: &KGraph, path: &Path, n: usize) -> Outcome<Vec<ComposableTuple>> {
    let doc: TuplesDoc = parse(path)?;
    doc.tuples
        .iter()
        .map(|lits| {
            let ms = lits.iter().map(|l| g.from_literal(l)).collect::<kgraph_core::Result<Vec<_>>>()?;
            if n == 0 {
                return match ms.as_slice() {
                    [m] if m.is_identity() => Ok(ComposableTuple::vertex(m.range())),
                    _ => Err(Failure::schema("a 0-tuple is written as a single vertex literal")),
                };
            }
            if ms.len() != n {
                return Err(Failure::schema(format!("tuple of length {} for a {n}-cochain", ms.len())));
            }
            Ok(ComposableTuple::new(ms)?)
        })
        .collect()
}

fn cub_to_cat(g: &KGraph, cocycle: &Path, tuples: &Path, order: ColorOrder, seed: u64, out: Option<&PathBuf>) -> Outcome<u8> {
    let table = CochainTable::from_json(g, &crate::io::read(cocycle)?)
        .map_err(|e| Failure::schema(format!("{}: {e}", cocycle.display())))?;
    let tuples = read_tuples(g, tuples, table.degree)?;
    let values = translate_to_categorical(g, &table, &tuples, order)?;
    let bound = Degree::uniform(g.k(), 2);
    let mut checks = vec![cubical_cocycle_check(g, &table)?];
    checks.push(categorical_cocycle_check(g, &CubulatedCochain { table: &table, order }, &bound)?);
    if table.degree == 1 {
        checks.push(degree1_path_independence(g, &table, &bound, 20, seed)?);
    }
    let pass = checks.iter().all(|c| c.pass);
    emit(
        &Translation { direction: "cub2cat", color_order: order, degree: table.degree, checks, values },
        out,
    )?;
    Ok(if pass { OK } else { CHECK })
}
