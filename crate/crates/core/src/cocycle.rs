//! Translating cochains between the cubical and categorical complexes.

use std::collections::BTreeMap;
use std::hash::{DefaultHasher, Hash, Hasher};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::categorical::{enumerate_tuples, tuple_coboundary, CategoricalCochain, ComposableTuple};
use crate::chain_maps::{staircase, CheckReport, ColorOrder, Permutation};
use crate::cubical::{coboundary, CochainTable};
use crate::error::{Error, Result};
use crate::kgraph::{ColorSet, Degree, KGraph, Morphism};
use crate::linalg::Coefficients;

/// A categorical cochain given by finitely many values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCochain {
    pub degree: usize,
    pub coeff: Coefficients,
    pub values: BTreeMap<ComposableTuple, i64>,
}

impl CategoricalCochain for TableCochain {
    fn degree(&self) -> usize {
        self.degree
    }

    fn coefficients(&self) -> Coefficients {
        self.coeff
    }

    fn evaluate(&self, g: &KGraph, t: &ComposableTuple) -> Result<i64> {
        self.values
            .get(t)
            .copied()
            .ok_or_else(|| Error::Undefined(format!("no value for {}", t.describe(g))))
    }
}

type CochainFn = dyn Fn(&KGraph, &ComposableTuple) -> Result<i64> + Send + Sync;

/// A categorical cochain computed by a function.
pub struct ClosureCochain {
    degree: usize,
    coeff: Coefficients,
    f: Box<CochainFn>,
}

impl ClosureCochain {
    pub fn new(
        degree: usize,
        coeff: Coefficients,
        f: impl Fn(&KGraph, &ComposableTuple) -> Result<i64> + Send + Sync + 'static,
    ) -> Self {
        ClosureCochain { degree, coeff, f: Box::new(f) }
    }
}

impl CategoricalCochain for ClosureCochain {
    fn degree(&self) -> usize {
        self.degree
    }

    fn coefficients(&self) -> Coefficients {
        self.coeff
    }

    fn evaluate(&self, g: &KGraph, t: &ComposableTuple) -> Result<i64> {
        if t.len() != self.degree {
            return Err(Error::Index(format!("tuple of length {} for a {}-cochain", t.len(), self.degree)));
        }
        Ok(self.coeff.reduce((self.f)(g, t)?))
    }
}

/// Named evaluators:
/// `zero`, `degree:i`, `bilinear:i,j`, `vertex:v` and `hash:seed`.
pub fn catalog(name: &str, degree: Option<usize>, coeff: Coefficients) -> Result<ClosureCochain> {
    let (kind, arg) = name.split_once(':').unwrap_or((name, ""));
    let fixed = |d: usize| -> Result<usize> {
        match degree {
            Some(x) if x != d => Err(Error::Schema(format!("evaluator `{name}` has degree {d}, not {x}"))),
            _ => Ok(d),
        }
    };
    let color = |s: &str| -> Result<usize> {
        s.trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c >= 1)
            .ok_or_else(|| Error::Schema(format!("bad color `{s}` in `{name}`")))
    };
    let need_degree = || degree.ok_or_else(|| Error::Schema(format!("evaluator `{name}` needs a degree")));
    match kind {
        "zero" => Ok(ClosureCochain::new(need_degree()?, coeff, |_, _| Ok(0))),
        "degree" => {
            let i = color(arg)?;
            Ok(ClosureCochain::new(fixed(1)?, coeff, move |g, t| entry_degree(g, &t.entries()[0], i)))
        }
        "bilinear" => {
            let (a, b) = arg
                .split_once(',')
                .ok_or_else(|| Error::Schema(format!("`{name}` needs two colors")))?;
            let (i, j) = (color(a)?, color(b)?);
            Ok(ClosureCochain::new(fixed(2)?, coeff, move |g, t| {
                Ok(entry_degree(g, &t.entries()[0], i)? * entry_degree(g, &t.entries()[1], j)?)
            }))
        }
        "vertex" => {
            let v = arg.to_string();
            Ok(ClosureCochain::new(fixed(0)?, coeff, move |g, t| Ok(i64::from(g.vertex_name(t.anchor()) == v))))
        }
        "hash" => {
            let seed: u64 = arg
                .parse()
                .map_err(|_| Error::Schema(format!("bad seed in `{name}`")))?;
            Ok(ClosureCochain::new(need_degree()?, coeff, move |_, t| {
                let mut h = DefaultHasher::new();
                seed.hash(&mut h);
                t.hash(&mut h);
                Ok((h.finish() % 7) as i64 - 3)
            }))
        }
        _ => Err(Error::Schema(format!("unknown evaluator `{name}`"))),
    }
}

fn entry_degree(g: &KGraph, m: &Morphism, i: usize) -> Result<i64> {
    if i > g.k() {
        return Err(Error::Index(format!("color {} exceeds k = {}", i, g.k())));
    }
    Ok(i64::from(m.degree().get(i)))
}

/// ∇*f: (∇*f)(η) = Σ_σ sgn(σ) f(η_1^σ, …, η_n^σ).
pub fn cat_to_cub(g: &KGraph, f: &dyn CategoricalCochain) -> Result<CochainTable> {
    let n = f.degree();
    let coeff = f.coefficients();
    let mut values = BTreeMap::new();
    for cube in g.enumerate_cubes(n as i64) {
        let value = if n == 0 {
            f.evaluate(g, &ComposableTuple::vertex(cube.range()))?
        } else {
            let colors = cube.color_type();
            let mut acc = 0i64;
            for sigma in Permutation::all(n) {
                let seq: Vec<usize> = (1..=n).map(|i| colors.nth(sigma.apply(i))).collect();
                let word = g.realize(&cube, &seq)?;
                let t = ComposableTuple::new(word.iter().map(|&e| g.edge_morphism(e)).collect())?;
                acc += sigma.sign() * f.evaluate(g, &t)?;
            }
            acc
        };
        values.insert(cube, coeff.reduce(value));
    }
    Ok(CochainTable { degree: n, coeff, values })
}

/// (□*g)(λ_0, …, λ_{n−1}) = Σ_K Σ_{m ∈ [b, c − e_K]} g(λ(m, m + e_K)).
pub fn cub_to_cat_value(g: &KGraph, table: &CochainTable, t: &ComposableTuple, order: ColorOrder) -> Result<i64> {
    let n = table.degree;
    if t.len() != n {
        return Err(Error::Index(format!("tuple of length {} for a {}-cochain", t.len(), n)));
    }
    let lambda = if t.is_empty() { g.identity(t.anchor()) } else { g.compose_all(t.entries())? };
    let mut acc = 0i64;
    for set in ColorSet::subsets(g.k(), n) {
        let (b, c) = staircase(g, t.entries(), &set, order);
        let ek = Degree::of_set(g.k(), &set);
        let Some(top) = c.checked_sub(&ek) else { continue };
        if !b.le(&top) {
            continue;
        }
        for m in Degree::box_points(&b, &top) {
            let cube = g.segment(&lambda, &m, &m.add(&ek))?;
            acc += table.get(&cube)?;
        }
    }
    Ok(table.coeff.reduce(acc))
}

/// □*g as a categorical cochain.
pub struct CubulatedCochain<'a> {
    pub table: &'a CochainTable,
    pub order: ColorOrder,
}

impl CategoricalCochain for CubulatedCochain<'_> {
    fn degree(&self) -> usize {
        self.table.degree
    }

    fn coefficients(&self) -> Coefficients {
        self.table.coeff
    }

    fn evaluate(&self, g: &KGraph, t: &ComposableTuple) -> Result<i64> {
        cub_to_cat_value(g, self.table, t, self.order)
    }
}

/// ∇*□*g = g exactly.
pub fn round_trip(g: &KGraph, table: &CochainTable, order: ColorOrder) -> Result<bool> {
    Ok(cat_to_cub(g, &CubulatedCochain { table, order })? == *table)
}

/// Uniformly random values in −5..=5, reduced into the coefficients.
pub fn random_table(g: &KGraph, degree: usize, coeff: Coefficients, rng: &mut impl Rng) -> CochainTable {
    CochainTable::tabulate(g, degree, coeff, |_| rng.gen_range(-5..=5))
}

fn report(name: &str, tested: usize, witness: Option<String>) -> CheckReport {
    CheckReport { check: name.to_string(), generators_tested: tested, pass: witness.is_none(), first_witness: witness }
}

/// δg = 0, with the first cube where δg is nonzero as witness.
pub fn cubical_cocycle_check(g: &KGraph, table: &CochainTable) -> Result<CheckReport> {
    let d = coboundary(g, table)?;
    let witness = d
        .values
        .iter()
        .find(|(_, &v)| v != 0)
        .map(|(cube, v)| format!("δg({}) = {}", g.describe(cube), v));
    Ok(report("cubical-cocycle", d.values.len(), witness))
}

/// δf = 0 on every (n+1)-tuple of total degree ≤ `bound`.
pub fn categorical_cocycle_check(g: &KGraph, f: &dyn CategoricalCochain, bound: &Degree) -> Result<CheckReport> {
    let tuples = enumerate_tuples(g, f.degree() + 1, bound);
    let mut witness = None;
    for t in &tuples {
        let v = tuple_coboundary(g, f, t)?;
        if v != 0 {
            witness = Some(format!("δf{} = {}", t.describe(g), v));
            break;
        }
    }
    Ok(report("categorical-cocycle", tuples.len(), witness))
}

/// δ(□*g) = □*(δg) on every (n+1)-tuple of total degree ≤ `bound`, with δg
/// oriented by `order` (the reversed orientation of an m-cube differs by (−1)^{m+1}).
pub fn cubulation_cochain_law(g: &KGraph, table: &CochainTable, bound: &Degree, order: ColorOrder) -> Result<CheckReport> {
    let mut dg = coboundary(g, table)?;
    if order == ColorOrder::Reversed && table.degree % 2 == 1 {
        for v in dg.values.values_mut() {
            *v = dg.coeff.reduce(-*v);
        }
    }
    let pulled = CubulatedCochain { table, order };
    let tuples = enumerate_tuples(g, table.degree + 1, bound);
    let mut witness = None;
    for t in &tuples {
        let lhs = tuple_coboundary(g, &pulled, t)?;
        let rhs = cub_to_cat_value(g, &dg, t, order)?;
        if lhs != rhs {
            witness = Some(format!("{}: {} vs {}", t.describe(g), lhs, rhs));
            break;
        }
    }
    Ok(report("cubulation-cochain-law", tuples.len(), witness))
}

/// δ(∇*f) = ∇*(δf) on every (n+1)-cube.
pub fn triangulation_cochain_law(g: &KGraph, f: &dyn CategoricalCochain) -> Result<CheckReport> {
    let lhs = coboundary(g, &cat_to_cub(g, f)?)?;
    let rhs = cat_to_cub(g, &Coboundary { inner: f })?;
    let witness = lhs
        .values
        .iter()
        .find(|(cube, v)| rhs.values.get(*cube) != Some(*v))
        .map(|(cube, v)| format!("{}: {} vs {:?}", g.describe(cube), v, rhs.values.get(cube)));
    Ok(report("triangulation-cochain-law", lhs.values.len(), witness))
}

/// δf viewed as a cochain one degree up.
struct Coboundary<'a> {
    inner: &'a dyn CategoricalCochain,
}

impl CategoricalCochain for Coboundary<'_> {
    fn degree(&self) -> usize {
        self.inner.degree() + 1
    }

    fn coefficients(&self) -> Coefficients {
        self.inner.coefficients()
    }

    fn evaluate(&self, g: &KGraph, t: &ComposableTuple) -> Result<i64> {
        tuple_coboundary(g, self.inner, t)
    }
}

/// For a cubical 1-cocycle g, (□*g)(λ) equals Σ g(e_i) along randomly chosen
/// factorizations λ = e_1⋯e_r into edges.
pub fn degree1_path_independence(
    g: &KGraph,
    table: &CochainTable,
    bound: &Degree,
    trials: usize,
    seed: u64,
) -> Result<CheckReport> {
    if table.degree != 1 {
        return Err(Error::Index(format!("expected a 1-cochain, got degree {}", table.degree)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tested = 0;
    for lambda in g.morphisms_up_to(bound) {
        if lambda.is_identity() {
            continue;
        }
        let expected = cub_to_cat_value(g, table, &ComposableTuple::new(vec![lambda.clone()])?, ColorOrder::Forward)?;
        let mut colors = lambda.degree().ascending_colors();
        for _ in 0..trials {
            colors.shuffle(&mut rng);
            let word = g.realize(&lambda, &colors)?;
            let mut acc = 0i64;
            for &e in &word {
                acc += table.get(&g.edge_morphism(e))?;
            }
            tested += 1;
            if table.coeff.reduce(acc) != expected {
                let names = g.word_names(&word).join(",");
                let witness = format!("{} along [{}]: {} vs {}", g.describe(&lambda), names, acc, expected);
                return Ok(report("degree1-path-independence", tested, Some(witness)));
            }
        }
    }
    Ok(report("degree1-path-independence", tested, None))
}

/// One categorical value produced by translation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleValue {
    pub tuple: Vec<crate::kgraph::MorphismLiteral>,
    pub value: i64,
}

/// Evaluate □*g on the given tuples.
pub fn translate_to_categorical(
    g: &KGraph,
    table: &CochainTable,
    tuples: &[ComposableTuple],
    order: ColorOrder,
) -> Result<Vec<TupleValue>> {
    tuples
        .iter()
        .map(|t| {
            let value = cub_to_cat_value(g, table, t, order)?;
            let tuple = if t.is_empty() {
                vec![g.to_literal(&g.identity(t.anchor()))]
            } else {
                t.entries().iter().map(|m| g.to_literal(m)).collect()
            };
            Ok(TupleValue { tuple, value })
        })
        .collect()
}
