use serde::{Deserialize, Serialize};

use super::maps::*;
use crate::categorical::{enumerate_tuples, tuple_augmentation, tuple_boundary, ComposableTuple, TupleChain};
use crate::chain::{Chain, CubeTailChain, Tailed};
use crate::cubical::{boundary_with_tail, tailed_augmentation};
use crate::error::Result;
use crate::kgraph::{ColorSet, Degree, KGraph, KGraphMorphism, Morphism};

/// Outcome of one family of identities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub check: String,
    pub generators_tested: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub bound: Degree,
    pub checks: Vec<CheckReport>,
    pub pass: bool,
}

impl VerifyReport {
    fn from_checks(bound: &Degree, checks: Vec<CheckReport>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        VerifyReport { bound: bound.clone(), checks, pass }
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.check == name)
    }
}

struct Tally {
    name: &'static str,
    tested: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, tested: 0, witness: None }
    }

    fn record(&mut self, outcome: Result<bool>, what: impl FnOnce() -> String) {
        self.tested += 1;
        if self.witness.is_some() {
            return;
        }
        match outcome {
            Ok(true) => {}
            Ok(false) => self.witness = Some(what()),
            Err(e) => self.witness = Some(format!("{}: {}", what(), e)),
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            check: self.name.to_string(),
            generators_tested: self.tested,
            pass: self.witness.is_none(),
            first_witness: self.witness,
        }
    }
}

/// Every (cube, tail) pair with d(η) + d(μ) ≤ `bound`.
pub fn tailed_cubes(g: &KGraph, bound: &Degree) -> Vec<Tailed> {
    let mut out = Vec::new();
    for n in 0..=g.k() as i64 {
        for cube in g.enumerate_cubes(n) {
            let Some(room) = bound.checked_sub(cube.degree()) else { continue };
            for d in Degree::box_points(&Degree::zero(g.k()), &room) {
                for tail in g.morphisms_from(cube.source(), &d) {
                    out.push(Tailed { head: cube.clone(), tail });
                }
            }
        }
    }
    out
}

/// Composable tuples of length 1..=k+2 with total degree ≤ `bound`.
pub fn resolution_tuples(g: &KGraph, bound: &Degree) -> Vec<ComposableTuple> {
    (1..=g.k() + 2).flat_map(|len| enumerate_tuples(g, len, bound)).collect()
}

fn triangulate_chain(g: &KGraph, c: &CubeTailChain) -> Result<TupleChain> {
    c.map_linear(|x| triangulate(g, x))
}

fn cubulate_chain(g: &KGraph, c: &TupleChain, order: ColorOrder) -> Result<CubeTailChain> {
    c.map_linear(|t| cubulate(g, t, order))
}

fn cube_boundary_chain(g: &KGraph, c: &CubeTailChain) -> Result<CubeTailChain> {
    c.map_linear(|x| boundary_with_tail(g, x))
}

fn nabla_chain_map(g: &KGraph, x: &Tailed) -> Result<bool> {
    let image = triangulate(g, x)?;
    if x.head.degree().is_zero() {
        return Ok(tuple_augmentation(&image) == 1);
    }
    let lhs = triangulate_chain(g, &boundary_with_tail(g, x)?)?;
    let rhs = image.map_linear(|t| tuple_boundary(g, t))?;
    Ok(lhs == rhs)
}

fn box_chain_map(g: &KGraph, t: &ComposableTuple) -> Result<bool> {
    let image = cubulate(g, t, ColorOrder::Forward)?;
    if t.len() == 1 {
        return Ok(tailed_augmentation(&image) == 1);
    }
    let lhs = cubulate_chain(g, &tuple_boundary(g, t)?, ColorOrder::Forward)?;
    let rhs = cube_boundary_chain(g, &image)?;
    Ok(lhs == rhs)
}

fn box_after_nabla(g: &KGraph, x: &Tailed) -> Result<bool> {
    let back = cubulate_chain(g, &triangulate(g, x)?, ColorOrder::Forward)?;
    Ok(back == Chain::single(x.clone(), 1))
}

/// (Fbox-K) at hat and chain level, for every K of size n, l and ε.
fn fbox_k(g: &KGraph, t: &ComposableTuple) -> Result<bool> {
    let n = t.len() - 1;
    for set in ColorSet::subsets(g.k(), n) {
        let hat = box_hat(g, t, &set, ColorOrder::Forward)?;
        for l in 1..=n {
            let faces = rect_faces(g, &hat, &set, l)?;
            let kl = set.nth(l);
            let rest = set.without(kl);
            for (eps, face) in [(0u8, &faces.front), (1u8, &faces.back)] {
                let q = kl - eps as usize;
                if *face != xi_hat(g, t, &rest, q)? {
                    return Ok(false);
                }
                if rect_face_chain(g, &hat, &set, l, eps)? != xi(g, t, &rest, q)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn box_0_xi(g: &KGraph, t: &ComposableTuple) -> Result<bool> {
    let n = t.len() - 1;
    let tail = t.tail();
    for set in ColorSet::subsets(g.k(), n - 1) {
        if box_hat(g, &tail, &set, ColorOrder::Forward)? != xi_hat(g, t, &set, 0)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn box_n_xi(g: &KGraph, t: &ComposableTuple) -> Result<bool> {
    let n = t.len() - 1;
    let merged = t.merge(g, n)?;
    for set in ColorSet::subsets(g.k(), n - 1) {
        if box_hat(g, &merged, &set, ColorOrder::Forward)? != xi_hat(g, t, &set, g.k())? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn box_l_xi(g: &KGraph, t: &ComposableTuple) -> Result<bool> {
    let n = t.len() - 1;
    for l in 1..n {
        let merged = t.merge(g, l)?;
        for set in ColorSet::subsets(g.k(), n - 1) {
            let lhs = box_k(g, &merged, &set, ColorOrder::Forward)?;
            let jl = set.nth(l);
            let mut rhs = xi(g, t, &set, jl)?;
            rhs.add(&xi(g, t, &set, jl - 1)?);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// ∂⌈ρ⌋_K = Σ_{j,l} (−1)^{j+l} F^l_{K,j}.
fn rect_boundary(g: &KGraph, r: &Tailed, set: &ColorSet) -> Result<bool> {
    let lhs = cube_boundary_chain(g, &rect_chain(g, r, set)?)?;
    let mut rhs = Chain::zero();
    for j in 1..=set.len() {
        for l in 0..2u8 {
            let sign = if (j + l as usize) % 2 == 0 { 1 } else { -1 };
            rhs.add_scaled(&rect_face_chain(g, r, set, j, l)?, sign);
        }
    }
    Ok(lhs == rhs)
}

/// Gluing two rectangles along F̂¹(λ) = F̂⁰(μ).
fn rect_gluing(g: &KGraph, lambda: &Morphism, mu: &Morphism, set: &ColorSet, j: usize) -> Result<Option<bool>> {
    let id = g.identity(lambda.source());
    let fl = rect_faces(g, &Tailed { head: lambda.clone(), tail: id }, set, j)?;
    let tau2 = g.identity(mu.source());
    let fm = rect_faces(g, &Tailed { head: mu.clone(), tail: tau2.clone() }, set, j)?;
    if fl.back.head != fm.front.head {
        return Ok(None);
    }
    let s_mu = fm.front_companion.head.clone();
    let tau1 = g.compose(&s_mu, &tau2)?;
    let mut lhs = rect_chain(g, &Tailed { head: lambda.clone(), tail: tau1 }, set)?;
    lhs.add(&rect_chain(g, &Tailed { head: mu.clone(), tail: tau2.clone() }, set)?);
    let glued = g.compose(lambda, &s_mu)?;
    let via_r = g.compose(&fl.back_companion.head, mu)?;
    if glued != via_r {
        return Ok(Some(false));
    }
    Ok(Some(lhs == rect_chain(g, &Tailed { head: glued, tail: tau2 }, set)?))
}

/// Exhaustively check the identities relating ∇, □, rectangular chains and Ξ
/// on all generators within `bound`.
pub fn verify_chain_map_identities(g: &KGraph, bound: &Degree) -> VerifyReport {
    let k = g.k();
    let cubes = tailed_cubes(g, bound);
    let tuples = resolution_tuples(g, bound);
    let morphisms = g.morphisms_up_to(bound);

    let mut nabla = Tally::new("nabla-chain-map");
    let mut boxm = Tally::new("box-chain-map");
    let mut inverse = Tally::new("box-nabla-identity");
    let mut fbox = Tally::new("fbox-k");
    let mut boxl = Tally::new("box-l-xi");
    let mut rbdry = Tally::new("rect-boundary");
    let mut box0 = Tally::new("box-0-xi");
    let mut boxn = Tally::new("box-n-xi");
    let mut glue = Tally::new("rect-gluing");
    let mut degen = Tally::new("degenerate-rect");

    for x in &cubes {
        nabla.record(nabla_chain_map(g, x), || x.describe(g));
        inverse.record(box_after_nabla(g, x), || x.describe(g));
    }
    for t in &tuples {
        let n = t.len() - 1;
        boxm.record(box_chain_map(g, t), || t.describe(g));
        if n >= 1 && n <= k {
            fbox.record(fbox_k(g, t), || t.describe(g));
        }
        if n >= 1 && n <= k + 1 {
            box0.record(box_0_xi(g, t), || t.describe(g));
            boxn.record(box_n_xi(g, t), || t.describe(g));
        }
        if n >= 2 && n <= k + 1 {
            boxl.record(box_l_xi(g, t), || t.describe(g));
        }
    }
    for lambda in &morphisms {
        let ct = lambda.color_type();
        for size in 0..=k {
            for set in ColorSet::subsets(k, size) {
                if size > ct.len() {
                    degen.record(
                        rect_chain(g, &Tailed::bare(g, lambda.clone()), &set).map(|c| c.is_zero()),
                        || format!("{} in {}", g.describe(lambda), set),
                    );
                    continue;
                }
                if !ct.is_subset(&set) {
                    continue;
                }
                rbdry.record(rect_boundary(g, &Tailed::bare(g, lambda.clone()), &set), || {
                    format!("{} in {}", g.describe(lambda), set)
                });
                for j in 1..=set.len() {
                    for mu in &morphisms {
                        if mu.color_type().is_subset(&set) && lambda.degree().add(mu.degree()).le(bound) {
                            match rect_gluing(g, lambda, mu, &set, j) {
                                Ok(None) => {}
                                Ok(Some(ok)) => glue.record(Ok(ok), || {
                                    format!("{} | {} in {} j={}", g.describe(lambda), g.describe(mu), set, j)
                                }),
                                Err(e) => glue.record(Err(e), || {
                                    format!("{} | {} in {} j={}", g.describe(lambda), g.describe(mu), set, j)
                                }),
                            }
                        }
                    }
                }
            }
        }
    }

    let checks = [nabla, boxm, inverse, fbox, boxl, rbdry, box0, boxn, glue, degen]
        .into_iter()
        .map(Tally::finish)
        .collect();
    VerifyReport::from_checks(bound, checks)
}

fn map_tailed(phi: &KGraphMorphism, x: &Tailed) -> Result<Tailed> {
    Ok(Tailed { head: phi.apply(&x.head)?, tail: phi.apply(&x.tail)? })
}

fn map_tuple(phi: &KGraphMorphism, t: &ComposableTuple) -> Result<ComposableTuple> {
    t.map(|m| phi.apply(m), phi.map_vertex(t.anchor()))
}

/// P(φ)∇ = ∇φ̃ and φ̃□ = □P(φ) on all generators of the domain within `bound`.
pub fn verify_naturality(phi: &KGraphMorphism, bound: &Degree) -> VerifyReport {
    let (dom, cod) = (phi.domain(), phi.codomain());
    let mut tri = Tally::new("nabla-natural");
    let mut cub = Tally::new("box-natural");
    for x in tailed_cubes(dom, bound) {
        let outcome = (|| {
            let lhs = triangulate(dom, &x)?.map_linear(|t| Ok(Chain::single(map_tuple(phi, t)?, 1)))?;
            let rhs = triangulate(cod, &map_tailed(phi, &x)?)?;
            Ok(lhs == rhs)
        })();
        tri.record(outcome, || x.describe(dom));
    }
    for t in resolution_tuples(dom, bound) {
        let outcome = (|| {
            let lhs = cubulate(dom, &t, ColorOrder::Forward)?
                .map_linear(|x| Ok(Chain::single(map_tailed(phi, x)?, 1)))?;
            let rhs = cubulate(cod, &map_tuple(phi, &t)?, ColorOrder::Forward)?;
            Ok(lhs == rhs)
        })();
        cub.record(outcome, || t.describe(dom));
    }
    VerifyReport::from_checks(bound, vec![tri.finish(), cub.finish()])
}
