use std::collections::HashMap;

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::kgraph::{Degree, KGraph, Morphism, VertexId};
use crate::linalg::{homology_with, AbelianGroup, Coefficients, SparseIntMatrix};

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// (λ_0, …, λ_{n−1}) with s(λ_i) = r(λ_{i+1}). The anchor is r(λ_0), or the
/// vertex itself for the empty tuple.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComposableTuple {
    anchor: VertexId,
    entries: Vec<Morphism>,
}

impl ComposableTuple {
    pub fn new(entries: Vec<Morphism>) -> Result<Self> {
        let first = entries
            .first()
            .ok_or_else(|| Error::NotComposable("use ComposableTuple::vertex for empty tuples".into()))?;
        for (i, w) in entries.windows(2).enumerate() {
            if w[0].source() != w[1].range() {
                return Err(Error::NotComposable(format!("entries {} and {} do not compose", i, i + 1)));
            }
        }
        Ok(ComposableTuple { anchor: first.range(), entries })
    }

    pub fn vertex(v: VertexId) -> Self {
        ComposableTuple { anchor: v, entries: Vec::new() }
    }

    pub fn entries(&self) -> &[Morphism] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn anchor(&self) -> VertexId {
        self.anchor
    }

    /// s(last entry), or the anchor of an empty tuple.
    pub fn source(&self) -> VertexId {
        self.entries.last().map_or(self.anchor, |m| m.source())
    }

    pub fn total_degree(&self, k: usize) -> Degree {
        self.entries.iter().fold(Degree::zero(k), |acc, m| acc.add(m.degree()))
    }

    /// Drop the first entry.
    pub fn tail(&self) -> ComposableTuple {
        match self.entries.first() {
            None => self.clone(),
            Some(first) => ComposableTuple {
                anchor: if self.entries.len() == 1 { first.source() } else { self.entries[1].range() },
                entries: self.entries[1..].to_vec(),
            },
        }
    }

    /// Drop the last entry.
    pub fn front(&self) -> ComposableTuple {
        let mut entries = self.entries.clone();
        entries.pop();
        ComposableTuple { anchor: self.anchor, entries }
    }

    /// Replace entries i−1, i by their composite (1 ≤ i < len).
    pub fn merge(&self, g: &KGraph, i: usize) -> Result<ComposableTuple> {
        let mut entries = Vec::with_capacity(self.entries.len() - 1);
        entries.extend_from_slice(&self.entries[..i - 1]);
        entries.push(g.compose(&self.entries[i - 1], &self.entries[i])?);
        entries.extend_from_slice(&self.entries[i + 1..]);
        Ok(ComposableTuple { anchor: self.anchor, entries })
    }

    /// Append a morphism with range `self.source()`.
    pub fn push(&self, m: Morphism) -> Result<ComposableTuple> {
        if m.range() != self.source() {
            return Err(Error::NotComposable("appended entry does not compose".into()));
        }
        let mut entries = self.entries.clone();
        entries.push(m);
        Ok(ComposableTuple { anchor: self.anchor, entries })
    }

    /// Apply `f` to every entry.
    pub fn map(&self, mut f: impl FnMut(&Morphism) -> Result<Morphism>, anchor: VertexId) -> Result<ComposableTuple> {
        let entries = self.entries.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(ComposableTuple { anchor: entries.first().map_or(anchor, |m| m.range()), entries })
    }

    pub fn describe(&self, g: &KGraph) -> String {
        if self.entries.is_empty() {
            return format!("<{}>", g.vertex_name(self.anchor));
        }
        let parts: Vec<String> = self.entries.iter().map(|m| g.describe(m)).collect();
        format!("({})", parts.join(", "))
    }
}

pub type TupleChain = Chain<ComposableTuple>;

/// Bar-resolution boundary on a tuple of length n+1 ≥ 2:
/// (λ_1, …, λ_n) + Σ_{i=1}^n (−1)^i (…, λ_{i−1}λ_i, …). Zero on length 1;
/// use [`tuple_augmentation`] there.
pub fn tuple_boundary(g: &KGraph, t: &ComposableTuple) -> Result<TupleChain> {
    let len = t.len();
    let mut out = Chain::zero();
    if len < 2 {
        return Ok(out);
    }
    out.add_term(t.tail(), 1);
    for i in 1..len {
        out.add_term(t.merge(g, i)?, sign(i));
    }
    Ok(out)
}

/// ε on length-1 tuples: each maps to 1.
pub fn tuple_augmentation(chain: &TupleChain) -> i64 {
    chain.iter().filter(|(t, _)| t.len() == 1).map(|(_, c)| c).sum()
}

/// h_n(λ_0, …, λ_n) = (−1)^{n+1}(λ_0, …, λ_n, id_w) with w = s(λ_n).
pub fn standard_homotopy(g: &KGraph, t: &ComposableTuple) -> Result<TupleChain> {
    let n = t.len() - 1;
    let w = g.identity(t.source());
    Ok(Chain::single(t.push(w)?, -sign(n)))
}

/// h_{−1}(1) = (id_w).
pub fn standard_homotopy_unit(g: &KGraph, w: VertexId) -> TupleChain {
    Chain::single(ComposableTuple { anchor: w, entries: vec![g.identity(w)] }, 1)
}

/// Boundary of the categorical chain complex on n-tuples:
/// (λ_1, …) + Σ_{i=1}^{n−1} (−1)^i (…, λ_{i−1}λ_i, …) + (−1)^n (…, λ_{n−2}).
/// On the empty tuple it is zero (unreduced) or the augmentation (reduced).
pub fn cat_boundary(g: &KGraph, t: &ComposableTuple) -> Result<TupleChain> {
    let n = t.len();
    let mut out = Chain::zero();
    if n == 0 {
        return Ok(out);
    }
    out.add_term(t.tail(), 1);
    for i in 1..n {
        out.add_term(t.merge(g, i)?, sign(i));
    }
    out.add_term(t.front(), sign(n));
    Ok(out)
}

/// A categorical n-cochain with constant coefficients.
pub trait CategoricalCochain: Sync {
    fn degree(&self) -> usize;
    fn coefficients(&self) -> Coefficients;
    fn evaluate(&self, g: &KGraph, t: &ComposableTuple) -> Result<i64>;
}

/// (δf)(λ_0, …, λ_n) for an n-cochain `f`.
pub fn tuple_coboundary(g: &KGraph, f: &dyn CategoricalCochain, t: &ComposableTuple) -> Result<i64> {
    if t.len() != f.degree() + 1 {
        return Err(Error::Index(format!("tuple of length {} for a {}-cochain", t.len(), f.degree())));
    }
    let mut acc = 0i64;
    for (face, c) in cat_boundary(g, t)?.iter() {
        acc += c * f.evaluate(g, face)?;
    }
    Ok(f.coefficients().reduce(acc))
}

/// A vertex α such that every vΛα is a singleton {α_v}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialVertex {
    pub alpha: VertexId,
    /// α_v indexed by vertex.
    pub paths: Vec<Morphism>,
}

/// Find an initial vertex; `None` for infinite categories or when none exists.
pub fn initial_vertex(g: &KGraph) -> Option<InitialVertex> {
    let max = g.max_degree()?;
    let all = g.morphisms_up_to(&max);
    let mut hits: HashMap<(VertexId, VertexId), Vec<&Morphism>> = HashMap::new();
    for m in &all {
        hits.entry((m.range(), m.source())).or_default().push(m);
    }
    'alpha: for alpha in g.vertices() {
        let mut paths = Vec::with_capacity(g.num_vertices());
        for v in g.vertices() {
            match hits.get(&(v, alpha)) {
                Some(ms) if ms.len() == 1 => paths.push(ms[0].clone()),
                _ => continue 'alpha,
            }
        }
        return Some(InitialVertex { alpha, paths });
    }
    None
}

/// h_n(λ_0, …, λ_{n−1}) = (−1)^{n+1}(λ_0, …, λ_{n−1}, α_{s(λ_{n−1})}) on the reduced categorical complex.
pub fn initial_homotopy(iv: &InitialVertex, t: &ComposableTuple) -> Result<TupleChain> {
    let n = t.len();
    let alpha_s = iv.paths[t.source()].clone();
    Ok(Chain::single(t.push(alpha_s)?, -sign(n)))
}

/// h_{−1}(1) = ⟨α⟩.
pub fn initial_homotopy_unit(iv: &InitialVertex) -> TupleChain {
    Chain::single(ComposableTuple::vertex(iv.alpha), 1)
}

/// Composable tuples of the given length with total degree ≤ `bound`.
pub fn enumerate_tuples(g: &KGraph, len: usize, bound: &Degree) -> Vec<ComposableTuple> {
    if len == 0 {
        return g.vertices().map(ComposableTuple::vertex).collect();
    }
    let mut from: Vec<Vec<Morphism>> = vec![Vec::new(); g.num_vertices()];
    for m in g.morphisms_up_to(bound) {
        from[m.range()].push(m);
    }
    let mut out = Vec::new();
    let mut cur: Vec<Morphism> = Vec::with_capacity(len);
    fn rec(
        from: &[Vec<Morphism>],
        len: usize,
        remaining: &Degree,
        v: Option<VertexId>,
        cur: &mut Vec<Morphism>,
        out: &mut Vec<ComposableTuple>,
    ) {
        if cur.len() == len {
            out.push(ComposableTuple { anchor: cur[0].range(), entries: cur.clone() });
            return;
        }
        let candidates: Box<dyn Iterator<Item = &Morphism>> = match v {
            Some(v) => Box::new(from[v].iter()),
            None => Box::new(from.iter().flatten()),
        };
        for m in candidates {
            if let Some(rest) = remaining.checked_sub(m.degree()) {
                cur.push(m.clone());
                rec(from, len, &rest, Some(m.source()), cur, out);
                cur.pop();
            }
        }
    }
    rec(&from, len, bound, None, &mut cur, &mut out);
    out
}

#[derive(Clone, Debug)]
pub struct CatHomologyOptions {
    pub probe: Degree,
    pub max_generators: usize,
    pub reduced: bool,
}

impl CatHomologyOptions {
    pub fn new(probe: Degree) -> Self {
        CatHomologyOptions { probe, max_generators: 20_000, reduced: false }
    }
}

/// Bases of the categorical chain groups of a finite category, built on demand.
struct CatBasis<'g> {
    g: &'g KGraph,
    max: Degree,
    guard: usize,
    levels: HashMap<usize, (Vec<ComposableTuple>, HashMap<ComposableTuple, usize>)>,
}

impl<'g> CatBasis<'g> {
    fn level(&mut self, n: usize) -> Result<&(Vec<ComposableTuple>, HashMap<ComposableTuple, usize>)> {
        if !self.levels.contains_key(&n) {
            let tuples = enumerate_tuples(self.g, n, &self.max);
            if tuples.len() > self.guard {
                return Err(Error::SizeGuard(format!(
                    "{} composable {}-tuples exceed the limit {}",
                    tuples.len(),
                    n,
                    self.guard
                )));
            }
            let index = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
            self.levels.insert(n, (tuples, index));
        }
        Ok(&self.levels[&n])
    }

    fn dim(&mut self, n: i64, reduced: bool) -> Result<usize> {
        Ok(match n {
            n if n < -1 => 0,
            -1 => usize::from(reduced),
            n => self.level(n as usize)?.0.len(),
        })
    }

    fn boundary(&mut self, n: i64, reduced: bool) -> Result<SparseIntMatrix> {
        let rows = self.dim(n - 1, reduced)?;
        let cols = self.dim(n, reduced)?;
        let mut m = SparseIntMatrix::new(rows, cols);
        if n == 0 && reduced {
            for c in 0..cols {
                m.add_to(0, c, 1);
            }
        }
        if n <= 0 {
            return Ok(m);
        }
        let g = self.g;
        let cols_tuples = self.level(n as usize)?.0.clone();
        let (_, index) = self.level(n as usize - 1)?;
        for (c, t) in cols_tuples.iter().enumerate() {
            for (face, coeff) in cat_boundary(g, t)?.iter() {
                let r = *index.get(face).expect("faces of enumerated tuples are enumerated");
                m.add_to(r, c, coeff);
            }
        }
        Ok(m)
    }
}

/// H_n(Λ) from the full bar complex; finite categories only.
pub fn cat_homology(g: &KGraph, n: i64, coeff: Coefficients, opts: &CatHomologyOptions) -> Result<AbelianGroup> {
    let report = g.is_finite_category(&opts.probe);
    if !report.finite {
        return Err(Error::InfiniteCategory(format!(
            "morphism beyond probe bound {}: {:?}",
            opts.probe,
            report.witness.unwrap_or_default()
        )));
    }
    let max = g
        .max_degree()
        .ok_or_else(|| Error::InfiniteCategory("monochrome cycle".into()))?;
    if n < 0 && !(n == -1 && opts.reduced) {
        return Ok(AbelianGroup::trivial());
    }
    let mut basis = CatBasis { g, max, guard: opts.max_generators, levels: HashMap::new() };
    let a = basis.boundary(n, opts.reduced)?;
    let b = basis.boundary(n + 1, opts.reduced)?;
    homology_with(&a, &b, coeff)
}
