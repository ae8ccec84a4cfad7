use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use crate::categorical::{ComposableTuple, TupleChain};
use crate::chain::{Chain, CubeTailChain, Tailed};
use crate::error::{Error, Result};
use crate::kgraph::{ColorSet, Degree, KGraph, Morphism};

/// Which linear order on colors drives the staircase construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColorOrder {
    #[default]
    Forward,
    Reversed,
}

impl ColorOrder {
    /// Position of color `c` among `1..=k` in this order.
    pub fn rank(self, k: usize, c: usize) -> usize {
        match self {
            ColorOrder::Forward => c,
            ColorOrder::Reversed => k + 1 - c,
        }
    }

    /// Members of `set` listed in this order.
    pub fn arrange(self, set: &ColorSet) -> Vec<usize> {
        let mut v = set.members().to_vec();
        if self == ColorOrder::Reversed {
            v.reverse();
        }
        v
    }
}

/// ∇_n(η, μ) = Σ_σ sgn(σ) (η_1^σ, …, η_n^σ, μ), where η_i^σ carries the
/// σ(i)-th color of η.
pub fn triangulate(g: &KGraph, t: &Tailed) -> Result<TupleChain> {
    if !t.head.is_cube() {
        return Err(Error::Bounds(format!("{} has a non-cube head", t.describe(g))));
    }
    let colors = t.head.color_type();
    let n = colors.len();
    let mut out = Chain::zero();
    if n == 0 {
        out.add_term(ComposableTuple::new(vec![t.tail.clone()])?, 1);
        return Ok(out);
    }
    for sigma in Permutation::all(n) {
        let seq: Vec<usize> = (1..=n).map(|i| colors.nth(sigma.apply(i))).collect();
        let word = g.realize(&t.head, &seq)?;
        let mut entries: Vec<Morphism> = word.iter().map(|&e| g.edge_morphism(e)).collect();
        entries.push(t.tail.clone());
        out.add_term(ComposableTuple::new(entries)?, sigma.sign());
    }
    Ok(out)
}

/// The lower and upper staircase corners b ≤ c for `entries` and `K`;
/// only the first |K| entries contribute.
pub fn staircase(g: &KGraph, entries: &[Morphism], set: &ColorSet, order: ColorOrder) -> (Degree, Degree) {
    let k = g.k();
    let ranked = order.arrange(set);
    let mut b = Degree::zero(k);
    let mut c = Degree::zero(k);
    for (i, &ki) in ranked.iter().enumerate() {
        let d = entries[i].degree();
        let rk = order.rank(k, ki);
        for j in 1..=k {
            let rj = order.rank(k, j);
            if rj > rk {
                b.add_at(j, d.get(j));
            }
            if rj >= rk {
                c.add_at(j, d.get(j));
            }
        }
    }
    (b, c)
}

/// □̂_n(λ_0, …, λ_n; K) = (λ(b, c), λ(c, d(λ))) with λ = λ_0⋯λ_n.
pub fn box_hat(g: &KGraph, t: &ComposableTuple, set: &ColorSet, order: ColorOrder) -> Result<Tailed> {
    if t.len() != set.len() + 1 {
        return Err(Error::Index(format!("tuple of length {} with |K| = {}", t.len(), set.len())));
    }
    let lambda = g.compose_all(t.entries())?;
    let (b, c) = staircase(g, t.entries(), set, order);
    let head = g.segment(&lambda, &b, &c)?;
    let tail = g.segment(&lambda, &c, lambda.degree())?;
    Ok(Tailed { head, tail })
}

/// □_n(t; K) = ⌈□̂_n(t; K)⌋_K.
pub fn box_k(g: &KGraph, t: &ComposableTuple, set: &ColorSet, order: ColorOrder) -> Result<CubeTailChain> {
    rect_chain(g, &box_hat(g, t, set, order)?, set)
}

/// □_n(λ_0, …, λ_n) = Σ_{|K| = n} □_n(…; K); zero when n > k.
pub fn cubulate(g: &KGraph, t: &ComposableTuple, order: ColorOrder) -> Result<CubeTailChain> {
    if t.is_empty() {
        return Err(Error::Index("cubulation needs a nonempty tuple".into()));
    }
    let n = t.len() - 1;
    let mut out = Chain::zero();
    for set in ColorSet::subsets(g.k(), n) {
        out.add(&box_k(g, t, &set, order)?);
    }
    Ok(out)
}

/// ⌈(ρ, τ)⌋_K = Σ_{m ∈ [0, d(ρ) − e_K]} (ρ(m, m+e_K), ρ(m+e_K, d(ρ))·τ); zero if degenerate.
pub fn rect_chain(g: &KGraph, r: &Tailed, set: &ColorSet) -> Result<CubeTailChain> {
    let rho = &r.head;
    let d = rho.degree();
    let ek = Degree::of_set(g.k(), set);
    let mut out = Chain::zero();
    let Some(top) = d.checked_sub(&ek) else { return Ok(out) };
    if !rho.color_type().is_subset(set) {
        return Err(Error::Bounds(format!(
            "color type {} is not inside {}",
            rho.color_type(),
            set
        )));
    }
    for m in Degree::box_points(&Degree::zero(g.k()), &top) {
        let hi = m.add(&ek);
        let head = g.segment(rho, &m, &hi)?;
        let rest = g.segment(rho, &hi, d)?;
        let tail = g.compose(&rest, &r.tail)?;
        out.add_term(Tailed { head, tail }, 1);
    }
    Ok(out)
}

/// Front face, its companion, back face and its companion of a rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectFaces {
    pub front: Tailed,
    pub front_companion: Tailed,
    pub back: Tailed,
    pub back_companion: Tailed,
}

/// F̂^0_{K,j}, S_{K,j}, F̂^1_{K,j}, R_{K,j} peeling off color K_(j).
pub fn rect_faces(g: &KGraph, r: &Tailed, set: &ColorSet, j: usize) -> Result<RectFaces> {
    if j == 0 || j > set.len() {
        return Err(Error::Index(format!("face {} of a {}-rectangle", j, set.len())));
    }
    let [f0, s, f1, rr] = g.color_faces(&r.head, set.nth(j))?;
    let front_tail = g.compose(&s, &r.tail)?;
    let back_companion_tail = g.compose(&f1, &r.tail)?;
    Ok(RectFaces {
        front: Tailed { head: f0, tail: front_tail },
        front_companion: Tailed { head: s, tail: r.tail.clone() },
        back: Tailed { head: f1, tail: r.tail.clone() },
        back_companion: Tailed { head: rr, tail: back_companion_tail },
    })
}

/// F^l_{K,j} = ⌈F̂^l_{K,j}⌋_{K∖K_(j)}.
pub fn rect_face_chain(g: &KGraph, r: &Tailed, set: &ColorSet, j: usize, l: u8) -> Result<CubeTailChain> {
    let faces = rect_faces(g, r, set, j)?;
    let face = if l == 0 { faces.front } else { faces.back };
    rect_chain(g, &face, &set.without(set.nth(j)))
}

/// m(J, q) = max{i ∈ 0..n−1 : J_(i) ≤ q} with J_(0) = 0 and |J| = n − 1.
pub fn m_index(set: &ColorSet, q: usize) -> usize {
    (1..=set.len()).filter(|&i| set.nth(i) <= q).max().unwrap_or(0)
}

/// Ξ̂(λ_0, …, λ_n; J, q).
pub fn xi_hat(g: &KGraph, t: &ComposableTuple, set: &ColorSet, q: usize) -> Result<Tailed> {
    let n = t.len().checked_sub(1).ok_or_else(|| Error::Index("empty tuple".into()))?;
    if n == 0 || set.len() != n - 1 {
        return Err(Error::Index(format!("|J| = {} for a tuple of length {}", set.len(), t.len())));
    }
    if q > g.k() {
        return Err(Error::Index(format!("q = {} exceeds k = {}", q, g.k())));
    }
    let k = g.k();
    let e = t.entries();
    let m = m_index(set, q);
    let mut r = Degree::zero(k);
    let mut s = Degree::zero(k);
    let mut stripe = |d: &Degree, from_r: usize, from_s: usize| {
        for j in 1..=k {
            if j >= from_r {
                r.add_at(j, d.get(j));
            }
            if j >= from_s {
                s.add_at(j, d.get(j));
            }
        }
    };
    for i in 1..=m {
        stripe(e[i - 1].degree(), set.nth(i) + 1, set.nth(i));
    }
    stripe(e[m].degree(), q + 1, q + 1);
    for i in m + 1..n {
        stripe(e[i].degree(), set.nth(i) + 1, set.nth(i));
    }
    let lambda = g.compose_all(e)?;
    let head = g.segment(&lambda, &r, &s)?;
    let tail = g.segment(&lambda, &s, lambda.degree())?;
    Ok(Tailed { head, tail })
}

/// Ξ(…; J, q) = ⌈Ξ̂(…; J, q)⌋_J.
pub fn xi(g: &KGraph, t: &ComposableTuple, set: &ColorSet, q: usize) -> Result<CubeTailChain> {
    rect_chain(g, &xi_hat(g, t, set, q)?, set)
}
