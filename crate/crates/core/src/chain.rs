use std::collections::BTreeMap;

use crate::kgraph::{KGraph, Morphism};

/// Finite ℤ-linear combination with canonical (sorted, zero-free) storage.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain<T: Ord> {
    terms: BTreeMap<T, i64>,
}

impl<T: Ord> Default for Chain<T> {
    fn default() -> Self {
        Chain { terms: BTreeMap::new() }
    }
}

impl<T: Ord + Clone> Chain<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(t: T, c: i64) -> Self {
        let mut ch = Self::zero();
        ch.add_term(t, c);
        ch
    }

    pub fn add_term(&mut self, t: T, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(t);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let v = o.get().checked_add(c).expect("chain coefficient overflow");
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Chain<T>, s: i64) {
        for (t, &c) in &other.terms {
            self.add_term(t.clone(), c.checked_mul(s).expect("chain coefficient overflow"));
        }
    }

    pub fn add(&mut self, other: &Chain<T>) {
        self.add_scaled(other, 1);
    }

    pub fn sub(&mut self, other: &Chain<T>) {
        self.add_scaled(other, -1);
    }

    pub fn scaled(&self, s: i64) -> Chain<T> {
        let mut out = Chain::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, t: &T) -> i64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, i64)> {
        self.terms.iter().map(|(t, &c)| (t, c))
    }

    /// Sum of coefficients (the augmentation of a degree-0 chain).
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Apply a linear map given on generators.
    pub fn map_linear<U: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&T) -> Result<Chain<U>, E>,
    ) -> Result<Chain<U>, E> {
        let mut out = Chain::zero();
        for (t, &c) in &self.terms {
            out.add_scaled(&f(t)?, c);
        }
        Ok(out)
    }
}

impl<T: Ord + Clone> FromIterator<(T, i64)> for Chain<T> {
    fn from_iter<I: IntoIterator<Item = (T, i64)>>(iter: I) -> Self {
        let mut ch = Chain::zero();
        for (t, c) in iter {
            ch.add_term(t, c);
        }
        ch
    }
}

/// A morphism of the coslice at `s(tail)`: the pair `(head, tail)` with
/// `s(head) = r(tail)`. When `head` is a cube this is a free generator of
/// the cubical resolution.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tailed {
    pub head: Morphism,
    pub tail: Morphism,
}

impl Tailed {
    pub fn new(g: &KGraph, head: Morphism, tail: Morphism) -> crate::Result<Self> {
        if head.source() != tail.range() {
            return Err(crate::Error::NotComposable(format!(
                "head {} does not end where tail {} starts",
                g.describe(&head),
                g.describe(&tail)
            )));
        }
        Ok(Tailed { head, tail })
    }

    /// `(η, id_{s(η)})`.
    pub fn bare(g: &KGraph, head: Morphism) -> Self {
        let tail = g.identity(head.source());
        Tailed { head, tail }
    }

    pub fn describe(&self, g: &KGraph) -> String {
        format!("({}, {})", g.describe(&self.head), g.describe(&self.tail))
    }
}

pub type CubeTailChain = Chain<Tailed>;
