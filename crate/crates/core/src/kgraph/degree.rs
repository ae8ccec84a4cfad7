use std::fmt;

use serde::{Deserialize, Serialize};

/// An element of ℕ^k. Colors are numbered `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Degree(Vec<u32>);

impl Degree {
    pub fn zero(k: usize) -> Self {
        Degree(vec![0; k])
    }

    pub fn from_coords(coords: Vec<u32>) -> Self {
        Degree(coords)
    }

    /// The generator e_c.
    pub fn unit(k: usize, color: usize) -> Self {
        let mut d = Self::zero(k);
        d.0[color - 1] = 1;
        d
    }

    /// e_K = Σ_{c∈K} e_c.
    pub fn of_set(k: usize, set: &ColorSet) -> Self {
        let mut d = Self::zero(k);
        for &c in set.members() {
            d.0[c - 1] = 1;
        }
        d
    }

    /// Constant vector (v, …, v).
    pub fn uniform(k: usize, v: u32) -> Self {
        Degree(vec![v; k])
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    /// d_c for a color `c` in `1..=k`.
    pub fn get(&self, color: usize) -> u32 {
        self.0[color - 1]
    }

    pub fn set(&mut self, color: usize, value: u32) {
        self.0[color - 1] = value;
    }

    pub fn add_at(&mut self, color: usize, value: u32) {
        self.0[color - 1] += value;
    }

    /// |n| = Σ n_i.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Componentwise ≤.
    pub fn le(&self, other: &Degree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, other: &Degree) -> Option<Degree> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Degree)
    }

    pub fn color_type(&self) -> ColorSet {
        ColorSet::from_sorted(
            (1..=self.k()).filter(|&c| self.get(c) > 0).collect(),
        )
    }

    /// Color sequence 1^{n_1} 2^{n_2} … in ascending order.
    pub fn ascending_colors(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.total() as usize);
        for c in 1..=self.k() {
            for _ in 0..self.get(c) {
                out.push(c);
            }
        }
        out
    }

    /// All lattice points `m` with `lo ≤ m ≤ hi`, in lexicographic order.
    pub fn box_points(lo: &Degree, hi: &Degree) -> Vec<Degree> {
        if !lo.le(hi) {
            return Vec::new();
        }
        let mut out = vec![lo.clone()];
        for c in 1..=lo.k() {
            let mut next = Vec::new();
            for p in &out {
                for v in lo.get(c)..=hi.get(c) {
                    let mut q = p.clone();
                    q.set(c, v);
                    next.push(q);
                }
            }
            out = next;
        }
        out
    }

    /// Parse "2,2" or "3".
    pub fn parse(text: &str) -> Option<Degree> {
        text.split(',')
            .map(|s| s.trim().parse::<u32>().ok())
            .collect::<Option<Vec<_>>>()
            .filter(|v| !v.is_empty())
            .map(Degree)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A sorted subset of `{1..k}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorSet(Vec<usize>);

impl ColorSet {
    pub fn empty() -> Self {
        ColorSet(Vec::new())
    }

    pub fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        ColorSet(members)
    }

    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        ColorSet(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// K_(i), 1-based.
    pub fn nth(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn contains(&self, c: usize) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn without(&self, c: usize) -> ColorSet {
        ColorSet(self.0.iter().copied().filter(|&x| x != c).collect())
    }

    pub fn with(&self, c: usize) -> ColorSet {
        let mut v = self.0.clone();
        v.push(c);
        ColorSet::new(v)
    }

    pub fn is_subset(&self, other: &ColorSet) -> bool {
        self.0.iter().all(|&c| other.contains(c))
    }

    /// All `n`-element subsets of `{1..k}` in lexicographic order.
    pub fn subsets(k: usize, n: usize) -> Vec<ColorSet> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(start: usize, k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<ColorSet>) {
            if cur.len() == n {
                out.push(ColorSet(cur.clone()));
                return;
            }
            for c in start..=k {
                if k - c + 1 < n - cur.len() {
                    break;
                }
                cur.push(c);
                rec(c + 1, k, n, cur, out);
                cur.pop();
            }
        }
        if n <= k {
            rec(1, k, n, &mut cur, &mut out);
        }
        out
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}
