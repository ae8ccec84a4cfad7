use std::collections::{HashMap, VecDeque};

use super::degree::{ColorSet, Degree};
use super::graph::{EdgeId, KGraph, VertexId};
use crate::error::{Error, Result};

/// A morphism in normal form: colors nondecreasing along the word.
/// The range vertex anchors identities.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Morphism {
    range: VertexId,
    word: Vec<EdgeId>,
    source: VertexId,
    degree: Degree,
}

impl Morphism {
    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn word(&self) -> &[EdgeId] {
        &self.word
    }

    pub fn degree(&self) -> &Degree {
        &self.degree
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn color_type(&self) -> ColorSet {
        self.degree.color_type()
    }

    /// True when the degree is a 0/1 vector.
    pub fn is_cube(&self) -> bool {
        self.degree.coords().iter().all(|&x| x <= 1)
    }
}

impl KGraph {
    pub fn identity(&self, v: VertexId) -> Morphism {
        Morphism { range: v, word: Vec::new(), source: v, degree: Degree::zero(self.k()) }
    }

    pub fn edge_morphism(&self, e: EdgeId) -> Morphism {
        let edge = self.edge(e);
        Morphism {
            range: edge.range,
            word: vec![e],
            source: edge.source,
            degree: Degree::unit(self.k(), edge.color),
        }
    }

    /// Normalize an arbitrary composable nonempty word.
    pub fn morphism_from_word(&self, word: &[EdgeId]) -> Result<Morphism> {
        if word.is_empty() {
            return Err(Error::NotComposable("empty word has no anchor".into()));
        }
        if !self.word_is_composable(word) {
            return Err(Error::NotComposable(format!("word {:?}", self.word_names(word))));
        }
        let mut target: Vec<usize> = word.iter().map(|&e| self.color(e)).collect();
        target.sort_unstable();
        let w = self.reorder(word, &target)?;
        Ok(self.wrap(w))
    }

    fn wrap(&self, word: Vec<EdgeId>) -> Morphism {
        let range = self.edge(word[0]).range;
        let source = self.edge(*word.last().expect("nonempty")).source;
        let degree = self.word_degree(&word);
        Morphism { range, word, source, degree }
    }

    /// Rearrange a composable word, by adjacent square swaps, into the
    /// factorization whose colors follow `target` (a permutation of the
    /// word's color multiset). Same-colored edges keep their relative order.
    pub fn reorder(&self, word: &[EdgeId], target: &[usize]) -> Result<Vec<EdgeId>> {
        let n = word.len();
        debug_assert_eq!(n, target.len());
        let mut slots: HashMap<usize, VecDeque<usize>> = HashMap::new();
        for (p, &c) in target.iter().enumerate() {
            slots.entry(c).or_default().push_back(p);
        }
        let mut keys = Vec::with_capacity(n);
        for &e in word {
            let p = slots
                .get_mut(&self.color(e))
                .and_then(|q| q.pop_front())
                .ok_or_else(|| Error::Bounds("target color sequence does not match word".into()))?;
            keys.push(p);
        }
        let mut w = word.to_vec();
        for pass in 0..n {
            let mut changed = false;
            for j in 0..n.saturating_sub(1 + pass) {
                if keys[j] > keys[j + 1] {
                    let (x, y) = self.swap_pair(w[j], w[j + 1])?;
                    w[j] = x;
                    w[j + 1] = y;
                    keys.swap(j, j + 1);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Ok(w)
    }

    /// The factorization of `m` as a word with the given color sequence.
    pub fn realize(&self, m: &Morphism, colors: &[usize]) -> Result<Vec<EdgeId>> {
        self.reorder(&m.word, colors)
    }

    pub fn compose(&self, a: &Morphism, b: &Morphism) -> Result<Morphism> {
        if a.source != b.range {
            return Err(Error::NotComposable(format!(
                "source {} of left factor differs from range {} of right factor",
                self.vertex_name(a.source),
                self.vertex_name(b.range)
            )));
        }
        if a.is_identity() {
            return Ok(b.clone());
        }
        if b.is_identity() {
            return Ok(a.clone());
        }
        let mut word = a.word.clone();
        word.extend_from_slice(&b.word);
        let mut target: Vec<usize> = word.iter().map(|&e| self.color(e)).collect();
        target.sort_unstable();
        Ok(self.wrap(self.reorder(&word, &target)?))
    }

    /// Compose a nonempty sequence of composable morphisms.
    pub fn compose_all(&self, parts: &[Morphism]) -> Result<Morphism> {
        let mut acc = parts
            .first()
            .ok_or_else(|| Error::NotComposable("empty product".into()))?
            .clone();
        for p in &parts[1..] {
            acc = self.compose(&acc, p)?;
        }
        Ok(acc)
    }

    /// λ(lo, hi).
    pub fn segment(&self, m: &Morphism, lo: &Degree, hi: &Degree) -> Result<Morphism> {
        let d = &m.degree;
        if !(lo.le(hi) && hi.le(d)) {
            return Err(Error::Bounds(format!("need {} ≤ {} ≤ {}", lo, hi, d)));
        }
        let mid = hi.checked_sub(lo).expect("checked above");
        let tail = d.checked_sub(hi).expect("checked above");
        let mut target = lo.ascending_colors();
        let start = target.len();
        target.extend(mid.ascending_colors());
        let end = target.len();
        target.extend(tail.ascending_colors());
        let w = self.reorder(&m.word, &target)?;
        if start == end {
            let v = if start == 0 { m.range } else { self.edge(w[start - 1]).source };
            return Ok(self.identity(v));
        }
        Ok(self.wrap(w[start..end].to_vec()))
    }

    /// Morphisms of degree `n`, in lexicographic word order.
    pub fn enumerate_morphisms(&self, n: &Degree) -> Vec<Morphism> {
        if n.is_zero() {
            return self.vertices().map(|v| self.identity(v)).collect();
        }
        self.words_with_colors(None, &n.ascending_colors())
            .into_iter()
            .map(|w| self.wrap(w))
            .collect()
    }

    /// Morphisms of degree `n` with range `v`.
    pub fn morphisms_from(&self, v: VertexId, n: &Degree) -> Vec<Morphism> {
        if n.is_zero() {
            return vec![self.identity(v)];
        }
        self.words_with_colors(Some(v), &n.ascending_colors())
            .into_iter()
            .map(|w| self.wrap(w))
            .collect()
    }

    /// Every morphism with degree ≤ `bound`, grouped by degree in lexicographic order.
    pub fn morphisms_up_to(&self, bound: &Degree) -> Vec<Morphism> {
        Degree::box_points(&Degree::zero(self.k()), bound)
            .iter()
            .flat_map(|n| self.enumerate_morphisms(n))
            .collect()
    }

    /// Number of composable words of degree `n` whose colors appear in the
    /// block order given by `order` (a permutation of `1..=k`).
    pub fn count_with_order(&self, n: &Degree, order: &[usize]) -> usize {
        let mut colors = Vec::new();
        for &c in order {
            for _ in 0..n.get(c) {
                colors.push(c);
            }
        }
        if colors.is_empty() {
            return self.num_vertices();
        }
        self.words_with_colors(None, &colors).len()
    }

    /// Q_n: cubes sorted by color set, then word, then anchor.
    pub fn enumerate_cubes(&self, n: i64) -> Vec<Morphism> {
        if n < 0 || n as usize > self.k() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for set in ColorSet::subsets(self.k(), n as usize) {
            let mut ms = self.enumerate_morphisms(&Degree::of_set(self.k(), &set));
            ms.sort_by(|a, b| (&a.word, a.range).cmp(&(&b.word, b.range)));
            out.extend(ms);
        }
        out
    }

    /// Human-readable name: the vertex for identities, else edge ids joined.
    pub fn describe(&self, m: &Morphism) -> String {
        if m.is_identity() {
            self.vertex_name(m.range).to_string()
        } else {
            format!("[{}]", self.word_names(&m.word).join(","))
        }
    }

    /// (F^0, S, F^1, R) for the color `c` peeled off at full multiplicity.
    pub fn color_faces(&self, m: &Morphism, c: usize) -> Result<[Morphism; 4]> {
        let d = m.degree.clone();
        let mut peel = Degree::zero(self.k());
        peel.set(c, d.get(c));
        let cut = d.checked_sub(&peel).expect("peel ≤ d");
        let zero = Degree::zero(self.k());
        Ok([
            self.segment(m, &zero, &cut)?,
            self.segment(m, &cut, &d)?,
            self.segment(m, &peel, &d)?,
            self.segment(m, &zero, &peel)?,
        ])
    }

    /// Cube faces F^l_j (1 ≤ j ≤ n).
    pub fn face(&self, cube: &Morphism, j: usize, l: u8) -> Result<Morphism> {
        let [f0, _, f1, _] = self.cube_faces(cube, j)?;
        Ok(if l == 0 { f0 } else { f1 })
    }

    /// (F^0_j, S_j, F^1_j, R_j) of a cube.
    pub fn cube_faces(&self, cube: &Morphism, j: usize) -> Result<[Morphism; 4]> {
        let ct = cube.color_type();
        if !cube.is_cube() {
            return Err(Error::Bounds(format!("{} is not a cube", self.describe(cube))));
        }
        if j == 0 || j > ct.len() {
            return Err(Error::Index(format!("face index {} for a {}-cube", j, ct.len())));
        }
        self.color_faces(cube, ct.nth(j))
    }
}
