use std::collections::{BTreeSet, HashMap};

use super::degree::Degree;
use super::io::GraphDoc;
use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub color: usize,
    pub range: VertexId,
    pub source: VertexId,
}

/// A finite k-graph given by its colored skeleton and commuting squares.
///
/// Vertices are indexed in sorted name order and edges in sorted
/// `(color, id)` order, so index order doubles as the deterministic
/// tie-break everywhere.
#[derive(Clone, Debug)]
pub struct KGraph {
    k: usize,
    vertex_names: Vec<String>,
    vertex_index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    edge_index: HashMap<String, EdgeId>,
    squares: Vec<(EdgeId, EdgeId, EdgeId, EdgeId)>,
    swap: HashMap<(EdgeId, EdgeId), (EdgeId, EdgeId)>,
    by_range: Vec<Vec<Vec<EdgeId>>>,
    by_color: Vec<Vec<EdgeId>>,
    validated: bool,
}

impl KGraph {
    /// Build an unvalidated graph from a document.
    pub fn load(doc: &GraphDoc) -> Result<KGraph> {
        let k = doc.k;
        if k == 0 {
            return Err(Error::Schema("k must be at least 1".into()));
        }
        let mut names: Vec<String> = doc.vertices.clone();
        for v in &names {
            if v.is_empty() {
                return Err(Error::Schema("empty vertex id".into()));
            }
        }
        names.sort();
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateId(w[0].clone()));
            }
        }
        let vertex_index: HashMap<String, VertexId> =
            names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();

        let mut raw = doc.edges.clone();
        raw.sort_by(|a, b| (a.color, &a.id).cmp(&(b.color, &b.id)));
        let mut edges = Vec::with_capacity(raw.len());
        let mut edge_index = HashMap::new();
        for e in &raw {
            if e.id.is_empty() {
                return Err(Error::Schema("empty edge id".into()));
            }
            if e.color < 1 || e.color > k {
                return Err(Error::Schema(format!(
                    "edge `{}` has color {} outside 1..={}",
                    e.id, e.color, k
                )));
            }
            let range = *vertex_index
                .get(&e.range)
                .ok_or_else(|| Error::UnknownVertex(e.range.clone()))?;
            let source = *vertex_index
                .get(&e.source)
                .ok_or_else(|| Error::UnknownVertex(e.source.clone()))?;
            if edge_index.insert(e.id.clone(), edges.len()).is_some() {
                return Err(Error::DuplicateId(e.id.clone()));
            }
            edges.push(Edge { id: e.id.clone(), color: e.color, range, source });
        }

        let lookup = |id: &String| -> Result<EdgeId> {
            edge_index.get(id).copied().ok_or_else(|| Error::UnknownEdge(id.clone()))
        };
        let mut squares = Vec::with_capacity(doc.squares.len());
        let mut swap = HashMap::new();
        for sq in &doc.squares {
            let a = lookup(&sq.lhs[0])?;
            let b = lookup(&sq.lhs[1])?;
            let b2 = lookup(&sq.rhs[0])?;
            let a2 = lookup(&sq.rhs[1])?;
            for (side, img) in [((a, b), (b2, a2)), ((b2, a2), (a, b))] {
                if swap.insert(side, img).is_some() {
                    return Err(Error::DuplicateSquareSide(
                        edges[side.0].id.clone(),
                        edges[side.1].id.clone(),
                    ));
                }
            }
            squares.push((a, b, b2, a2));
        }

        let mut by_range = vec![vec![Vec::new(); k]; names.len()];
        let mut by_color = vec![Vec::new(); k];
        for (i, e) in edges.iter().enumerate() {
            by_range[e.range][e.color - 1].push(i);
            by_color[e.color - 1].push(i);
        }

        Ok(KGraph {
            k,
            vertex_names: names,
            vertex_index,
            edges,
            edge_index,
            squares,
            swap,
            by_range,
            by_color,
            validated: false,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_names.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v]
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId> {
        self.vertex_index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.into()))
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn edge_id(&self, name: &str) -> Result<EdgeId> {
        self.edge_index.get(name).copied().ok_or_else(|| Error::UnknownEdge(name.into()))
    }

    pub fn color(&self, e: EdgeId) -> usize {
        self.edges[e].color
    }

    pub fn squares(&self) -> &[(EdgeId, EdgeId, EdgeId, EdgeId)] {
        &self.squares
    }

    pub(crate) fn swap_table(&self) -> &HashMap<(EdgeId, EdgeId), (EdgeId, EdgeId)> {
        &self.swap
    }

    /// Edges with range `v` and the given color.
    pub fn edges_at(&self, v: VertexId, color: usize) -> &[EdgeId] {
        &self.by_range[v][color - 1]
    }

    pub fn edges_of_color(&self, color: usize) -> &[EdgeId] {
        &self.by_color[color - 1]
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub(crate) fn set_validated(&mut self, flag: bool) {
        self.validated = flag;
    }

    /// The square partner of the word `[x, y]`.
    pub fn swap_pair(&self, x: EdgeId, y: EdgeId) -> Result<(EdgeId, EdgeId)> {
        self.swap.get(&(x, y)).copied().ok_or_else(|| {
            Error::MissingSquare(self.edges[x].id.clone(), self.edges[y].id.clone())
        })
    }

    pub fn word_names(&self, word: &[EdgeId]) -> Vec<String> {
        word.iter().map(|&e| self.edges[e].id.clone()).collect()
    }

    pub fn word_degree(&self, word: &[EdgeId]) -> Degree {
        let mut d = Degree::zero(self.k);
        for &e in word {
            d.add_at(self.edges[e].color, 1);
        }
        d
    }

    pub fn word_is_composable(&self, word: &[EdgeId]) -> bool {
        word.windows(2).all(|w| self.edges[w[0]].source == self.edges[w[1]].range)
    }

    /// All composable words with the given color sequence, optionally
    /// pinned to a range vertex, in lexicographic edge order.
    pub fn words_with_colors(&self, range: Option<VertexId>, colors: &[usize]) -> Vec<Vec<EdgeId>> {
        let mut out = Vec::new();
        if colors.is_empty() {
            out.push(Vec::new());
            return out;
        }
        let mut cur = Vec::with_capacity(colors.len());
        let starts: Vec<EdgeId> = match range {
            Some(v) => self.edges_at(v, colors[0]).to_vec(),
            None => self.edges_of_color(colors[0]).to_vec(),
        };
        for e in starts {
            cur.push(e);
            self.extend_words(colors, &mut cur, &mut out);
            cur.pop();
        }
        out
    }

    fn extend_words(&self, colors: &[usize], cur: &mut Vec<EdgeId>, out: &mut Vec<Vec<EdgeId>>) {
        if cur.len() == colors.len() {
            out.push(cur.clone());
            return;
        }
        let last = *cur.last().expect("nonempty");
        let v = self.edges[last].source;
        for &e in &self.by_range[v][colors[cur.len()] - 1] {
            cur.push(e);
            self.extend_words(colors, cur, out);
            cur.pop();
        }
    }

    /// First composable word with the given color sequence, if any.
    pub fn find_word_with_colors(&self, colors: &[usize]) -> Option<Vec<EdgeId>> {
        fn rec(g: &KGraph, colors: &[usize], cur: &mut Vec<EdgeId>) -> bool {
            if cur.len() == colors.len() {
                return true;
            }
            let c = colors[cur.len()];
            let cands: &[EdgeId] = match cur.last() {
                Some(&l) => g.edges_at(g.edges[l].source, c),
                None => g.edges_of_color(c),
            };
            for &e in cands {
                cur.push(e);
                if rec(g, colors, cur) {
                    return true;
                }
                cur.pop();
            }
            false
        }
        let mut cur = Vec::new();
        if rec(self, colors, &mut cur) {
            Some(cur)
        } else {
            None
        }
    }

    /// All composable edge words of degree ≤ `bound` and length ≥ 1.
    pub fn words_up_to(&self, bound: &Degree) -> Vec<Vec<EdgeId>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut deg = Degree::zero(self.k);
        for e in 0..self.edges.len() {
            let c = self.edges[e].color;
            if bound.get(c) == 0 {
                continue;
            }
            cur.push(e);
            deg.add_at(c, 1);
            self.extend_bounded(bound, &mut cur, &mut deg, &mut out);
            deg.set(c, deg.get(c) - 1);
            cur.pop();
        }
        out
    }

    fn extend_bounded(
        &self,
        bound: &Degree,
        cur: &mut Vec<EdgeId>,
        deg: &mut Degree,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        out.push(cur.clone());
        let v = self.edges[*cur.last().expect("nonempty")].source;
        for c in 1..=self.k {
            if deg.get(c) >= bound.get(c) {
                continue;
            }
            for &e in &self.by_range[v][c - 1] {
                cur.push(e);
                deg.add_at(c, 1);
                self.extend_bounded(bound, cur, deg, out);
                deg.set(c, deg.get(c) - 1);
                cur.pop();
            }
        }
    }

    /// Length of the longest path in the color-`c` skeleton, or `None` if it has a cycle.
    pub fn longest_monochrome_path(&self, c: usize) -> Option<u32> {
        let n = self.num_vertices();
        // state: 0 unvisited, 1 on stack, 2 done
        let mut state = vec![0u8; n];
        let mut best = vec![0u32; n];
        fn visit(g: &KGraph, c: usize, v: usize, state: &mut [u8], best: &mut [u32]) -> bool {
            state[v] = 1;
            let mut b = 0;
            for &e in g.edges_at(v, c) {
                let w = g.edges[e].source;
                match state[w] {
                    1 => return false,
                    0 => {
                        if !visit(g, c, w, state, best) {
                            return false;
                        }
                    }
                    _ => {}
                }
                b = b.max(best[w] + 1);
            }
            best[v] = b;
            state[v] = 2;
            true
        }
        for v in 0..n {
            if state[v] == 0 && !visit(self, c, v, &mut state, &mut best) {
                return None;
            }
        }
        Some(best.iter().copied().max().unwrap_or(0))
    }

    /// Componentwise maximum degree of any morphism, or `None` if the category is infinite.
    pub fn max_degree(&self) -> Option<Degree> {
        let coords = (1..=self.k)
            .map(|c| self.longest_monochrome_path(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Degree::from_coords(coords))
    }

    pub(crate) fn distinct_color_pairs(&self) -> BTreeSet<(EdgeId, EdgeId)> {
        let mut out = BTreeSet::new();
        for (x, ex) in self.edges.iter().enumerate() {
            for c in 1..=self.k {
                if c == ex.color {
                    continue;
                }
                for &y in self.edges_at(ex.source, c) {
                    out.insert((x, y));
                }
            }
        }
        out
    }
}
