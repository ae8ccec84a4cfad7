use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::chain::{Chain, Tailed};
use crate::error::{Error, Result};
use crate::kgraph::{KGraph, Morphism};
use crate::linalg::{homology_with, AbelianGroup, Coefficients, SparseIntMatrix};

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Q_0, …, Q_k with stable positions.
#[derive(Clone, Debug)]
pub struct CubicalBasis {
    per_degree: Vec<Vec<Morphism>>,
    index: Vec<HashMap<Morphism, usize>>,
}

impl CubicalBasis {
    pub fn new(g: &KGraph) -> Self {
        let per_degree: Vec<Vec<Morphism>> = (0..=g.k() as i64).map(|n| g.enumerate_cubes(n)).collect();
        let index = per_degree
            .iter()
            .map(|cubes| cubes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect())
            .collect();
        CubicalBasis { per_degree, index }
    }

    pub fn cubes(&self, n: i64) -> &[Morphism] {
        if n < 0 || n as usize >= self.per_degree.len() {
            return &[];
        }
        &self.per_degree[n as usize]
    }

    pub fn position(&self, n: i64, cube: &Morphism) -> Option<usize> {
        if n < 0 || n as usize >= self.index.len() {
            return None;
        }
        self.index[n as usize].get(cube).copied()
    }

    /// Rank of the n-th chain group, counting the augmentation slot when `reduced`.
    pub fn dim(&self, n: i64, reduced: bool) -> usize {
        if n == -1 && reduced {
            1
        } else {
            self.cubes(n).len()
        }
    }
}

/// ∂ of a plain cube: Σ_j Σ_l (−1)^{j+l} F^l_j.
pub fn cube_boundary(g: &KGraph, cube: &Morphism) -> Result<Chain<Morphism>> {
    let n = cube.color_type().len();
    let mut out = Chain::zero();
    for j in 1..=n {
        let [f0, _, f1, _] = g.cube_faces(cube, j)?;
        out.add_term(f0, sign(j));
        out.add_term(f1, -sign(j));
    }
    Ok(out)
}

/// ∂(η, μ) = Σ_j (−1)^j [(F^0_j η, S_j η · μ) − (F^1_j η, μ)]; zero in degree 0.
pub fn boundary_with_tail(g: &KGraph, t: &Tailed) -> Result<Chain<Tailed>> {
    if !t.head.is_cube() {
        return Err(Error::Bounds(format!("{} has a non-cube head", t.describe(g))));
    }
    let n = t.head.color_type().len();
    let mut out = Chain::zero();
    for j in 1..=n {
        let [f0, s, f1, _] = g.cube_faces(&t.head, j)?;
        let front_tail = g.compose(&s, &t.tail)?;
        out.add_term(Tailed { head: f0, tail: front_tail }, sign(j));
        out.add_term(Tailed { head: f1, tail: t.tail.clone() }, -sign(j));
    }
    Ok(out)
}

/// Augmentation: every degree-0 generator maps to 1.
pub fn tailed_augmentation(chain: &Chain<Tailed>) -> i64 {
    chain.iter().filter(|(t, _)| t.head.is_identity()).map(|(_, c)| c).sum()
}

/// Matrix of ∂_n : ℤQ_n → ℤQ_{n−1}; the reduced variant adds the augmentation in degree 0.
pub fn boundary_matrix(g: &KGraph, basis: &CubicalBasis, n: i64, reduced: bool) -> Result<SparseIntMatrix> {
    let rows = basis.dim(n - 1, reduced);
    let cols = basis.dim(n, reduced);
    let mut m = SparseIntMatrix::new(rows, cols);
    if n == 0 && reduced {
        for c in 0..cols {
            m.set(0, c, BigInt::from(1));
        }
        return Ok(m);
    }
    if n <= 0 {
        return Ok(m);
    }
    for (c, cube) in basis.cubes(n).iter().enumerate() {
        for (face, coeff) in cube_boundary(g, cube)?.iter() {
            let r = basis
                .position(n - 1, face)
                .ok_or_else(|| Error::Bounds(format!("face {} not in basis", g.describe(face))))?;
            m.add_to(r, c, coeff);
        }
    }
    Ok(m)
}

pub fn cubical_homology(g: &KGraph, n: i64, coeff: Coefficients, reduced: bool) -> Result<AbelianGroup> {
    let basis = CubicalBasis::new(g);
    cubical_homology_in(g, &basis, n, coeff, reduced)
}

pub fn cubical_homology_in(
    g: &KGraph,
    basis: &CubicalBasis,
    n: i64,
    coeff: Coefficients,
    reduced: bool,
) -> Result<AbelianGroup> {
    let a = boundary_matrix(g, basis, n, reduced)?;
    let b = boundary_matrix(g, basis, n + 1, reduced)?;
    homology_with(&a, &b, coeff)
}

/// H^n with constant coefficients: δ_n is the transpose of ∂_{n+1}.
pub fn cubical_cohomology(g: &KGraph, n: i64, coeff: Coefficients) -> Result<AbelianGroup> {
    let basis = CubicalBasis::new(g);
    cubical_cohomology_in(g, &basis, n, coeff)
}

pub fn cubical_cohomology_in(g: &KGraph, basis: &CubicalBasis, n: i64, coeff: Coefficients) -> Result<AbelianGroup> {
    let delta_n = boundary_matrix(g, basis, n + 1, false)?.transpose();
    let delta_prev = boundary_matrix(g, basis, n, false)?.transpose();
    homology_with(&delta_n, &delta_prev, coeff)
}

/// A total assignment of values to Q_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainTable {
    pub degree: usize,
    pub coeff: Coefficients,
    pub values: BTreeMap<Morphism, i64>,
}

/// How a cube is written in table files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CubeRef {
    Vertex { vertex: String },
    Edges(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainEntry {
    pub cube: CubeRef,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainTableDoc {
    pub degree: usize,
    pub coeff: Coefficients,
    pub values: Vec<CochainEntry>,
}

impl CochainTable {
    /// Tabulate `f` on Q_n, reducing values into the coefficient ring.
    pub fn tabulate(g: &KGraph, degree: usize, coeff: Coefficients, mut f: impl FnMut(&Morphism) -> i64) -> Self {
        let values = g
            .enumerate_cubes(degree as i64)
            .into_iter()
            .map(|c| {
                let v = coeff.reduce(f(&c));
                (c, v)
            })
            .collect();
        CochainTable { degree, coeff, values }
    }

    pub fn zero(g: &KGraph, degree: usize, coeff: Coefficients) -> Self {
        Self::tabulate(g, degree, coeff, |_| 0)
    }

    pub fn get(&self, cube: &Morphism) -> Result<i64> {
        self.values
            .get(cube)
            .copied()
            .ok_or_else(|| Error::Undefined("cube outside the table".into()))
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(|&v| v == 0)
    }

    pub fn cube_ref(g: &KGraph, cube: &Morphism) -> CubeRef {
        if cube.is_identity() {
            CubeRef::Vertex { vertex: g.vertex_name(cube.range()).to_string() }
        } else {
            CubeRef::Edges(g.word_names(cube.word()))
        }
    }

    pub fn to_doc(&self, g: &KGraph) -> CochainTableDoc {
        let values = g
            .enumerate_cubes(self.degree as i64)
            .into_iter()
            .filter_map(|c| self.values.get(&c).map(|&v| CochainEntry { cube: Self::cube_ref(g, &c), value: v }))
            .collect();
        CochainTableDoc { degree: self.degree, coeff: self.coeff, values }
    }

    pub fn from_doc(g: &KGraph, doc: &CochainTableDoc) -> Result<Self> {
        if let Coefficients::Zmod { modulus } = doc.coeff {
            Coefficients::zmod(modulus)?;
        }
        let mut values = BTreeMap::new();
        for entry in &doc.values {
            let cube = match &entry.cube {
                CubeRef::Vertex { vertex } => g.identity(g.vertex_id(vertex)?),
                CubeRef::Edges(ids) => {
                    let word = ids.iter().map(|e| g.edge_id(e)).collect::<Result<Vec<_>>>()?;
                    g.morphism_from_word(&word)?
                }
            };
            if !cube.is_cube() || cube.degree().total() as usize != doc.degree {
                return Err(Error::Schema(format!("{} is not a {}-cube", g.describe(&cube), doc.degree)));
            }
            if values.insert(cube.clone(), doc.coeff.reduce(entry.value)).is_some() {
                return Err(Error::Schema(format!("cube {} listed twice", g.describe(&cube))));
            }
        }
        let expected = g.enumerate_cubes(doc.degree as i64);
        if let Some(missing) = expected.iter().find(|c| !values.contains_key(*c)) {
            return Err(Error::Schema(format!("table is not total: {} missing", g.describe(missing))));
        }
        Ok(CochainTable { degree: doc.degree, coeff: doc.coeff, values })
    }

    pub fn from_json(g: &KGraph, text: &str) -> Result<Self> {
        let doc: CochainTableDoc = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        Self::from_doc(g, &doc)
    }
}

/// δf(λ) = Σ_i (−1)^i (f(F^0_i λ) − f(F^1_i λ)).
pub fn coboundary(g: &KGraph, f: &CochainTable) -> Result<CochainTable> {
    let mut values = BTreeMap::new();
    for cube in g.enumerate_cubes(f.degree as i64 + 1) {
        let mut acc = 0i64;
        for (face, c) in cube_boundary(g, &cube)?.iter() {
            acc += c * f.get(face)?;
        }
        values.insert(cube, f.coeff.reduce(acc));
    }
    Ok(CochainTable { degree: f.degree + 1, coeff: f.coeff, values })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct UctReport {
    pub n: i64,
    pub m: u64,
    pub cohomology: AbelianGroup,
    pub hom: AbelianGroup,
    pub ext: AbelianGroup,
    pub pass: bool,
}

/// Compare H^n(ℤ/m) with Hom(H_n, ℤ/m) ⊕ Ext(H_{n−1}, ℤ/m).
pub fn uct_check(g: &KGraph, n: i64, m: u64) -> Result<UctReport> {
    let basis = CubicalBasis::new(g);
    let coeff = Coefficients::zmod(m)?;
    let cohomology = cubical_cohomology_in(g, &basis, n, coeff)?;
    let h_n = cubical_homology_in(g, &basis, n, Coefficients::Z, false)?;
    let h_prev = cubical_homology_in(g, &basis, n - 1, Coefficients::Z, false)?;
    let hom = h_n.hom_to_zmod(m);
    let ext = h_prev.ext_zmod(m);
    let pass = cohomology == hom.direct_sum(&ext);
    Ok(UctReport { n, m, cohomology, hom, ext, pass })
}
