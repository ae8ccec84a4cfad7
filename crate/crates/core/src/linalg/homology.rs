use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::group::AbelianGroup;
use super::matrix::{DenseMatrix, SparseIntMatrix};
use super::snf::{invariant_factors, snf_dense};
use crate::error::{Error, Result};

/// Constant coefficients ℤ or ℤ/m.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Coefficients {
    Z,
    Zmod { modulus: u64 },
}

impl Coefficients {
    pub fn zmod(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::Coefficients(format!("modulus {m} must be at least 2")));
        }
        Ok(Coefficients::Zmod { modulus: m })
    }

    /// Parse `Z` or `Z/m`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "Z" {
            return Ok(Coefficients::Z);
        }
        t.strip_prefix("Z/")
            .and_then(|m| m.parse::<u64>().ok())
            .ok_or_else(|| Error::Coefficients(format!("cannot parse `{t}`")))
            .and_then(Self::zmod)
    }

    /// Canonical representative of `x` in the coefficient ring.
    pub fn reduce(&self, x: i64) -> i64 {
        match *self {
            Coefficients::Z => x,
            Coefficients::Zmod { modulus } => x.rem_euclid(modulus as i64),
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match *self {
            Coefficients::Z => None,
            Coefficients::Zmod { modulus } => Some(modulus),
        }
    }
}

fn check_shapes(a: &SparseIntMatrix, b: &SparseIntMatrix) -> Result<()> {
    if a.cols() != b.rows() {
        return Err(Error::Bounds(format!(
            "incompatible shapes {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(())
}

fn composite_witness(a: &SparseIntMatrix, b: &SparseIntMatrix, m: Option<u64>) -> Option<usize> {
    let ab = a.mul(b);
    let modulus = m.map(BigInt::from);
    ab.entries()
        .filter(|(_, v)| match &modulus {
            Some(m) => !v.mod_floor(m).is_zero(),
            None => true,
        })
        .map(|(&(_, c), _)| c)
        .min()
}

/// ker A / im B over ℤ, where A represents ∂_n and B represents ∂_{n+1}.
pub fn homology_of_pair(a: &SparseIntMatrix, b: &SparseIntMatrix) -> Result<AbelianGroup> {
    check_shapes(a, b)?;
    if let Some(column) = composite_witness(a, b, None) {
        return Err(Error::NonzeroComposite { column });
    }
    let n = a.cols();
    let rank_a = invariant_factors(&a.to_dense()).len();
    let fb = invariant_factors(&b.to_dense());
    AbelianGroup::from_factors(n - rank_a - fb.len(), &fb)
}

/// ker A / im B after reduction mod m, using only integer Smith forms.
pub fn homology_of_pair_mod(a: &SparseIntMatrix, b: &SparseIntMatrix, m: u64) -> Result<AbelianGroup> {
    check_shapes(a, b)?;
    if m < 2 {
        return Err(Error::Coefficients(format!("modulus {m} must be at least 2")));
    }
    if let Some(column) = composite_witness(a, b, Some(m)) {
        return Err(Error::NonzeroComposite { column });
    }
    let n = a.cols();
    if n == 0 {
        return Ok(AbelianGroup::trivial());
    }
    let mb = BigInt::from(m);
    // lattice L = {x : Ax ≡ 0 mod m} as the projection of ker [A | mI]
    let stacked = a.to_dense().hcat(&DenseMatrix::scaled_identity(a.rows(), &mb));
    let s = snf_dense(&stacked);
    let r = s.rank();
    let kernel_cols: Vec<usize> = (r..stacked.cols).collect();
    debug_assert_eq!(kernel_cols.len(), n);
    let mut z = DenseMatrix::zeros(n, kernel_cols.len());
    for (jj, &j) in kernel_cols.iter().enumerate() {
        for i in 0..n {
            z.data[i][jj] = s.v.data[i][j].clone();
        }
    }
    // coordinates of the columns of [B | mI] in the basis z
    let w = b.to_dense().hcat(&DenseMatrix::scaled_identity(n, &mb));
    let sz = snf_dense(&z);
    let mut y = sz.u.mul(&w);
    for i in 0..n {
        let d = sz.d.data[i][i].clone();
        if d.is_zero() {
            return Err(Error::Bounds("kernel lattice is degenerate".into()));
        }
        for x in &mut y.data[i] {
            let (q, rem) = x.div_rem(&d);
            if !rem.is_zero() {
                return Err(Error::Bounds("image is not contained in the kernel lattice".into()));
            }
            *x = q;
        }
    }
    let x = sz.v.mul(&y);
    let f = invariant_factors(&x);
    AbelianGroup::from_factors(n - f.len(), &f)
}

/// Homology of the pair with the chosen constant coefficients.
pub fn homology_with(a: &SparseIntMatrix, b: &SparseIntMatrix, coeff: Coefficients) -> Result<AbelianGroup> {
    match coeff {
        Coefficients::Z => homology_of_pair(a, b),
        Coefficients::Zmod { modulus } => homology_of_pair_mod(a, b, modulus),
    }
}
