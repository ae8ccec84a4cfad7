use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::DenseMatrix;
use super::snf::invariant_factors;
use crate::error::{Error, Result};

/// ℤ^rank ⊕ ℤ/t_1 ⊕ … with t_1 | t_2 | … and every t_i > 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    #[serde(rename = "rank")]
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    /// Canonical form of ℤ^rank ⊕ ⊕ ℤ/c for an arbitrary list of orders
    /// (orders 0 count as free summands, 1 is dropped).
    pub fn from_cyclic(rank: usize, orders: &[u64]) -> Self {
        let mut extra_free = 0;
        let mut rest = Vec::new();
        for &c in orders {
            match c {
                0 => extra_free += 1,
                1 => {}
                _ => rest.push(c),
            }
        }
        let mut d = DenseMatrix::zeros(rest.len(), rest.len());
        for (i, &c) in rest.iter().enumerate() {
            d.data[i][i] = BigInt::from(c);
        }
        let torsion = invariant_factors(&d)
            .into_iter()
            .filter(|x| !x.is_one())
            .map(|x| x.to_u64().expect("product of u64 orders fits after normalization"))
            .collect();
        AbelianGroup { free_rank: rank + extra_free, torsion }
    }

    pub(crate) fn from_factors(rank: usize, factors: &[BigInt]) -> Result<Self> {
        let torsion = factors
            .iter()
            .filter(|x| !x.is_one() && !x.is_zero())
            .map(|x| x.to_u64().ok_or_else(|| Error::Overflow(format!("invariant factor {x}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(AbelianGroup { free_rank: rank, torsion })
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut orders = self.torsion.clone();
        orders.extend(&other.torsion);
        AbelianGroup::from_cyclic(self.free_rank + other.free_rank, &orders)
    }

    /// Hom(G, ℤ/m).
    pub fn hom_to_zmod(&self, m: u64) -> AbelianGroup {
        let mut orders = vec![m; self.free_rank];
        orders.extend(self.torsion.iter().map(|&t| t.gcd(&m)));
        AbelianGroup::from_cyclic(0, &orders)
    }

    /// Ext(G, ℤ/m).
    pub fn ext_zmod(&self, m: u64) -> AbelianGroup {
        let orders: Vec<u64> = self.torsion.iter().map(|&t| t.gcd(&m)).collect();
        AbelianGroup::from_cyclic(0, &orders)
    }

    /// G ⊗ ℤ/m.
    pub fn tensor_zmod(&self, m: u64) -> AbelianGroup {
        self.hom_to_zmod(m)
    }

    /// Tor(G, ℤ/m).
    pub fn tor_zmod(&self, m: u64) -> AbelianGroup {
        self.ext_zmod(m)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}
