mod group;
mod homology;
mod matrix;
mod snf;

pub use group::AbelianGroup;
pub use homology::{homology_of_pair, homology_of_pair_mod, homology_with, Coefficients};
pub use matrix::{DenseMatrix, SparseIntMatrix};
pub use snf::{invariant_factors, snf, snf_dense, SnfResult};
