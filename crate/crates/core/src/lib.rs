//! Higher-rank graphs, their cubical and categorical (co)homology, and the
//! chain maps relating the two.

pub mod categorical;
pub mod chain;
pub mod chain_maps;
pub mod cocycle;
pub mod cubical;
pub mod error;
pub mod kgraph;
pub mod linalg;

pub use error::{Error, Result};
pub use kgraph::*;
pub use linalg::{AbelianGroup, Coefficients, SparseIntMatrix};
