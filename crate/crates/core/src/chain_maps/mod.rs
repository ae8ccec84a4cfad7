//! Triangulation ∇ and cubulation □ between the cubical and categorical resolutions.

mod maps;
mod perm;
mod verify;

pub use maps::*;
pub use perm::Permutation;
pub use verify::*;
