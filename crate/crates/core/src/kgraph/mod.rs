pub mod builders;
mod degree;
mod finite;
mod graph;
mod graph_morphism;
mod io;
mod morphism;
mod validate;

pub use degree::{ColorSet, Degree};
pub use finite::FinitenessReport;
pub use graph::{Edge, EdgeId, KGraph, VertexId};
pub use graph_morphism::{CodomainRef, GraphMorphismDoc, KGraphMorphism};
pub use io::{EdgeDoc, GraphDoc, MorphismLiteral, SquareDoc};
pub use morphism::Morphism;
pub use validate::{ValidationCheck, ValidationReport};
