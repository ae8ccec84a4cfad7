use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("duplicate square side [{0}, {1}]")]
    DuplicateSquareSide(String, String),
    #[error("no square for word [{0}, {1}]")]
    MissingSquare(String, String),
    #[error("not composable: {0}")]
    NotComposable(String),
    #[error("degree bounds violated: {0}")]
    Bounds(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("invalid graph morphism: {0}")]
    InvalidMorphism(String),
    #[error("category is infinite: {0}")]
    InfiniteCategory(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("composite boundary is nonzero at column {column}")]
    NonzeroComposite { column: usize },
    #[error("evaluator undefined: {0}")]
    Undefined(String),
    #[error("coefficient mismatch: {0}")]
    Coefficients(String),
    #[error("not a cocycle: {0}")]
    NotCocycle(String),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
