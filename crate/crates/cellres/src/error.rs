use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("exponent vectors have mismatched lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("complex failed validation:\n{}", .0.join("\n"))]
    InvalidComplex(Vec<String>),

    #[error("the hyperplane families do not induce a vertex-supported subdivision: {0}")]
    NotVertexSupported(String),

    #[error("invalid subdivision input: {0}")]
    BadArrangementSpec(String),

    #[error("too many generators ({got}); Taylor-complex operations are limited to {limit}")]
    TooManyGenerators { got: usize, limit: usize },

    #[error("empty generating set where a nonzero ideal is required")]
    EmptyGenerators,

    #[error("monomial is not contained in the ideal")]
    NotInIdeal,

    #[error("generator {0} is missing among the vertex labels of the complex")]
    MissingGeneratorLabel(String),

    #[error("no compatible chain map exists: {0}")]
    IncompatibleChainMap(String),

    #[error("morphisms cannot be composed: {0}")]
    ComposeMismatch(String),

    #[error("variable renaming is not an injection into the target variables")]
    BadRenaming,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid graph: {0}")]
    BadGraph(String),

    #[error("the generator order does not give linear quotients (fails at generator {0})")]
    NoLinearQuotients(usize),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
