use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex id arithmetic overflow in product construction")]
    IdOverflow,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("layout does not match graph: {0}")]
    LayoutMismatch(String),

    #[error("invalid layout: {0}")]
    InvalidLayout(String),

    #[error("construction failed verification: {0}")]
    ConstructionFailed(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size cap exceeded: {0}")]
    CapExceeded(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
