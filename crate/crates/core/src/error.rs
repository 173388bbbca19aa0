use thiserror::Error;

/// Errors surfaced by lattice, polyhedral and series operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("gram matrix is degenerate")]
    DegenerateGram,
    #[error("lattice is not definite: {0}")]
    NotDefinite(String),
    #[error("cone is degenerate (contains a line)")]
    DegenerateCone,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("evaluation at a pole")]
    Pole,
    #[error("outside the convergence region: {0}")]
    Divergent(String),
    #[error("search bound exhausted: {0}")]
    BoundExhausted(String),
    #[error("json: {0}")]
    Json(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
