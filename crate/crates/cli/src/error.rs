use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("graph6 line {line}: {msg}")]
    Graph6 { line: usize, msg: String },
    #[error("{what} schema: {msg}")]
    Schema { what: &'static str, msg: String },
    #[error("unknown claim {id:?}; registered claims:\n{known}")]
    UnknownClaim { id: String, known: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] wiener_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;
