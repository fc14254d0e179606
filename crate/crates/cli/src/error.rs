use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("domain error: {0}")]
    Domain(#[from] qbern::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for usage problems, 3 for domain errors. I/O failures share the
    /// usage code since they come from bad paths.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
