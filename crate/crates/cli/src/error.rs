use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] fsind_core::Error),

    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("output: {0}")]
    Output(String),
}

impl CliError {
    /// 2 for anything the caller got wrong, 1 for computations that failed.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Core(fsind_core::Error::InvalidParams(_) | fsind_core::Error::CapExceeded { .. }) => 2,
            _ => 1,
        }
    }
}
