use thiserror::Error;

#[derive(Debug, Error)]
pub enum SimError {
    #[error(transparent)]
    Core(#[from] palmgrove_core::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),
    #[error("worker pool error: {0}")]
    Pool(String),
}

pub type Result<T> = std::result::Result<T, SimError>;
