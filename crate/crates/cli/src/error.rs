use std::fmt;

/// Command outcomes map to process exit codes: input and schema problems
/// exit 2, a breached simulation failure threshold exits 3, anything
/// unexpected exits 4.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Simulation(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Simulation(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Simulation(msg) | CliError::Internal(msg) => {
                f.write_str(msg)
            }
        }
    }
}

impl std::error::Error for CliError {}

impl From<palmgrove_core::Error> for CliError {
    fn from(e: palmgrove_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<palmgrove_sim::SimError> for CliError {
    fn from(e: palmgrove_sim::SimError) -> Self {
        match e {
            palmgrove_sim::SimError::Core(inner) => CliError::Input(inner.to_string()),
            palmgrove_sim::SimError::InvalidConfig(msg) => CliError::Input(msg),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("model document parse error: {e}"))
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// I/O failure while reading something the user supplied.
pub fn input_io(path: &std::path::Path, e: std::io::Error) -> CliError {
    CliError::Input(format!("cannot read {}: {e}", path.display()))
}

/// I/O failure while writing our own output.
pub fn output_io(path: &std::path::Path, e: std::io::Error) -> CliError {
    CliError::Internal(format!("cannot write {}: {e}", path.display()))
}
