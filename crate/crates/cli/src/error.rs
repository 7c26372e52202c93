use thiserror::Error;

use symplane::error::ErrorClass;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DEGENERATE: i32 = 2;
pub const EXIT_SINGULAR: i32 = 3;
/// A verification run found residuals above tolerance.
pub const EXIT_CHECK_FAILED: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] symplane::Error),
    #[error("check failed: {0}")]
    Check(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(e) => match e.class() {
                ErrorClass::Usage => EXIT_USAGE,
                ErrorClass::Degenerate => EXIT_DEGENERATE,
                ErrorClass::Singular => EXIT_SINGULAR,
            },
            CliError::Check(_) => EXIT_CHECK_FAILED,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => EXIT_IO,
        }
    }
}
