//! Error type shared across the crate.

/// Crate-wide error enum. Variants map onto the CLI exit codes:
/// argument/size errors -> 2, numerical failures -> 3, I/O and parse -> 4.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("size mismatch: {0}")]
    Size(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("svd failed to converge after {iterations} iterations (residual {residual:e})")]
    SvdFailure { iterations: usize, residual: f64 },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code for the CLI front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Size(_) | Error::Argument(_) => 2,
            Error::Numerical(_) | Error::SvdFailure { .. } => 3,
            Error::Io(_) | Error::Parse(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
