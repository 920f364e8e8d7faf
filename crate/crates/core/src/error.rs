use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by parsing, generation and the solvers.
///
/// The variants map onto the exit codes of the command-line tool:
/// `Parse` and `InvalidParameter` are validation failures, `Precondition`
/// means an operation was called on an instance it does not accept, and
/// `Internal` signals a broken invariant inside a solver.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
