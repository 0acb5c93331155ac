use std::io;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed text input, reported with its 1-based line number.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Arguments that violate an operation's preconditions.
    #[error("{0}")]
    InvalidInput(String),

    /// Instance too large for the requested exact algorithm.
    #[error("{0}")]
    SizeGuard(String),

    /// An internal consistency check failed; indicates a bug or a violated
    /// contract, not bad user input.
    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    /// Stable machine-readable tag for JSON error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::InvalidInput(_) => "invalid_input",
            Error::SizeGuard(_) => "size_guard",
            Error::Invariant(_) => "invariant",
            Error::Io(_) => "io",
        }
    }

    /// Process exit code: 2 for input problems, 3 for size guards, 4 for
    /// invariant violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::InvalidInput(_) | Error::Io(_) => 2,
            Error::SizeGuard(_) => 3,
            Error::Invariant(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
