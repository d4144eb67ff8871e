use alloc::string::String;

/// Failure to decode a graph from text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("graph6: invalid character {byte:#04x} at byte {offset}")]
    InvalidChar { offset: usize, byte: u8 },
    #[error("graph6: truncated input, expected {expected} bytes but found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6: trailing data at byte {offset}")]
    Trailing { offset: usize },
    #[error("graph6: vertex count {n} at byte {offset} is out of range")]
    SizeOutOfRange { offset: usize, n: u64 },
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

/// Errors raised by graph operations, constructions and searches.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
}

pub type Result<T> = core::result::Result<T, Error>;
