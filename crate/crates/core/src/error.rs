use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: bad vertex, self-loop, invalid family parameter.
    #[error("input error: {0}")]
    Input(String),

    /// The graph is larger than the enumeration cap allows.
    #[error("enumeration cap exceeded: graph has {n} vertices, cap is {cap}")]
    Capacity { n: usize, cap: usize },

    /// An arithmetic precondition was violated (e.g. inconsistent multinomial header).
    #[error("domain error: {0}")]
    Domain(String),

    /// A text source (edge list, family string, data file) failed to parse.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
