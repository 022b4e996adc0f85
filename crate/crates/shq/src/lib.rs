//! Subpath convex hull queries on simple paths, with ray shooting among lines
//! and segments built on top of the same persistent hull machinery.
//!
//! All geometry is exact: integer inputs, i128 predicates with arbitrary
//! precision fallback, homogeneous rational constructions.

pub mod gen;
pub mod geom;
pub mod hulltree;
pub mod oracle;
pub mod spanpath;
pub mod subpath;

use std::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input violates a documented precondition (bounds, simplicity, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// An index or rank argument is out of range.
    #[error("out of range: {0}")]
    OutOfRange(String),
    /// Handles from incompatible structures were mixed.
    #[error("structure mismatch: {0}")]
    Mismatch(String),
    /// A text input failed to parse.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// The operation is not supported for this structure configuration.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl fmt::Display) -> Self {
        Error::InvalidInput(msg.to_string())
    }
    pub fn range(msg: impl fmt::Display) -> Self {
        Error::OutOfRange(msg.to_string())
    }
}
