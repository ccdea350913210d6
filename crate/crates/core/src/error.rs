//! Error type shared by every module.

use thiserror::Error;

/// Failure modes of the algebra layer and the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// Two operands carry different truncation caps.
    #[error("truncation cap mismatch: {left} vs {right}")]
    CapMismatch { left: usize, right: usize },

    /// Two operands live over different groups, or dimensions disagree.
    #[error("structural mismatch: {0}")]
    Structural(String),

    /// An input lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The operation is not defined for this group or input family.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A consistency check that must hold failed; indicates a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    /// A textual input could not be decoded.
    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
