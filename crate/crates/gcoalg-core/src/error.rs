//! Errors for structure-table construction and manipulation.

use thiserror::Error;

/// Errors raised by the Hopf G-coalgebra toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    /// Tables or tensors of incompatible sizes were combined.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A group description could not be understood.
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    /// The proposed idempotents violate one of the splitting equations.
    #[error("not a splitting system: {equation} fails ({detail})")]
    NotASplittingSystem {
        /// The violated equation.
        equation: String,
        /// A witness describing the failure.
        detail: String,
    },
    /// The idempotents do not act diagonally on the chosen basis.
    #[error("idempotents are not diagonal in the basis: {0}")]
    NotDiagonal(String),
    /// A structure map does not respect the grading.
    #[error("structure is not homogeneous: {0}")]
    Inhomogeneous(String),
    /// A structure-table document could not be read.
    #[error("malformed structure tables: {0}")]
    Format(String),
    /// A required piece of structure is absent.
    #[error("missing structure: {0}")]
    Missing(&'static str),
}
