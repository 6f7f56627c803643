//! Errors for quantum group constructions.

use gcoalg_core::CoreError;
use thiserror::Error;

use crate::variant::Variant;

/// Errors raised by quantum group computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuantumError {
    /// Elements of different algebras were combined, or an operation is not
    /// defined for this algebra.
    #[error("variant mismatch: expected {expected}, found {found}")]
    VariantMismatch {
        /// The variant the operation needs.
        expected: String,
        /// The variant that was supplied.
        found: Variant,
    },
    /// A closed form exists only for even `p`.
    #[error("closed form requires even p, got p = {0}")]
    ParityUnsupported(u32),
    /// The element is not homogeneous for the requested grading.
    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),
    /// The parameter `p` is out of range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// An error from the structure-table layer.
    #[error(transparent)]
    Core(#[from] CoreError),
}
