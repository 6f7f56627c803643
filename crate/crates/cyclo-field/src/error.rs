//! Error type for field operations and scalar parsing.

use thiserror::Error;

/// Errors raised by cyclotomic-field operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FieldError {
    /// Inversion or division by the zero scalar.
    #[error("division by zero")]
    DivisionByZero,
    /// The requested floating-point precision exceeds the certified error bound.
    #[error("cannot certify {digits} digits (error bound {bound:e})")]
    PrecisionUnavailable {
        /// Requested number of decimal digits.
        digits: u32,
        /// Certified absolute error bound.
        bound: f64,
    },
    /// Malformed scalar text.
    #[error("parse error at byte {position}: {message}")]
    Parse {
        /// Byte offset of the problem.
        position: usize,
        /// Description of the problem.
        message: String,
    },
}
