//! Errors reported by the command-line tool.

use bead_engine::BeadError;
use cyclo_field::FieldError;
use diagram::DiagramError;
use quantum_sl2::QuantumError;
use thiserror::Error;

use crate::boundary::StructureKind;

/// Everything that makes a request unanswerable.
///
/// Verification failures are not errors; they are reported in a
/// [`Report`](crate::Report).
#[derive(Debug, Error)]
pub enum CliError {
    /// The diagram file could not be read.
    #[error("cannot read {path}: {message}")]
    Io {
        /// The path given on the command line.
        path: String,
        /// The underlying error.
        message: String,
    },
    /// The diagram is malformed.
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    /// The bead engine rejected the diagram.
    #[error(transparent)]
    Bead(#[from] BeadError),
    /// The quantum group cannot be built at this parameter.
    #[error(transparent)]
    Quantum(#[from] QuantumError),
    /// Field arithmetic failed.
    #[error(transparent)]
    Field(#[from] FieldError),
    /// A label vector could not be parsed or has the wrong length.
    #[error("bad label vector: {0}")]
    BadOmega(String),
    /// Boundary invariants need even `p`.
    #[error("boundary invariants need even p, got p = {0}")]
    OddP(u32),
    /// The requested kind of boundary structure does not match `p`.
    #[error("{requested} structures are not available at p = {p}; p = {p} gives {expected} structures")]
    StructureKindMismatch {
        /// The parameter.
        p: u32,
        /// The kind asked for.
        requested: StructureKind,
        /// The kind that `p` determines.
        expected: StructureKind,
    },
    /// The sublink does not describe a spin structure.
    #[error("{0:?} is not a characteristic sublink")]
    NotCharacteristic(Vec<u32>),
    /// The sublink does not describe a cohomology class.
    #[error("{0:?} is not an even sublink")]
    NotEven(Vec<u32>),
    /// A rescaling factor of zero.
    #[error("the rescaling factor must be nonzero")]
    ZeroScale,
    /// A scalar could not be parsed.
    #[error("cannot parse scalar `{0}`; use 1, -1, i, -i, i^k or z^k")]
    BadScalar(String),
    /// The request combines options that have no meaning together.
    #[error("unsupported request: {0}")]
    Unsupported(String),
}

impl CliError {
    /// Process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
