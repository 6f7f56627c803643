//! Errors for bead decoration and evaluation.

use diagram::DiagramError;
use quantum_sl2::QuantumError;
use thiserror::Error;

/// Errors raised while computing bead presentations and invariants.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BeadError {
    /// The diagram's label group is not supported by the chosen algebra.
    #[error("unsupported label group: {0}")]
    UnsupportedGroup(String),
    /// A collected bead has an odd power of `K̃`, so it does not lie in `U`.
    #[error("collected bead lies outside U: {0}")]
    BeadOutsideU(String),
    /// The label vector does not match the presentation.
    #[error("bad labels: {0}")]
    BadLabels(String),
    /// An error from the quantum group layer.
    #[error(transparent)]
    Quantum(#[from] QuantumError),
    /// An error from the diagram layer.
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
