//! Errors for diagram parsing, validation and editing.

use thiserror::Error;

/// Errors raised while building or editing a G-Kirby diagram.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    /// The source text does not follow the diagram grammar.
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        /// One-based line number.
        line: usize,
        /// One-based column number.
        column: usize,
        /// What went wrong.
        message: String,
    },
    /// The word is well formed but does not describe a valid diagram.
    #[error("invalid diagram: {0}")]
    Validation(#[from] ValidationError),
    /// An edit was requested at a position that does not exist.
    #[error("invalid site: {0}")]
    InvalidSite(String),
}

/// Structural problems found while validating a Morse word.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    /// A slice consumes a different number of strands than are open.
    #[error("slice {slice} expects {found} strands but {expected} are open")]
    WidthMismatch {
        /// Zero-based slice index.
        slice: usize,
        /// Number of open strands below the slice.
        expected: usize,
        /// Number of strands the slice consumes.
        found: usize,
    },
    /// The word ends with strands still open.
    #[error("{0} strands are left open at the top of the diagram")]
    OpenStrands(usize),
    /// Orientation markers on the extrema of one component disagree.
    #[error("inconsistent orientation at slice {slice}, strand {position}")]
    Orientation {
        /// Zero-based slice index.
        slice: usize,
        /// Zero-based strand position.
        position: usize,
    },
    /// A dotted disc violates the cocycle condition.
    #[error("cocycle condition fails at dotted disc D{disc}: signed label sum is {sum}")]
    Cocycle {
        /// One-based dotted disc number.
        disc: usize,
        /// The nonzero signed sum of pierced labels.
        sum: String,
    },
    /// A label names a component that does not exist.
    #[error("unknown component {0}")]
    UnknownComponent(String),
    /// A component received two labels.
    #[error("component {0} is labeled twice")]
    DuplicateLabel(String),
    /// A label vector has the wrong length or an element outside the group.
    #[error("bad labels: {0}")]
    BadLabels(String),
    /// Two diagrams over different groups were combined.
    #[error("group mismatch: {0} vs {1}")]
    GroupMismatch(String, String),
}
