//! Computation and verification of quantum invariants of 4-dimensional
//! 2-handlebodies from G-Kirby diagrams.
//!
//! The library behind the `invariants` binary: refined and unrefined
//! invariants, boundary invariants with spin structures or cohomology
//! classes, decomposition and rescaling checks, and a verification suite.
//!
//! ```
//! use bead_engine::Mode;
//! use invariants_cli::{corpus, Calculator, VariantChoice};
//!
//! let calc = Calculator::new(VariantChoice::Small, 2, Mode::GradedInU).unwrap();
//! assert!(calc.unrefined(&corpus::load("hopf")).unwrap().is_one());
//! ```

pub mod boundary;
pub mod calc;
pub mod corpus;
pub mod decompose;
pub mod error;
pub mod output;
pub mod report;
pub mod rescale;
pub mod verify;

pub use boundary::{boundary_invariant, BoundaryValue, StructureKind};
pub use calc::{parse_omega, Calculator, VariantChoice};
pub use decompose::{decomposition_check, general_decomposition, structure_decomposition};
pub use error::CliError;
pub use output::InvariantOutput;
pub use report::{Check, Report};
pub use rescale::{parse_scalar, rescale_check};
pub use verify::verify_suite;
