//! Bead presentations of G-Kirby diagrams and the refined invariant
//! `J(W, ω) = Π_i λ_{α_i}(x_i g_{α_i}⁻¹)`.
//!
//! A diagram is decorated with beads: R-matrix legs at crossings, powers of
//! the pivotal element at right-oriented extrema and iterated coproducts of
//! the cointegral at dotted discs. Beads on strands running downward are
//! transformed by the antipode. The beads of each component are then
//! multiplied into one element and the trace `x ↦ λ(x g⁻¹ 1_α)` is applied.
//!
//! ```
//! use bead_engine::{evaluate_diagram, BeadEngine, Mode};
//! use diagram::parse;
//! use quantum_sl2::Variant;
//!
//! let engine = BeadEngine::new(Variant::Small, 2).unwrap();
//! let dotted = parse("dot(0)").unwrap();
//! assert!(evaluate_diagram(&engine, &dotted, Mode::GradedInU).unwrap().is_zero());
//! ```

mod collect;
mod decorate;
mod engine;
mod error;
mod presentation;

pub use collect::{collect, collect_naive};
pub use decorate::{decorate, decorate_with, BeadConventions, BeadFactor, DecoratedDiagram, DiscLegs, ProductOrder, RLeg, Reversal, Slot};
pub use engine::{BeadEngine, Mode};
pub use error::BeadError;
pub use presentation::{evaluate, BeadPresentation};

use cyclo_field::CycScalar;
use diagram::GKirbyDiagram;

/// Decorates, collects and evaluates a diagram with its own labels.
pub fn evaluate_diagram(engine: &BeadEngine, d: &GKirbyDiagram, mode: Mode) -> Result<CycScalar, BeadError> {
    let dd = decorate(engine, d)?;
    evaluate(engine, &collect(engine, &dd), mode)
}

/// The bead presentation of a diagram.
pub fn presentation(engine: &BeadEngine, d: &GKirbyDiagram) -> Result<BeadPresentation, BeadError> {
    Ok(collect(engine, &decorate(engine, d)?))
}
