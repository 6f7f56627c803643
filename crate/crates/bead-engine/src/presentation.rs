//! Bead presentations and their evaluation.

use std::fmt::Write as _;

use cyclo_field::CycScalar;
use gcoalg_core::Tensor;
use quantum_sl2::{QuantumError, Variant};

use crate::decorate::DecoratedDiagram;
use crate::engine::{BeadEngine, Mode};
use crate::error::BeadError;

/// A scalar times a sum of pure tensors `x₁ ⊗ … ⊗ x_k`, one leg per component.
#[derive(Debug, Clone, PartialEq)]
pub struct BeadPresentation {
    /// Scalar prefactor.
    pub factor: CycScalar,
    /// The collected beads, one leg per undotted component.
    pub tensor: Tensor,
    /// Degree `α_i ∈ {0, 1}` of each component.
    pub degrees: Vec<usize>,
    variant: Variant,
}

impl BeadPresentation {
    pub(crate) fn new(engine: &BeadEngine, dd: &DecoratedDiagram, tensor: Tensor) -> Self {
        let degrees = match engine.variant() {
            Variant::Small => vec![0; dd.bead_counts.len()],
            _ => dd.base.label_residues().into_iter().map(|x| x as usize).collect(),
        };
        BeadPresentation { factor: dd.prefactor.clone(), tensor, degrees, variant: engine.variant() }
    }

    /// The same beads with other component degrees.
    ///
    /// Decoration does not depend on labels, so one presentation serves every
    /// labeling of a diagram.
    pub fn with_degrees(&self, degrees: Vec<usize>) -> Result<Self, BeadError> {
        if degrees.len() != self.degrees.len() || degrees.iter().any(|&d| d > 1) {
            return Err(BeadError::BadLabels(format!("{degrees:?} for {} components", self.degrees.len())));
        }
        Ok(BeadPresentation { degrees, ..self.clone() })
    }

    /// Number of components.
    pub fn component_count(&self) -> usize {
        self.degrees.len()
    }

    /// Whether some bead has an odd power of `K̃`, that is lies outside `U`.
    ///
    /// Always `false` for `Ū`.
    pub fn has_odd_cartan_power(&self, engine: &BeadEngine) -> bool {
        if self.variant == Variant::Small {
            return false;
        }
        let pbw = engine.algebra().engine();
        self.tensor.iter().any(|(k, _)| k.iter().any(|&i| pbw.monomial(i).c % 2 == 1))
    }

    /// Text listing of the presentation in PBW form, sorted by basis index.
    pub fn dump(&self, engine: &BeadEngine) -> String {
        let pbw = engine.algebra().engine();
        let mut out = String::new();
        let degrees: Vec<String> = self.degrees.iter().map(usize::to_string).collect();
        writeln!(out, "degrees: [{}]", degrees.join(", ")).expect("write to string");
        writeln!(out, "factor: {}", self.factor).expect("write to string");
        for (key, c) in self.tensor.sorted_terms() {
            let beads: Vec<String> = key.iter().map(|&i| pbw.monomial(i).to_string()).collect();
            writeln!(out, "({c}) {}", beads.join(" ⊗ ")).expect("write to string");
        }
        out
    }
}

/// Evaluates `factor · Σ Π_i λ(x_i g⁻¹ 1_{α_i})`.
///
/// For `Ū` the mode is irrelevant. For `U`, [`Mode::GradedInU`] first
/// rewrites every bead in `U` and fails with [`BeadError::BeadOutsideU`] if
/// that is impossible.
pub fn evaluate(engine: &BeadEngine, bp: &BeadPresentation, mode: Mode) -> Result<CycScalar, BeadError> {
    let n = engine.algebra().field_order();
    let rewritten;
    let tensor = match (engine.variant(), mode) {
        (Variant::Small, _) | (_, Mode::FullTilde) => &bp.tensor,
        (_, Mode::GradedInU) => {
            rewritten = engine.algebra().restrict_to_restricted(&bp.tensor).map_err(|e| match e {
                QuantumError::NotHomogeneous(m) => BeadError::BeadOutsideU(m),
                other => other.into(),
            })?;
            &rewritten
        }
    };
    let tables = engine.trace_table(mode);
    let degree = |i: usize| if tables.len() == 1 { 0 } else { bp.degrees[i] };
    let mut sum = CycScalar::zero(n);
    'terms: for (key, c) in tensor.iter() {
        let mut prod = c.clone();
        for (i, &b) in key.iter().enumerate() {
            let v = &tables[degree(i)][b as usize];
            if v.is_zero() {
                continue 'terms;
            }
            prod = &prod * v;
        }
        sum = &sum + &prod;
    }
    Ok(&sum * &bp.factor)
}
