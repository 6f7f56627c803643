//! Refined and unrefined invariants of a diagram.

use bead_engine::{evaluate, evaluate_diagram, presentation, BeadEngine, Mode};
use cyclo_field::CycScalar;
use diagram::{GKirbyDiagram, GroupElement, LabelGroup};
use quantum_sl2::{LambdaVTable, Variant};

use crate::error::CliError;

/// Which quantum group an invariant is computed with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum VariantChoice {
    /// The restricted quantum group `U`, graded by `Z2`.
    Restricted,
    /// The small quantum group `Ū`, with trivial labels.
    Small,
}

impl VariantChoice {
    /// The matching quantum group variant.
    pub fn variant(self) -> Variant {
        match self {
            VariantChoice::Restricted => Variant::Restricted,
            VariantChoice::Small => Variant::Small,
        }
    }

    /// Lower-case name used in output.
    pub fn name(self) -> &'static str {
        match self {
            VariantChoice::Restricted => "restricted",
            VariantChoice::Small => "small",
        }
    }
}

/// A label vector together with the invariant at that labeling.
pub type LabeledValue = (Vec<u32>, CycScalar);

/// A bead engine with a fixed evaluation mode.
#[derive(Debug)]
pub struct Calculator {
    choice: VariantChoice,
    engine: BeadEngine,
    mode: Mode,
}

impl Calculator {
    /// A calculator for one quantum group at `p`.
    pub fn new(choice: VariantChoice, p: u32, mode: Mode) -> Result<Self, CliError> {
        Ok(Calculator { choice, engine: BeadEngine::new(choice.variant(), p)?, mode })
    }

    /// The same calculator with the integral scaled by `ξ` and the cointegral by `ξ⁻¹`.
    pub fn rescaled(&self, xi: &CycScalar) -> Result<Self, CliError> {
        if xi.is_zero() {
            return Err(CliError::ZeroScale);
        }
        let engine = BeadEngine::new(self.choice.variant(), self.p())?.with_rescaling(xi)?;
        Ok(Calculator { choice: self.choice, engine, mode: self.mode })
    }

    /// The variant.
    pub fn choice(&self) -> VariantChoice {
        self.choice
    }

    /// The parameter `p`.
    pub fn p(&self) -> u32 {
        self.engine.p()
    }

    /// The evaluation mode.
    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// The underlying bead engine.
    pub fn engine(&self) -> &BeadEngine {
        &self.engine
    }

    /// `1` in the coefficient field.
    pub fn one(&self) -> CycScalar {
        self.engine.algebra().one_scalar()
    }

    /// `0` in the coefficient field.
    pub fn zero(&self) -> CycScalar {
        self.engine.algebra().zero_scalar()
    }

    /// The imaginary unit raised to `k`.
    pub fn i_pow(&self, k: i64) -> CycScalar {
        self.engine.algebra().consts().i(k)
    }

    /// The values `λ(v_± 1_α)` of `U`.
    pub fn lambda_v(&self) -> Result<LambdaVTable, CliError> {
        match self.engine.restricted() {
            Some(u) => Ok(u.lambda_v_values()?),
            None => Err(CliError::Unsupported("the small quantum group has no Z2-graded ribbon values".into())),
        }
    }

    /// All label vectors `ω` the invariant is summed over.
    ///
    /// For `U` these are the `Z2` labelings satisfying the cocycle condition;
    /// for `Ū` only the zero labeling.
    pub fn labelings(&self, d: &GKirbyDiagram) -> Result<Vec<Vec<u32>>, CliError> {
        let n = d.component_count();
        Ok(match self.choice {
            VariantChoice::Small => vec![vec![0; n]],
            VariantChoice::Restricted => {
                let z2 = LabelGroup::z2();
                let base = d.with_group(z2.clone(), vec![z2.zero(); n])?;
                base.cocycle_labelings().iter().map(|l| l.iter().map(|x| x.0[0]).collect()).collect()
            }
        })
    }

    /// The diagram relabeled by `omega` in `Z2`.
    pub fn relabel(&self, d: &GKirbyDiagram, omega: &[u32]) -> Result<GKirbyDiagram, CliError> {
        if omega.len() != d.component_count() {
            return Err(CliError::BadOmega(format!("{} labels for {} components", omega.len(), d.component_count())));
        }
        if omega.iter().any(|&x| x > 1) {
            return Err(CliError::BadOmega(format!("{omega:?} is not a vector over Z2")));
        }
        if self.choice == VariantChoice::Small && omega.iter().any(|&x| x != 0) {
            return Err(CliError::Unsupported("the small quantum group takes only zero labels".into()));
        }
        let z2 = LabelGroup::z2();
        let labels = omega.iter().map(|&x| GroupElement(vec![x])).collect();
        Ok(d.with_group(z2, labels)?)
    }

    /// The refined invariant `J(W, ω)` with the labels written in the diagram.
    pub fn refined(&self, d: &GKirbyDiagram) -> Result<CycScalar, CliError> {
        Ok(evaluate_diagram(&self.engine, d, self.mode)?)
    }

    /// The refined invariant at an explicit label vector.
    pub fn refined_at(&self, d: &GKirbyDiagram, omega: &[u32]) -> Result<CycScalar, CliError> {
        let d = self.relabel(d, omega)?;
        self.refined(&d)
    }

    /// The refined invariant at every labeling, from one bead presentation.
    pub fn refined_table(&self, d: &GKirbyDiagram) -> Result<Vec<LabeledValue>, CliError> {
        let bp = presentation(&self.engine, d)?;
        self.labelings(d)?
            .into_iter()
            .map(|omega| {
                let degrees = omega.iter().map(|&x| x as usize).collect();
                let value = evaluate(&self.engine, &bp.with_degrees(degrees)?, self.mode)?;
                Ok((omega, value))
            })
            .collect()
    }

    /// The unrefined invariant `J(W) = Σ_ω J(W, ω)`.
    pub fn unrefined(&self, d: &GKirbyDiagram) -> Result<CycScalar, CliError> {
        let mut sum = self.zero();
        for (_, v) in self.refined_table(d)? {
            sum += &v;
        }
        Ok(sum)
    }

    /// The unrefined invariant computed by evaluating every relabeled diagram separately.
    pub fn unrefined_by_relabeling(&self, d: &GKirbyDiagram) -> Result<CycScalar, CliError> {
        let mut sum = self.zero();
        for omega in self.labelings(d)? {
            sum += &self.refined_at(d, &omega)?;
        }
        Ok(sum)
    }
}

/// Parses a label vector such as `1,0,1` or `101`.
pub fn parse_omega(text: &str) -> Result<Vec<u32>, CliError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let parts: Vec<String> =
        if text.contains(',') { text.split(',').map(|s| s.trim().to_string()).collect() } else { text.chars().map(String::from).collect() };
    parts
        .iter()
        .map(|s| match s.as_str() {
            "0" => Ok(0),
            "1" => Ok(1),
            other => Err(CliError::BadOmega(format!("`{other}` in `{text}` is not 0 or 1"))),
        })
        .collect()
}
