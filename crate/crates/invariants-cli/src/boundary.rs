//! Invariants of the boundary 3-manifold with a spin structure or a
//! cohomology class.
//!
//! A dot-free diagram `L` is a surgery presentation of `M = ∂E`. Spin
//! structures on `M` correspond to characteristic sublinks of `L`, classes in
//! `H¹(M; Z2)` to even sublinks. For `p ≡ 0 (mod 4)` the boundary invariant is
//! `λ(v₊ 1₁)^σ J(E, ω)` with `ω` characteristic; for `p ≡ 2 (mod 4)` it is
//! `λ(v₊ 1₀)^σ J(E, ω)` with `ω` even.

use std::fmt;

use cyclo_field::CycScalar;
use diagram::{linking_matrix, trade_handles, GKirbyDiagram, LinkData};

use crate::calc::{Calculator, VariantChoice};
use crate::error::CliError;

/// The kind of structure on the boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum StructureKind {
    /// Spin structures, described by characteristic sublinks.
    Spin,
    /// Classes in `H¹(M; Z2)`, described by even sublinks.
    #[value(name = "coh")]
    Cohomological,
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructureKind::Spin => "spin",
            StructureKind::Cohomological => "cohomological",
        })
    }
}

impl StructureKind {
    /// The kind determined by `p`: spin for `p ≡ 0 (mod 4)`, cohomological for `p ≡ 2 (mod 4)`.
    pub fn for_p(p: u32) -> Result<StructureKind, CliError> {
        match p % 4 {
            0 => Ok(StructureKind::Spin),
            2 => Ok(StructureKind::Cohomological),
            _ => Err(CliError::OddP(p)),
        }
    }

    /// The degree `α` whose ribbon values normalize the invariant.
    pub fn degree(self) -> usize {
        match self {
            StructureKind::Spin => 1,
            StructureKind::Cohomological => 0,
        }
    }

    /// Whether a sublink describes a structure of this kind.
    pub fn admits(self, lk: &LinkData, omega: &[u32]) -> bool {
        match self {
            StructureKind::Spin => lk.is_characteristic(omega),
            StructureKind::Cohomological => lk.is_even(omega),
        }
    }

    /// All sublinks describing a structure of this kind.
    pub fn sublinks(self, lk: &LinkData) -> Vec<Vec<u32>> {
        match self {
            StructureKind::Spin => lk.characteristic_sublinks(),
            StructureKind::Cohomological => lk.even_sublinks(),
        }
    }
}

/// A boundary invariant with the data that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryValue {
    /// Kind of structure.
    pub kind: StructureKind,
    /// The sublink of the traded link.
    pub omega: Vec<u32>,
    /// Signature of the traded link.
    pub sigma: i64,
    /// The normalized value.
    pub value: CycScalar,
}

/// The normalizing factor `λ(v₊ 1_α)^σ`.
pub fn normalization(calc: &Calculator, kind: StructureKind, sigma: i64) -> Result<CycScalar, CliError> {
    let table = calc.lambda_v()?;
    Ok(table.get(1, kind.degree()).pow(sigma)?)
}

/// The boundary invariant of the surgery presentation obtained by trading
/// every dotted circle of `d`; `omega` labels the components of the traded link.
pub fn boundary_invariant(
    calc: &Calculator,
    d: &GKirbyDiagram,
    omega: &[u32],
    requested: Option<StructureKind>,
) -> Result<BoundaryValue, CliError> {
    if calc.choice() != VariantChoice::Restricted {
        return Err(CliError::Unsupported("boundary invariants are computed with the restricted quantum group".into()));
    }
    let kind = StructureKind::for_p(calc.p())?;
    if let Some(requested) = requested {
        if requested != kind {
            return Err(CliError::StructureKindMismatch { p: calc.p(), requested, expected: kind });
        }
    }
    let link = trade_handles(d).link;
    let lk = linking_matrix(&link);
    if omega.len() != lk.n() {
        return Err(CliError::BadOmega(format!("{} labels for {} components of the traded link", omega.len(), lk.n())));
    }
    if !kind.admits(&lk, omega) {
        return Err(match kind {
            StructureKind::Spin => CliError::NotCharacteristic(omega.to_vec()),
            StructureKind::Cohomological => CliError::NotEven(omega.to_vec()),
        });
    }
    let sigma = lk.signature();
    let value = &normalization(calc, kind, sigma)? * &calc.refined_at(&link, omega)?;
    Ok(BoundaryValue { kind, omega: omega.to_vec(), sigma, value })
}
