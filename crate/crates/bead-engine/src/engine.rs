//! The algebra data used to decorate and evaluate diagrams.

use std::sync::{Mutex, OnceLock};

use cyclo_field::CycScalar;
use diagram::GKirbyDiagram;
use gcoalg_core::Tensor;
use quantum_sl2::{QuantumGroupInstance, Variant};
use rustc_hash::FxHashMap;

use crate::decorate::{BeadConventions, Reversal};
use crate::error::BeadError;

/// How collected beads are evaluated for the restricted quantum group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Rewrite every bead in `U` and apply the integral of `U`.
    GradedInU,
    /// Apply the integral of `Ũ` directly.
    FullTilde,
}

/// Bead algebra for one quantum group at one `p`.
///
/// For `U` the beads live in the ribbon extension `Ũ`, which carries the
/// R-matrix, while the dotted discs use the cointegral of `U`. For `Ū`
/// everything happens in `Ū` with trivial labels.
pub struct BeadEngine {
    variant: Variant,
    alg: QuantumGroupInstance,
    restricted: Option<QuantumGroupInstance>,
    conventions: BeadConventions,
    scale: CycScalar,
    crossing: [OnceLock<Tensor>; 2],
    coproducts: Mutex<FxHashMap<usize, Tensor>>,
    tables: OnceLock<Tables>,
}

/// Trace functionals `x ↦ ξ λ(x g⁻¹ 1_α)` on every basis vector.
struct Tables {
    tilde: Vec<Vec<CycScalar>>,
    restricted: Option<Vec<Vec<CycScalar>>>,
}

impl std::fmt::Debug for BeadEngine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BeadEngine({}, p = {})", self.variant, self.p())
    }
}

impl BeadEngine {
    /// Engine for `U` (or `Ũ`) or `Ū` at parameter `p`.
    pub fn new(variant: Variant, p: u32) -> Result<Self, BeadError> {
        let (alg, restricted) = match variant {
            Variant::Small => (QuantumGroupInstance::small(p)?, None),
            _ => (QuantumGroupInstance::tilde(p)?, Some(QuantumGroupInstance::restricted(p)?)),
        };
        let one = alg.one_scalar();
        Ok(BeadEngine {
            variant: if variant == Variant::Small { Variant::Small } else { Variant::Restricted },
            alg,
            restricted,
            conventions: BeadConventions::default(),
            scale: one,
            crossing: [OnceLock::new(), OnceLock::new()],
            coproducts: Mutex::new(FxHashMap::default()),
            tables: OnceLock::new(),
        })
    }

    /// The same algebra with other bead conventions.
    pub fn with_conventions(mut self, conventions: BeadConventions) -> Self {
        self.conventions = conventions;
        self
    }

    /// Rescales the integral by `ξ` and the cointegral by `ξ⁻¹`.
    pub fn with_rescaling(mut self, xi: &CycScalar) -> Result<Self, BeadError> {
        if xi.is_zero() {
            return Err(BeadError::BadLabels("the rescaling factor must be nonzero".into()));
        }
        self.scale = xi.clone().with_order(self.alg.field_order());
        self.coproducts = Mutex::new(FxHashMap::default());
        self.tables = OnceLock::new();
        Ok(self)
    }

    /// `Restricted` for `U` and `Ũ`, `Small` for `Ū`.
    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// The parameter `p`.
    pub fn p(&self) -> u32 {
        self.alg.p()
    }

    /// The bead conventions in use.
    pub fn conventions(&self) -> BeadConventions {
        self.conventions
    }

    /// The algebra in which beads are placed (`Ũ` or `Ū`).
    pub fn algebra(&self) -> &QuantumGroupInstance {
        &self.alg
    }

    /// The restricted quantum group `U`, when the engine serves `U`.
    pub fn restricted(&self) -> Option<&QuantumGroupInstance> {
        self.restricted.as_ref()
    }

    pub(crate) fn one(&self) -> CycScalar {
        self.alg.one_scalar()
    }

    /// Checks that the labels can be evaluated by this engine.
    pub fn check_group(&self, d: &GKirbyDiagram) -> Result<(), BeadError> {
        let g = d.group();
        match self.variant {
            Variant::Small if !g.is_trivial() && d.labels().iter().any(|x| *x != g.zero()) => {
                Err(BeadError::UnsupportedGroup(format!("Ū takes only trivial labels, the diagram is labeled in {g}")))
            }
            Variant::Small => Ok(()),
            _ if g.is_trivial() || g.is_z2() => Ok(()),
            _ => Err(BeadError::UnsupportedGroup(format!("U is graded by Z2, not {g}"))),
        }
    }

    /// `R` for a crossing whose lower-left strand passes over, `R⁻¹` otherwise;
    /// the first leg belongs to the over strand.
    pub fn crossing_tensor(&self, left_over: bool) -> Result<&Tensor, BeadError> {
        let slot = &self.crossing[usize::from(!left_over)];
        if let Some(t) = slot.get() {
            return Ok(t);
        }
        let r = self.alg.r_matrix()?;
        let t = if left_over { r.clone() } else { self.alg.antipode_on(r, 0) };
        Ok(slot.get_or_init(|| t))
    }

    /// Applies `S` or `S⁻¹` to one leg.
    pub fn reverse_leg(&self, t: &Tensor, leg: usize, how: Reversal) -> Tensor {
        match how {
            Reversal::Antipode => self.alg.antipode_on(t, leg),
            Reversal::InverseAntipode => self.alg.antipode_inverse_on(t, leg),
        }
    }

    /// `g^e` as a rank-1 tensor.
    pub fn pivotal_power(&self, e: i64) -> Tensor {
        self.alg.basis(0, 0, self.alg.k_exponent((self.p() as i64 + 1) * e))
    }

    /// The cointegral placed at dotted discs, including the rescaling.
    pub fn cointegral(&self) -> Tensor {
        let inv = self.scale.inv().expect("nonzero scale");
        let base = match &self.restricted {
            Some(u) => self.alg.embed_restricted(&u.cointegral_tensor()).expect("Ũ engine"),
            None => self.alg.cointegral_tensor(),
        };
        base.scale(&inv)
    }

    /// `ε(Λ)`, the factor paid for a dotted disc nobody pierces.
    pub fn cointegral_counit(&self) -> CycScalar {
        self.alg.counit_on(&self.cointegral(), 0).scalar_value(self.alg.field_order())
    }

    /// The iterated coproduct `Δ^{(k)}(Λ)` with `k` legs, folded from the left.
    pub fn cointegral_coproduct(&self, k: usize) -> Tensor {
        assert!(k >= 1, "at least one leg");
        let mut cache = self.coproducts.lock().expect("cache lock");
        if let Some(t) = cache.get(&k) {
            return t.clone();
        }
        let mut t = self.cointegral();
        for _ in 1..k {
            t = self.alg.coproduct_on(&t, 0);
        }
        cache.insert(k, t.clone());
        t
    }

    fn tables(&self) -> &Tables {
        self.tables.get_or_init(|| {
            let tilde = trace_tables(&self.alg, &self.scale);
            let restricted = self.restricted.as_ref().map(|u| trace_tables(u, &self.scale));
            Tables { tilde, restricted }
        })
    }

    /// Values `ξ λ(x g⁻¹ 1_α)` on the basis of the evaluating algebra.
    ///
    /// For `Ū` there is a single table; for `U` there is one per `α ∈ Z2`.
    pub fn trace_table(&self, mode: Mode) -> &[Vec<CycScalar>] {
        let t = self.tables();
        match (mode, &t.restricted) {
            (Mode::GradedInU, Some(r)) => r,
            _ => &t.tilde,
        }
    }
}

fn trace_tables(alg: &QuantumGroupInstance, scale: &CycScalar) -> Vec<Vec<CycScalar>> {
    let n = alg.field_order();
    let ginv = alg.basis(0, 0, alg.k_exponent(-(alg.p() as i64 + 1)));
    let idems: Vec<Tensor> = match alg.idempotents() {
        Ok(pair) => pair.to_vec(),
        Err(_) => vec![alg.unit_tensor(1)],
    };
    idems
        .iter()
        .map(|idem| {
            let w = alg.mul(&ginv, idem);
            (0..alg.dim() as u32)
                .map(|b| {
                    let x = alg.mul(&Tensor::basis(&[b], alg.one_scalar()), &w);
                    &x.evaluate(n, |i| alg.integral_on_basis(i)) * scale
                })
                .collect()
        })
        .collect()
}
