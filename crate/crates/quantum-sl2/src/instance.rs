//! A quantum group at a fixed `p`, with arithmetic on elements and tensors.

use std::sync::OnceLock;

use cyclo_field::CycScalar;
use gcoalg_core::Tensor;

use crate::error::QuantumError;
use crate::pbw::{AlgebraElement, PBWMonomial, PbwEngine};
use crate::scalars::QConstants;
use crate::variant::Variant;

#[derive(Default)]
pub(crate) struct Cache {
    pub(crate) r_matrix: OnceLock<Tensor>,
    pub(crate) ribbon: OnceLock<(Tensor, Tensor)>,
    pub(crate) m_matrix: OnceLock<(Tensor, Tensor)>,
    pub(crate) copairing: OnceLock<Tensor>,
}

/// One of `U`, `Ũ`, `Ū` at a fixed `p`, with memoized arithmetic and
/// lazily computed structure data.
pub struct QuantumGroupInstance {
    variant: Variant,
    engine: PbwEngine,
    pub(crate) cache: Cache,
}

impl std::fmt::Debug for QuantumGroupInstance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QuantumGroupInstance({}, p = {})", self.variant, self.p())
    }
}

impl QuantumGroupInstance {
    /// Builds the algebra `variant` at parameter `p >= 2`.
    pub fn new(variant: Variant, p: u32) -> Result<Self, QuantumError> {
        if !(2..=64).contains(&p) {
            return Err(QuantumError::InvalidParameter(format!("p must lie in 2..=64, got {p}")));
        }
        let engine = PbwEngine::new(variant, QConstants::new(p));
        Ok(QuantumGroupInstance { variant, engine, cache: Cache::default() })
    }

    /// The restricted quantum group `U` at `p`.
    pub fn restricted(p: u32) -> Result<Self, QuantumError> {
        Self::new(Variant::Restricted, p)
    }

    /// The ribbon extension `Ũ` at `p`.
    pub fn tilde(p: u32) -> Result<Self, QuantumError> {
        Self::new(Variant::Tilde, p)
    }

    /// The small quantum group `Ū` at `p`.
    pub fn small(p: u32) -> Result<Self, QuantumError> {
        Self::new(Variant::Small, p)
    }

    /// The parameter `p`.
    pub fn p(&self) -> u32 {
        self.engine.consts().p
    }

    /// `p' = p / gcd(p, 2)`.
    pub fn p_prime(&self) -> u32 {
        self.engine.consts().p_prime
    }

    /// Which algebra this is.
    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Shared scalar constants.
    pub fn consts(&self) -> &QConstants {
        self.engine.consts()
    }

    /// The PBW rewriting engine.
    pub fn engine(&self) -> &PbwEngine {
        &self.engine
    }

    /// Cyclotomic order `8p` of the coefficient field.
    pub fn field_order(&self) -> u32 {
        self.consts().n
    }

    /// Dimension of the algebra.
    pub fn dim(&self) -> usize {
        self.engine.dim()
    }

    /// Order of the Cartan generator.
    pub fn cartan_order(&self) -> u32 {
        self.engine.cartan_order()
    }

    /// Exponent of this algebra's Cartan generator representing `K^c`,
    /// where `K` is the Cartan generator of `U` (or `K̄` in `Ū`).
    pub fn k_exponent(&self, c: i64) -> i64 {
        match self.variant {
            Variant::Tilde => 2 * c,
            _ => c,
        }
    }

    pub(crate) fn require(&self, ok: bool, expected: &str) -> Result<(), QuantumError> {
        if ok {
            Ok(())
        } else {
            Err(QuantumError::VariantMismatch { expected: expected.into(), found: self.variant })
        }
    }

    pub(crate) fn require_even(&self) -> Result<(), QuantumError> {
        if self.p() % 2 == 0 {
            Ok(())
        } else {
            Err(QuantumError::ParityUnsupported(self.p()))
        }
    }

    fn check(&self, x: &AlgebraElement) -> Result<(), QuantumError> {
        if x.variant() != self.variant || x.p() != self.p() {
            return Err(QuantumError::VariantMismatch { expected: format!("{} at p = {}", self.variant, self.p()), found: x.variant() });
        }
        Ok(())
    }

    /// Zero scalar.
    pub fn zero_scalar(&self) -> CycScalar {
        CycScalar::zero(self.field_order())
    }

    /// Unit scalar.
    pub fn one_scalar(&self) -> CycScalar {
        CycScalar::one(self.field_order())
    }

    /// The monomial `E^a F^b K^c`, with `c` reduced modulo the Cartan order.
    pub fn monomial(&self, a: u32, b: u32, c: i64) -> PBWMonomial {
        self.engine.monomial(self.engine.index(a, b, c))
    }

    /// The element `E^a F^b K^c`.
    pub fn element(&self, a: u32, b: u32, c: i64) -> AlgebraElement {
        AlgebraElement::monomial(self.monomial(a, b, c), self.p(), self.one_scalar())
    }

    /// The unit.
    pub fn one(&self) -> AlgebraElement {
        self.element(0, 0, 0)
    }

    /// The generator `E`.
    pub fn e(&self) -> AlgebraElement {
        self.element(1, 0, 0)
    }

    /// The generator `F`.
    pub fn f(&self) -> AlgebraElement {
        self.element(0, 1, 0)
    }

    /// The Cartan generator `K`, `K̃` or `K̄`.
    pub fn k(&self) -> AlgebraElement {
        self.element(0, 0, 1)
    }

    /// `E^a F^b K^c` as a rank-1 tensor.
    pub fn basis(&self, a: u32, b: u32, c: i64) -> Tensor {
        self.engine.basis(a, b, c)
    }

    /// Converts an element to a rank-1 tensor.
    pub fn to_tensor(&self, x: &AlgebraElement) -> Tensor {
        self.engine.to_tensor(x)
    }

    /// Converts a rank-1 tensor to an element.
    pub fn to_element(&self, t: &Tensor) -> AlgebraElement {
        self.engine.to_element(t)
    }

    /// Product of two elements, in normal order.
    pub fn product(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement, QuantumError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.to_element(&self.mul(&self.to_tensor(x), &self.to_tensor(y))))
    }

    /// Coproduct of an element, as a rank-2 tensor.
    pub fn coproduct(&self, x: &AlgebraElement) -> Result<Tensor, QuantumError> {
        self.check(x)?;
        Ok(self.engine.coproduct_on(&self.to_tensor(x), 0))
    }

    /// Antipode of an element.
    pub fn antipode(&self, x: &AlgebraElement) -> Result<AlgebraElement, QuantumError> {
        self.check(x)?;
        Ok(self.to_element(&self.engine.antipode_on(&self.to_tensor(x), 0)))
    }

    /// Counit of an element.
    pub fn counit(&self, x: &AlgebraElement) -> Result<CycScalar, QuantumError> {
        self.check(x)?;
        Ok(self.engine.counit_on(&self.to_tensor(x), 0).scalar_value(self.field_order()))
    }

    /// Legwise product of tensors.
    pub fn mul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        self.engine.mul(a, b)
    }

    /// Product of several tensors of equal rank, left to right.
    pub fn mul_all(&self, factors: &[&Tensor]) -> Tensor {
        let mut it = factors.iter();
        let first = (*it.next().expect("at least one factor")).clone();
        it.fold(first, |acc, t| self.mul(&acc, t))
    }

    /// The unit of the tensor power of the given rank.
    pub fn unit_tensor(&self, rank: usize) -> Tensor {
        let mut t = Tensor::scalar(self.one_scalar());
        let one = self.basis(0, 0, 0);
        for _ in 0..rank {
            t = t.outer(&one);
        }
        t
    }

    /// Applies the coproduct to one leg.
    pub fn coproduct_on(&self, t: &Tensor, leg: usize) -> Tensor {
        self.engine.coproduct_on(t, leg)
    }

    /// Applies the antipode to one leg.
    pub fn antipode_on(&self, t: &Tensor, leg: usize) -> Tensor {
        self.engine.antipode_on(t, leg)
    }

    /// Applies the counit to one leg.
    pub fn counit_on(&self, t: &Tensor, leg: usize) -> Tensor {
        self.engine.counit_on(t, leg)
    }

    /// Multiplies all legs of a tensor together, in order.
    pub fn multiply_legs(&self, t: &Tensor) -> Tensor {
        let mut out = Tensor::zero(1);
        for (k, c) in t.iter() {
            let mut acc = Tensor::basis(&[k[0]], c.clone());
            for leg in &k[1..] {
                acc = self.mul(&acc, &Tensor::basis(&[*leg], self.one_scalar()));
            }
            out.add_assign(&acc);
        }
        out
    }

    /// Applies the inverse antipode to one leg, using `S^{-1}(y) = K^{-h} S(y) K^h`
    /// where `S^2` is conjugation by the group-like `K^h`.
    pub fn antipode_inverse_on(&self, t: &Tensor, leg: usize) -> Tensor {
        let h = self.variant.commutator_power();
        let rank = t.rank();
        let side = |c: i64| {
            let mut acc = Tensor::scalar(self.one_scalar());
            for l in 0..rank {
                acc = acc.outer(&if l == leg { self.basis(0, 0, c) } else { self.basis(0, 0, 0) });
            }
            acc
        };
        self.mul_all(&[&side(-h), &self.antipode_on(t, leg), &side(h)])
    }
}
