//! Degree-wise closed forms for even `p`: graded ribbon elements, graded
//! copairings, values of the integral on them, and the two gradings of `U`.

use cyclo_field::CycScalar;
use gcoalg_core::Tensor;
use serde::{Deserialize, Serialize};

use crate::error::QuantumError;
use crate::instance::QuantumGroupInstance;
use crate::pbw::{AlgebraElement, PBWMonomial};
use crate::variant::Variant;

/// The two gradings of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gradings {
    /// `|x| = a - b`.
    pub gamma_degree: i64,
    /// `a + c mod 2`, with the Cartan exponent counted in powers of `K`.
    pub parity_deg: u8,
}

/// The values `λ(v_± 1_α)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaVTable {
    /// `λ(v₊ 1₀)`.
    pub plus_0: CycScalar,
    /// `λ(v₊ 1₁)`.
    pub plus_1: CycScalar,
    /// `λ(v₋ 1₀)`.
    pub minus_0: CycScalar,
    /// `λ(v₋ 1₁)`.
    pub minus_1: CycScalar,
}

impl LambdaVTable {
    /// `λ(v_sign 1_alpha)` for `sign = ±1`.
    pub fn get(&self, sign: i64, alpha: usize) -> &CycScalar {
        match (sign > 0, alpha) {
            (true, 0) => &self.plus_0,
            (true, _) => &self.plus_1,
            (false, 0) => &self.minus_0,
            (false, _) => &self.minus_1,
        }
    }
}

impl QuantumGroupInstance {
    /// The graded ribbon element `v₊ 1_α` (`inverse = false`) or `v₋ 1_α`
    /// (`inverse = true`) as a closed form.
    pub fn graded_ribbon(&self, alpha: usize, inverse: bool) -> Result<Tensor, QuantumError> {
        self.require(self.variant() != Variant::Small, "U or Ũ")?;
        self.require_even()?;
        let k = self.consts();
        let p = self.p() as i64;
        let one = self.one_scalar();
        let odd_square = (p % 4 == 2) == (alpha == 0);
        let extra = if odd_square { 0 } else { 1 };
        let unit = if inverse { &one + &k.i(1) } else { &one - &k.i(1) };
        let mut pref = unit.div(&k.named.sqrt_p).expect("nonzero");
        if alpha == 1 {
            pref = -pref;
        }
        let sign: i64 = if inverse { 1 } else { -1 };
        let mut out = Tensor::zero(1);
        for a in 0..self.p() {
            let ai = a as i64;
            let base = &(&(&k.brace_unit_pow(sign, a) * &k.factorial_inv[a as usize]) * &k.q(sign * (ai + 3) * ai / 2)) * &pref;
            for b in 0..self.p_prime() as i64 {
                let sq = if odd_square { (2 * b - 1) * (2 * b - 1) } else { 4 * b * b };
                let c = if inverse { ai + 2 * b + extra } else { -ai - 2 * b - extra };
                let term = self.word(&[(0, a, 0), (a, 0, self.k_exponent(c))]);
                out.add_scaled(&term, &(&base * &k.t(-sign * sq)));
            }
        }
        self.project(&out, &[alpha])
    }

    /// The graded copairing `w₊(1_α ⊗ 1_β)` as a closed form.
    ///
    /// The phase is `q^{-(a(a-1) + b(b-1))/2 - 2b + 4cd + 2(αc + βd) + αβ}`.
    pub fn graded_copairing(&self, alpha: usize, beta: usize) -> Result<Tensor, QuantumError> {
        self.require(self.variant() != Variant::Small, "U or Ũ")?;
        self.require_even()?;
        let k = self.consts();
        let pp = self.p_prime() as i64;
        let (al, be) = (alpha as i64, beta as i64);
        let norm = k.rat(1, pp);
        let mut out = Tensor::zero(2);
        for a in 0..self.p() {
            for b in 0..self.p() {
                let (ai, bi) = (a as i64, b as i64);
                let base = &(&(&(&k.brace_unit_pow(-1, a) * &k.factorial_inv[a as usize])
                    * &(&k.brace_unit_pow(-1, b) * &k.factorial_inv[b as usize]))
                    * &k.q(-(ai * (ai - 1) + bi * (bi - 1)) / 2 - 2 * bi))
                    * &norm;
                for c in 0..pp {
                    let l = self.basis(a, b, self.k_exponent(ai + 2 * c + be));
                    for d in 0..pp {
                        let r = self.basis(b, a, self.k_exponent(bi + 2 * d + al));
                        let phase = k.q(4 * c * d + 2 * (be * d + al * c) + al * be);
                        out.add_scaled(&l.outer(&r), &(&base * &phase));
                    }
                }
            }
        }
        self.project(&out, &[alpha, beta])
    }

    /// The four values `λ(v_± 1_α)`, computed from the closed-form ribbon
    /// elements and the idempotents.
    pub fn lambda_v_values(&self) -> Result<LambdaVTable, QuantumError> {
        self.require(self.variant() != Variant::Small, "U or Ũ")?;
        self.require_even()?;
        let (vp, vm) = self.ribbon_tensors()?;
        let value = |v: &Tensor, alpha: usize| -> Result<CycScalar, QuantumError> {
            let t = self.project(v, &[alpha])?;
            Ok(self.integral_on(&t, 0).scalar_value(self.field_order()))
        };
        Ok(LambdaVTable { plus_0: value(vp, 0)?, plus_1: value(vp, 1)?, minus_0: value(vm, 0)?, minus_1: value(vm, 1)? })
    }

    /// Both gradings of a monomial.
    pub fn monomial_gradings(&self, m: &PBWMonomial) -> Gradings {
        let c = match self.variant() {
            Variant::Tilde => m.c / 2,
            _ => m.c,
        };
        Gradings { gamma_degree: m.a as i64 - m.b as i64, parity_deg: ((m.a + c) % 2) as u8 }
    }

    /// Both gradings of a homogeneous element.
    ///
    /// The parity grading is only defined on `U` and `Ū`; in `Ũ` odd powers of
    /// `K̃` have no parity and are reported as non-homogeneous.
    pub fn gradings(&self, x: &AlgebraElement) -> Result<Gradings, QuantumError> {
        let mut found: Option<Gradings> = None;
        for (m, _) in x.iter() {
            if self.variant() == Variant::Tilde && m.c % 2 == 1 {
                return Err(QuantumError::NotHomogeneous(format!("{m} has an odd power of K̃")));
            }
            let g = self.monomial_gradings(m);
            match found {
                None => found = Some(g),
                Some(f) if f == g => {}
                Some(_) => return Err(QuantumError::NotHomogeneous(x.to_string())),
            }
        }
        found.ok_or_else(|| QuantumError::NotHomogeneous("zero element has no degree".into()))
    }

    /// The Γ-grading `|x| = a - b` of a homogeneous element.
    pub fn gamma_degree(&self, x: &AlgebraElement) -> Result<i64, QuantumError> {
        let mut found = None;
        for (m, _) in x.iter() {
            let d = m.a as i64 - m.b as i64;
            match found {
                None => found = Some(d),
                Some(f) if f == d => {}
                Some(_) => return Err(QuantumError::NotHomogeneous(x.to_string())),
            }
        }
        found.ok_or_else(|| QuantumError::NotHomogeneous("zero element has no degree".into()))
    }

    /// `λ(S(M₊') 1_α v₊^n 1_α) M₊'' 1_β`, the element appearing in the
    /// parity-vanishing identities.
    pub fn parity_bead(&self, alpha: usize, n: u32, beta: usize) -> Result<Tensor, QuantumError> {
        self.require(self.variant() != Variant::Small, "U or Ũ")?;
        let (m_plus, _) = self.m_matrix()?;
        let (vp, _) = self.ribbon_tensors()?;
        let mut power = self.project(&self.basis(0, 0, 0), &[alpha])?;
        for _ in 0..n {
            power = self.mul(&power, vp);
        }
        let idem = self.idempotents()?;
        let left = self.antipode_on(m_plus, 0);
        let left = self.mul(&left, &idem[alpha].outer(&idem[beta]));
        let left = self.mul(&left, &power.outer(&self.basis(0, 0, 0)));
        Ok(self.integral_on(&left, 0))
    }
}
