//! Closed-form structure elements: quasi-R-matrix, Cartan part, R-matrix,
//! ribbon and M-matrices, copairing, integral, cointegral, pivotal element
//! and the central idempotents.

use cyclo_field::CycScalar;
use gcoalg_core::Tensor;

use crate::error::QuantumError;
use crate::instance::QuantumGroupInstance;
use crate::pbw::AlgebraElement;
use crate::variant::Variant;

fn half_exp(n: i64) -> i64 {
    debug_assert!(n % 2 == 0, "odd exponent {n}");
    n / 2
}

impl QuantumGroupInstance {
    /// Product of monomials `E^a F^b K^c` given as `(a, b, c)` triples.
    pub(crate) fn word(&self, parts: &[(u32, u32, i64)]) -> Tensor {
        let tensors: Vec<Tensor> = parts.iter().map(|&(a, b, c)| self.basis(a, b, c)).collect();
        let refs: Vec<&Tensor> = tensors.iter().collect();
        self.mul_all(&refs)
    }

    /// `{±1}^a / [a]!`.
    fn brace_over_factorial(&self, sign: i64, a: u32) -> CycScalar {
        &self.consts().brace_unit_pow(sign, a) * &self.consts().factorial_inv[a as usize]
    }

    /// The quasi-R-matrix `Θ = Σ_a {1}^a / [a]! q^{a(a-1)/2} E^a ⊗ F^a`.
    pub fn quasi_r_matrix(&self) -> Tensor {
        let mut out = Tensor::zero(2);
        for a in 0..self.p() {
            let c = &self.brace_over_factorial(1, a) * &self.consts().q(half_exp((a * a.saturating_sub(1)) as i64));
            out.add_scaled(&self.basis(a, 0, 0).outer(&self.basis(0, a, 0)), &c);
        }
        out
    }

    /// The diagonal Cartan part: `D̃` for `Ũ`, `D̄` for `Ū`.
    pub fn diagonal_part(&self) -> Result<Tensor, QuantumError> {
        self.require(self.variant() != Variant::Restricted, "Ũ or Ū")?;
        let c = self.cartan_order() as i64;
        let k = self.consts();
        let mut out = Tensor::zero(2);
        let norm = k.rat(1, c);
        for a in 0..c {
            for b in 0..c {
                let phase = match self.variant() {
                    Variant::Tilde => k.t(-a * b),
                    _ => k.q(-2 * a * b),
                };
                out.add_scaled(&self.basis(0, 0, a).outer(&self.basis(0, 0, b)), &(&norm * &phase));
            }
        }
        Ok(out)
    }

    /// The R-matrix `D Θ` of `Ũ` or `Ū`.
    pub fn r_matrix(&self) -> Result<&Tensor, QuantumError> {
        if let Some(r) = self.cache.r_matrix.get() {
            return Ok(r);
        }
        let d = self.diagonal_part()?;
        let r = self.mul(&d, &self.quasi_r_matrix());
        Ok(self.cache.r_matrix.get_or_init(|| r))
    }

    /// The pivotal element `g = K^{p+1}` (`K̃^{2p+2}` in `Ũ`, `K̄^{p+1}` in `Ū`).
    pub fn pivotal(&self) -> AlgebraElement {
        self.to_element(&self.pivotal_tensor())
    }

    /// The pivotal element as a rank-1 tensor.
    pub fn pivotal_tensor(&self) -> Tensor {
        self.basis(0, 0, self.k_exponent(self.p() as i64 + 1))
    }

    /// `F^a E^a K^c` in normal order, with `K` the Cartan generator of `U`.
    fn fe_k(&self, a: u32, c: i64) -> Tensor {
        self.word(&[(0, a, 0), (a, 0, self.k_exponent(c))])
    }

    /// The ribbon element and its inverse.
    ///
    /// For `U` and `Ũ` these are the general closed forms; for `Ū` the closed
    /// forms exist for even `p` only.
    pub fn ribbon_elements(&self) -> Result<(AlgebraElement, AlgebraElement), QuantumError> {
        let (v, w) = self.ribbon_tensors()?;
        Ok((self.to_element(v), self.to_element(w)))
    }

    /// The ribbon element and its inverse as rank-1 tensors.
    pub fn ribbon_tensors(&self) -> Result<&(Tensor, Tensor), QuantumError> {
        if let Some(v) = self.cache.ribbon.get() {
            return Ok(v);
        }
        let pair = match self.variant() {
            Variant::Small => self.small_ribbon()?,
            _ => self.restricted_ribbon(),
        };
        Ok(self.cache.ribbon.get_or_init(|| pair))
    }

    fn restricted_ribbon(&self) -> (Tensor, Tensor) {
        let k = self.consts();
        let p = self.p() as i64;
        let one = self.one_scalar();
        let inv_2sqrtp = (&k.named.sqrt_p * &k.int(2)).inv().expect("nonzero");
        let plus_pref = &(&one - &k.i(1)) * &inv_2sqrtp;
        let minus_pref = &(&one + &k.i(1)) * &inv_2sqrtp;
        let mut vp = Tensor::zero(1);
        let mut vm = Tensor::zero(1);
        for a in 0..self.p() {
            let ai = a as i64;
            let cp = &(&self.brace_over_factorial(-1, a) * &k.q(-half_exp((ai + 3) * ai))) * &plus_pref;
            let cm = &(&self.brace_over_factorial(1, a) * &k.q(half_exp((ai + 3) * ai))) * &minus_pref;
            for b in 0..2 * p {
                vp.add_scaled(&self.fe_k(a, -ai + b), &(&cp * &k.t((b + p + 1) * (b + p + 1))));
                vm.add_scaled(&self.fe_k(a, ai + b), &(&cm * &k.t(-(b + p - 1) * (b + p - 1))));
            }
        }
        (vp, vm)
    }

    fn small_ribbon(&self) -> Result<(Tensor, Tensor), QuantumError> {
        self.require_even()?;
        let k = self.consts();
        let p = self.p() as i64;
        let pp = self.p_prime() as i64;
        let one = self.one_scalar();
        let mut vp = Tensor::zero(1);
        let mut vm = Tensor::zero(1);
        if p % 4 == 2 {
            let inv = k.sqrt_p_prime.inv().expect("nonzero");
            let plus_pref = &k.i((pp - 1) / 2) * &inv;
            let minus_pref = &k.i(-(pp - 1) / 2) * &inv;
            let cube = half_exp((pp + 1).pow(3));
            for a in 0..self.p() {
                let ai = a as i64;
                for b in 0..pp {
                    let sq = (2 * b - 1) * (2 * b - 1);
                    let cp = &(&self.brace_over_factorial(-1, a) * &k.q(-half_exp((ai + 3) * ai) + cube * sq)) * &plus_pref;
                    let cm = &(&self.brace_over_factorial(1, a) * &k.q(half_exp((ai + 3) * ai) - cube * sq)) * &minus_pref;
                    vp.add_scaled(&self.fe_k(a, -ai - 2 * b), &cp);
                    vm.add_scaled(&self.fe_k(a, ai + 2 * b), &cm);
                }
            }
        } else {
            let inv = k.named.sqrt_p.inv().expect("nonzero");
            let plus_pref = &(&one - &k.i(1)) * &inv;
            let minus_pref = &(&one + &k.i(1)) * &inv;
            for a in 0..self.p() {
                let ai = a as i64;
                for b in 0..pp {
                    let cp = &(&self.brace_over_factorial(-1, a) * &k.q(-half_exp((ai + 3) * ai) + 2 * b * b)) * &plus_pref;
                    let cm = &(&self.brace_over_factorial(1, a) * &k.q(half_exp((ai + 3) * ai) - 2 * b * b)) * &minus_pref;
                    vp.add_scaled(&self.fe_k(a, -ai - 2 * b - 1), &cp);
                    vm.add_scaled(&self.fe_k(a, ai + 2 * b + 1), &cm);
                }
            }
        }
        Ok((vp, vm))
    }

    /// The M-matrix `M₊ = R₂₁R` and its inverse `M₋`, as closed forms.
    ///
    /// For `Ū` the closed forms exist for even `p` only.
    pub fn m_matrix(&self) -> Result<&(Tensor, Tensor), QuantumError> {
        if let Some(m) = self.cache.m_matrix.get() {
            return Ok(m);
        }
        let pair = match self.variant() {
            Variant::Small => {
                self.require_even()?;
                (self.m_closed_form(1, 1), self.m_closed_form(-1, -1))
            }
            _ => (self.m_closed_form(1, 1), self.m_closed_form(-1, -1)),
        };
        Ok(self.cache.m_matrix.get_or_init(|| pair))
    }

    /// The inverse M-matrix of `Ū` with the sign of the quadratic
    /// `(a(a-1) + b(b-1))/2` term set to `quadratic_sign`.
    ///
    /// `m_matrix` uses `quadratic_sign = -1`; the value `+1` reproduces the
    /// alternative sign, for comparison.
    pub fn small_m_minus_with_sign(&self, quadratic_sign: i64) -> Result<Tensor, QuantumError> {
        self.require(self.variant() == Variant::Small, "Ū")?;
        self.require_even()?;
        Ok(self.m_closed_form(-1, quadratic_sign))
    }

    /// `M₊` (`sign = 1`) or `M₋` (`sign = -1`); `quadratic_sign` multiplies the
    /// `(a(a-1) + b(b-1))/2` exponent and equals `sign` in the standard form.
    fn m_closed_form(&self, sign: i64, quadratic_sign: i64) -> Tensor {
        let k = self.consts();
        let small = self.variant() == Variant::Small;
        let (range, step, norm) = if small {
            let pp = self.p_prime() as i64;
            (pp, 2, k.rat(1, pp))
        } else {
            (2 * self.p() as i64, 1, k.rat(1, 2 * self.p() as i64))
        };
        let cd_scale = step * step;
        let mut out = Tensor::zero(2);
        for a in 0..self.p() {
            for b in 0..self.p() {
                let (ai, bi) = (a as i64, b as i64);
                let quad = half_exp(ai * (ai - 1) + bi * (bi - 1));
                let base = &(&self.brace_over_factorial(sign, a) * &self.brace_over_factorial(sign, b))
                    * &k.q(quadratic_sign * quad - sign * 2 * bi * bi);
                let base = &base * &norm;
                let (left, right) = if sign > 0 {
                    (self.word(&[(0, b, 0), (a, 0, 0)]), self.word(&[(b, 0, 0), (0, a, 0)]))
                } else {
                    (self.word(&[(a, b, 0)]), self.word(&[(0, a, 0), (b, 0, 0)]))
                };
                for c in 0..range {
                    let kl = self.basis(0, 0, self.k_exponent(-bi + step * c));
                    let l = if sign > 0 { self.mul(&kl, &left) } else { self.mul(&left, &kl) };
                    for d in 0..range {
                        let kr = self.basis(0, 0, self.k_exponent(bi + step * d));
                        let r = if sign > 0 { self.mul(&kr, &right) } else { self.mul(&right, &kr) };
                        let coeff = &base * &k.q(-sign * cd_scale * c * d);
                        out.add_scaled(&l.outer(&r), &coeff);
                    }
                }
            }
        }
        out
    }

    /// The copairing `w₊ = S(M₊') ⊗ M₊''`.
    ///
    /// For `U` and `Ũ` this is the closed form; for `Ū` it is obtained from
    /// the closed-form M-matrix.
    pub fn copairing(&self) -> Result<&Tensor, QuantumError> {
        if let Some(w) = self.cache.copairing.get() {
            return Ok(w);
        }
        let w = match self.variant() {
            Variant::Small => self.antipode_on(&self.m_matrix()?.0, 0),
            _ => self.copairing_closed_form(),
        };
        Ok(self.cache.copairing.get_or_init(|| w))
    }

    fn copairing_closed_form(&self) -> Tensor {
        let k = self.consts();
        let range = 2 * self.p() as i64;
        let norm = k.rat(1, range);
        let mut out = Tensor::zero(2);
        for a in 0..self.p() {
            for b in 0..self.p() {
                let (ai, bi) = (a as i64, b as i64);
                let base = &(&(&self.brace_over_factorial(-1, a) * &self.brace_over_factorial(-1, b))
                    * &k.q(-half_exp(ai * (ai - 1) + bi * (bi - 1)) - 2 * bi))
                    * &norm;
                for c in 0..range {
                    let l = self.basis(a, b, self.k_exponent(ai + c));
                    for d in 0..range {
                        let r = self.basis(b, a, self.k_exponent(bi + d));
                        out.add_scaled(&l.outer(&r), &(&base * &k.q(c * d)));
                    }
                }
            }
        }
        out
    }

    /// The nonzero value `λ(E^{p-1} F^{p-1} K^{c₀})` of the left integral.
    pub fn integral_normalization(&self) -> CycScalar {
        let k = self.consts();
        let root = match self.variant() {
            Variant::Small => k.sqrt_p_prime.clone(),
            _ => k.named.sqrt_2p.clone(),
        };
        &root * &k.integral_core()
    }

    /// Value of the left integral on a basis index.
    pub fn integral_on_basis(&self, idx: u32) -> CycScalar {
        let m = self.engine().monomial(idx);
        let top = self.p() - 1;
        if m.a == top && m.b == top && m.c == self.variant().integral_cartan(self.p()) {
            self.integral_normalization()
        } else {
            self.zero_scalar()
        }
    }

    /// The left integral `λ(x)`.
    pub fn integral(&self, x: &AlgebraElement) -> Result<CycScalar, QuantumError> {
        let t = self.to_tensor(x);
        if x.variant() != self.variant() {
            return Err(QuantumError::VariantMismatch { expected: self.variant().to_string(), found: x.variant() });
        }
        Ok(t.evaluate(self.field_order(), |i| self.integral_on_basis(i)))
    }

    /// Applies the left integral to one leg of a tensor.
    pub fn integral_on(&self, t: &Tensor, leg: usize) -> Tensor {
        t.contract_leg(leg, |i| self.integral_on_basis(i))
    }

    /// The two-sided cointegral `Λ`, normalized by `λ(Λ) = 1`.
    pub fn cointegral(&self) -> AlgebraElement {
        self.to_element(&self.cointegral_tensor())
    }

    /// The cointegral as a rank-1 tensor.
    pub fn cointegral_tensor(&self) -> Tensor {
        let norm = self.integral_normalization().inv().expect("nonzero");
        let top = self.p() - 1;
        let mut out = Tensor::zero(1);
        for c in 0..self.cartan_order() as i64 {
            out.add_scaled(&self.basis(top, top, c), &norm);
        }
        out
    }

    /// The central idempotents `1₀ = (1 + K^p)/2` and `1₁ = (1 - K^p)/2`.
    pub fn idempotents(&self) -> Result<[Tensor; 2], QuantumError> {
        self.require(self.variant() != Variant::Small, "U or Ũ")?;
        let k = self.consts();
        let one = self.basis(0, 0, 0);
        let kp = self.basis(0, 0, self.k_exponent(self.p() as i64));
        let half = k.rat(1, 2);
        Ok([one.plus(&kp).scale(&half), one.minus(&kp).scale(&half)])
    }

    /// Multiplies every leg of a tensor on the right by the given idempotents.
    pub fn project(&self, t: &Tensor, degrees: &[usize]) -> Result<Tensor, QuantumError> {
        let idems = self.idempotents()?;
        let mut proj = Tensor::scalar(self.one_scalar());
        for &d in degrees {
            proj = proj.outer(&idems[d]);
        }
        Ok(self.mul(t, &proj))
    }
}
