//! Brute-force constructions used to cross-check the closed forms, and the
//! embeddings `U ⊂ Ũ` and `Ū ≅ U 1₀`.

use gcoalg_core::Tensor;

use crate::error::QuantumError;
use crate::instance::QuantumGroupInstance;
use crate::pbw::AlgebraElement;
use crate::variant::Variant;

impl QuantumGroupInstance {
    /// The Drinfeld element `u = S(R'') R'` computed from the R-matrix.
    pub fn drinfeld_element(&self) -> Result<Tensor, QuantumError> {
        let r = self.r_matrix()?;
        let swapped = self.antipode_on(&r.permute(&[1, 0]), 0);
        Ok(self.multiply_legs(&swapped))
    }

    /// The monodromy `R₂₁ R` computed from the R-matrix.
    pub fn monodromy_from_r(&self) -> Result<Tensor, QuantumError> {
        let r = self.r_matrix()?;
        Ok(self.mul(&r.permute(&[1, 0]), r))
    }

    /// `u K^{p-1}`, which equals the ribbon element when `u` is the Drinfeld
    /// element.
    pub fn ribbon_from_r(&self) -> Result<Tensor, QuantumError> {
        let u = self.drinfeld_element()?;
        Ok(self.mul(&u, &self.basis(0, 0, self.k_exponent(self.p() as i64 - 1))))
    }

    /// `(S ⊗ id)(M₊)` computed from the closed-form M-matrix.
    pub fn copairing_from_m(&self) -> Result<Tensor, QuantumError> {
        Ok(self.antipode_on(&self.m_matrix()?.0, 0))
    }

    /// Rewrites a tensor over `Ũ` supported on even powers of `K̃` as a
    /// tensor over `U`, using `K = K̃^2`.
    pub fn restrict_to_restricted(&self, t: &Tensor) -> Result<Tensor, QuantumError> {
        self.require(self.variant() == Variant::Tilde, "Ũ")?;
        let p = self.p();
        let mut out = Tensor::zero(t.rank());
        for (key, c) in t.iter() {
            let mut new_key = Vec::with_capacity(key.len());
            for &idx in key.iter() {
                let m = self.engine().monomial(idx);
                if m.c % 2 == 1 {
                    return Err(QuantumError::NotHomogeneous(format!("{m} is not in U")));
                }
                new_key.push((m.a * p + m.b) * 2 * p + m.c / 2);
            }
            out.add_term(&new_key, c.clone());
        }
        Ok(out)
    }

    /// Rewrites a tensor over `U` as a tensor over `Ũ`.
    pub fn embed_restricted(&self, t: &Tensor) -> Result<Tensor, QuantumError> {
        self.require(self.variant() == Variant::Tilde, "Ũ")?;
        let p = self.p();
        let mut out = Tensor::zero(t.rank());
        for (key, c) in t.iter() {
            let new_key: Vec<u32> = key
                .iter()
                .map(|&idx| {
                    let (ab, c) = (idx / (2 * p), idx % (2 * p));
                    self.engine().index(ab / p, ab % p, 2 * c as i64)
                })
                .collect();
            out.add_term(&new_key, c.clone());
        }
        Ok(out)
    }

    /// Maps a tensor over `Ū` into `U` legwise by
    /// `Ē^a F̄^b K̄^c ↦ E^a F^b K^c 1₀`.
    pub fn embed_small_tensor(&self, t: &Tensor) -> Result<Tensor, QuantumError> {
        self.require(self.variant() == Variant::Restricted, "U")?;
        let p = self.p();
        let idem = self.idempotents()?[0].clone();
        let images: Vec<Tensor> = (0..p * p * p)
            .map(|idx| {
                let (ab, c) = (idx / p, idx % p);
                self.mul(&self.basis(ab / p, ab % p, c as i64), &idem)
            })
            .collect();
        let mut out = t.clone();
        for leg in 0..t.rank() {
            out = out.map_leg(leg, 1, |x| &images[x as usize]);
        }
        Ok(out)
    }

    /// Maps an element of `Ū` into `U` by `Ē^a F̄^b K̄^c ↦ E^a F^b K^c 1₀`.
    pub fn embed_small(&self, x: &AlgebraElement) -> Result<AlgebraElement, QuantumError> {
        if x.variant() != Variant::Small || x.p() != self.p() {
            return Err(QuantumError::VariantMismatch { expected: format!("Ū at p = {}", self.p()), found: x.variant() });
        }
        let mut t = Tensor::zero(1);
        for (m, c) in x.iter() {
            t.add_term(&[(m.a * self.p() + m.b) * self.p() + m.c], c.clone());
        }
        Ok(self.to_element(&self.embed_small_tensor(&t)?))
    }
}
