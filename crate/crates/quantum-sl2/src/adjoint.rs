//! The adjoint action and the transmuted coproduct and antipodes.

use gcoalg_core::Tensor;

use crate::error::QuantumError;
use crate::instance::QuantumGroupInstance;
use crate::pbw::AlgebraElement;

impl QuantumGroupInstance {
    /// `x ▷ y = x₍₁₎ y S(x₍₂₎)` on rank-1 tensors.
    pub fn adjoint_tensor(&self, x: &Tensor, y: &Tensor) -> Tensor {
        let dx = self.coproduct_on(x, 0);
        let mut out = Tensor::zero(1);
        for (k, c) in dx.iter() {
            let u = Tensor::basis(&[k[0]], c.clone());
            let w = self.engine().antipode(k[1]);
            out.add_assign(&self.mul_all(&[&u, y, w]));
        }
        out
    }

    /// The adjoint left action `x ▷ y`.
    pub fn adjoint_action(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement, QuantumError> {
        self.product(x, &self.one())?;
        self.product(y, &self.one())?;
        Ok(self.to_element(&self.adjoint_tensor(&self.to_tensor(x), &self.to_tensor(y))))
    }

    /// Applies `θ ▷ -` for each term `θ' ⊗ θ''` of the quasi-R-matrix to a
    /// basis monomial `y`, returning `(Γ-degree, θ' ▷ y, θ'')` triples.
    fn theta_actions(&self, y: u32) -> Vec<(i64, Tensor, Tensor)> {
        let m = self.engine().monomial(y);
        let theta = self.quasi_r_matrix();
        let ybasis = Tensor::basis(&[y], self.one_scalar());
        let mut out = Vec::new();
        for (k, c) in theta.iter() {
            let first = self.engine().monomial(k[0]);
            let acted = self.adjoint_tensor(&Tensor::basis(&[k[0]], c.clone()), &ybasis);
            if acted.is_zero() {
                continue;
            }
            let degree = first.a as i64 + m.a as i64 - m.b as i64;
            out.push((degree, acted, Tensor::basis(&[k[1]], self.one_scalar())));
        }
        out
    }

    /// The transmuted coproduct
    /// `x ↦ x₍₁₎ S(Θ'') K^{-|Θ' ▷ x₍₂₎|} ⊗ (Θ' ▷ x₍₂₎)`.
    pub fn transmuted_coproduct(&self, x: &Tensor) -> Tensor {
        let dx = self.coproduct_on(x, 0);
        let mut out = Tensor::zero(2);
        for (k, c) in dx.iter() {
            let first = Tensor::basis(&[k[0]], c.clone());
            for (deg, acted, second) in self.theta_actions(k[1]) {
                let left = self.mul_all(&[&first, &self.antipode_on(&second, 0), &self.basis(0, 0, self.k_exponent(-deg))]);
                out.add_assign(&left.outer(&acted));
            }
        }
        out
    }

    /// The transmuted antipode `x ↦ K^{|Θ' ▷ x|} Θ'' S(Θ' ▷ x)`.
    pub fn transmuted_antipode(&self, x: &Tensor) -> Tensor {
        let mut out = Tensor::zero(1);
        for (k, c) in x.iter() {
            for (deg, acted, second) in self.theta_actions(k[0]) {
                let term = self.mul_all(&[&self.basis(0, 0, self.k_exponent(deg)), &second, &self.antipode_on(&acted, 0)]);
                out.add_scaled(&term, c);
            }
        }
        out
    }

    /// The inverse transmuted antipode `x ↦ S^{-1}(Θ' ▷ x) K^{|Θ' ▷ x|} Θ''`.
    pub fn transmuted_antipode_inverse(&self, x: &Tensor) -> Tensor {
        let mut out = Tensor::zero(1);
        for (k, c) in x.iter() {
            for (deg, acted, second) in self.theta_actions(k[0]) {
                let term = self.mul_all(&[&self.antipode_inverse_on(&acted, 0), &self.basis(0, 0, self.k_exponent(deg)), &second]);
                out.add_scaled(&term, c);
            }
        }
        out
    }

    /// The transmuted coproduct built from the full R-matrix,
    /// `x ↦ x₍₁₎ S(R'') ⊗ (R' ▷ x₍₂₎)`, defined on `Ũ` and `Ū`.
    pub fn transmuted_coproduct_via_r(&self, x: &Tensor) -> Result<Tensor, QuantumError> {
        let r = self.r_matrix()?;
        let dx = self.coproduct_on(x, 0);
        let mut out = Tensor::zero(2);
        for (k, c) in dx.iter() {
            let first = Tensor::basis(&[k[0]], c.clone());
            let second = Tensor::basis(&[k[1]], self.one_scalar());
            for (rk, rc) in r.iter() {
                let acted = self.adjoint_tensor(&Tensor::basis(&[rk[0]], rc.clone()), &second);
                if acted.is_zero() {
                    continue;
                }
                let left = self.mul(&first, self.engine().antipode(rk[1]));
                out.add_assign(&left.outer(&acted));
            }
        }
        Ok(out)
    }

    /// The transmuted antipode built from the full R-matrix,
    /// `x ↦ R'' S(R' ▷ x)`, defined on `Ũ` and `Ū`.
    pub fn transmuted_antipode_via_r(&self, x: &Tensor) -> Result<Tensor, QuantumError> {
        let r = self.r_matrix()?;
        let mut out = Tensor::zero(1);
        for (rk, rc) in r.iter() {
            let acted = self.adjoint_tensor(&Tensor::basis(&[rk[0]], rc.clone()), x);
            if acted.is_zero() {
                continue;
            }
            out.add_assign(&self.mul(&Tensor::basis(&[rk[1]], self.one_scalar()), &self.antipode_on(&acted, 0)));
        }
        Ok(out)
    }
}
