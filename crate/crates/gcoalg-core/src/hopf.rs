//! Ungraded Hopf algebras given by explicit structure tables.

use cyclo_field::CycScalar;
use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::table::ProductTable;
use crate::tensor::Tensor;

/// A finite-dimensional Hopf algebra on the basis `0..dim`, with optional
/// ribbon and unimodular structure.
///
/// All tensors use global basis indices. The coproduct, antipode and counit
/// are stored on basis elements and extended linearly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfAlgebraData {
    /// Human-readable name.
    pub name: String,
    /// Cyclotomic order of the coefficient field.
    pub order: u32,
    /// Names of the basis elements.
    pub labels: Vec<String>,
    /// Multiplication table.
    pub product: ProductTable,
    /// Unit element.
    pub unit: Tensor,
    /// Coproduct of each basis element (rank 2).
    pub coproduct: Vec<Tensor>,
    /// Counit of each basis element.
    pub counit: Vec<CycScalar>,
    /// Antipode of each basis element (rank 1).
    pub antipode: Vec<Tensor>,
    /// Universal R-matrix, when the algebra is quasitriangular.
    pub r_matrix: Option<Tensor>,
    /// Explicit M-matrix `R_21 R`, for algebras carrying it without an R-matrix.
    pub m_plus: Option<Tensor>,
    /// Explicit inverse M-matrix.
    pub m_minus: Option<Tensor>,
    /// Ribbon element.
    pub ribbon: Option<Tensor>,
    /// Inverse ribbon element.
    pub ribbon_inverse: Option<Tensor>,
    /// Pivotal element.
    pub pivotal: Option<Tensor>,
    /// Left integral, as its values on the basis.
    pub integral: Option<Vec<CycScalar>>,
    /// Two-sided cointegral.
    pub cointegral: Option<Tensor>,
}

impl HopfAlgebraData {
    /// Dimension of the algebra.
    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    /// Zero scalar of the coefficient field.
    pub fn zero(&self) -> CycScalar {
        CycScalar::zero(self.order)
    }

    /// One in the coefficient field.
    pub fn one(&self) -> CycScalar {
        CycScalar::one(self.order)
    }

    /// Checks that every table has the size of the basis.
    pub fn check_dimensions(&self) -> Result<(), CoreError> {
        let d = self.dim();
        let bad = |what: &str, n: usize| Err(CoreError::DimensionMismatch(format!("{what} has {n} entries, basis has {d}")));
        if self.labels.len() != d {
            return bad("labels", self.labels.len());
        }
        if self.coproduct.len() != d {
            return bad("coproduct", self.coproduct.len());
        }
        if self.counit.len() != d {
            return bad("counit", self.counit.len());
        }
        if self.antipode.len() != d {
            return bad("antipode", self.antipode.len());
        }
        if let Some(l) = &self.integral {
            if l.len() != d {
                return bad("integral", l.len());
            }
        }
        let in_range = |t: &Tensor, rank: usize, what: &str| -> Result<(), CoreError> {
            if t.rank() != rank {
                return Err(CoreError::DimensionMismatch(format!("{what} has rank {} instead of {rank}", t.rank())));
            }
            if t.iter().any(|(k, _)| k.iter().any(|i| *i as usize >= d)) {
                return Err(CoreError::DimensionMismatch(format!("{what} uses an index outside the basis")));
            }
            Ok(())
        };
        in_range(&self.unit, 1, "unit")?;
        for t in &self.coproduct {
            in_range(t, 2, "coproduct")?;
        }
        for t in &self.antipode {
            in_range(t, 1, "antipode")?;
        }
        for (t, r, w) in [
            (&self.r_matrix, 2, "R-matrix"),
            (&self.m_plus, 2, "M-matrix"),
            (&self.m_minus, 2, "inverse M-matrix"),
            (&self.ribbon, 1, "ribbon element"),
            (&self.ribbon_inverse, 1, "inverse ribbon element"),
            (&self.pivotal, 1, "pivotal element"),
            (&self.cointegral, 1, "cointegral"),
        ] {
            if let Some(t) = t {
                in_range(t, r, w)?;
            }
        }
        Ok(())
    }

    /// A basis element as a rank-1 tensor.
    pub fn basis_element(&self, x: u32) -> Tensor {
        Tensor::basis(&[x], self.one())
    }

    /// `1 (x) ... (x) 1` with `rank` factors.
    pub fn unit_tensor(&self, rank: usize) -> Tensor {
        let mut t = Tensor::scalar(self.one());
        for _ in 0..rank {
            t = t.outer(&self.unit);
        }
        t
    }

    /// Legwise product in `H^{(x) r}`.
    pub fn mul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        self.product.multiply(a, b)
    }

    /// Multiplies the two legs of a rank-2 tensor, `x (x) y -> xy`.
    pub fn multiply_legs(&self, t: &Tensor) -> Tensor {
        assert_eq!(t.rank(), 2, "multiply_legs expects a rank-2 tensor");
        let mut out = Tensor::zero(1);
        for (k, c) in t.iter() {
            for (z, d) in self.product.basis_product(k[0], k[1]) {
                out.add_term(&[*z], c * d);
            }
        }
        out
    }

    /// Applies the coproduct to leg `leg`, splitting it into two adjacent legs.
    pub fn coproduct_on(&self, t: &Tensor, leg: usize) -> Tensor {
        t.map_leg(leg, 2, |x| &self.coproduct[x as usize])
    }

    /// Coproduct of a rank-1 tensor.
    pub fn delta(&self, x: &Tensor) -> Tensor {
        self.coproduct_on(x, 0)
    }

    /// Applies the antipode to leg `leg`.
    pub fn antipode_on(&self, t: &Tensor, leg: usize) -> Tensor {
        t.map_leg(leg, 1, |x| &self.antipode[x as usize])
    }

    /// Applies the counit to leg `leg`.
    pub fn counit_on(&self, t: &Tensor, leg: usize) -> Tensor {
        t.contract_leg(leg, |x| self.counit[x as usize].clone())
    }

    /// Counit of a rank-1 tensor.
    pub fn epsilon(&self, x: &Tensor) -> CycScalar {
        x.evaluate(self.order, |k| self.counit[k as usize].clone())
    }

    /// The left integral applied to a rank-1 tensor.
    pub fn lambda(&self, x: &Tensor) -> Result<CycScalar, CoreError> {
        let l = self.integral.as_ref().ok_or(CoreError::Missing("integral"))?;
        Ok(x.evaluate(self.order, |k| l[k as usize].clone()))
    }

    /// Applies the left integral to leg `leg`.
    pub fn lambda_on(&self, t: &Tensor, leg: usize) -> Result<Tensor, CoreError> {
        let l = self.integral.as_ref().ok_or(CoreError::Missing("integral"))?;
        Ok(t.contract_leg(leg, |k| l[k as usize].clone()))
    }

    /// The M-matrix: `R_21 R` when an R-matrix is present, else the stored one.
    pub fn monodromy(&self) -> Result<Tensor, CoreError> {
        if let Some(r) = &self.r_matrix {
            Ok(self.mul(&r.permute(&[1, 0]), r))
        } else {
            self.m_plus.clone().ok_or(CoreError::Missing("R-matrix or M-matrix"))
        }
    }

    /// The Drinfeld element `u = S(R'') R'`.
    pub fn drinfeld_element(&self) -> Result<Tensor, CoreError> {
        let r = self.r_matrix.as_ref().ok_or(CoreError::Missing("R-matrix"))?;
        let mut u = Tensor::zero(1);
        for (k, c) in r.iter() {
            let s = &self.antipode[k[1] as usize];
            u.add_scaled(&self.mul(s, &self.basis_element(k[0])), c);
        }
        Ok(u)
    }
}
