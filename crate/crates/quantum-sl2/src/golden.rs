//! A serializable bundle of every closed-form structure element of an
//! instance, used for golden files.

use std::collections::BTreeMap;

use gcoalg_core::Tensor;
use serde::{Deserialize, Serialize};

use crate::error::QuantumError;
use crate::instance::QuantumGroupInstance;
use crate::variant::Variant;

/// Named structure elements of one instance, keyed by PBW basis indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormBundle {
    /// The algebra.
    pub variant: Variant,
    /// The parameter `p`.
    pub p: u32,
    /// Names of the PBW basis monomials, by index.
    pub labels: Vec<String>,
    /// The elements, by name.
    pub elements: BTreeMap<String, Tensor>,
}

impl QuantumGroupInstance {
    /// Collects the quasi-R-matrix, Cartan part, R-matrix, ribbon elements,
    /// M-matrices, copairing, pivotal element, cointegral and (for even `p`)
    /// the graded pieces.
    pub fn closed_form_bundle(&self) -> Result<ClosedFormBundle, QuantumError> {
        let mut e = BTreeMap::new();
        e.insert("theta".to_string(), self.quasi_r_matrix());
        if self.variant() != Variant::Restricted {
            e.insert("diagonal".to_string(), self.diagonal_part()?);
            e.insert("r_matrix".to_string(), self.r_matrix()?.clone());
        }
        let even = self.p() % 2 == 0;
        if self.variant() != Variant::Small || even {
            let (vp, vm) = self.ribbon_tensors()?;
            e.insert("v_plus".to_string(), vp.clone());
            e.insert("v_minus".to_string(), vm.clone());
            let (mp, mm) = self.m_matrix()?;
            e.insert("m_plus".to_string(), mp.clone());
            e.insert("m_minus".to_string(), mm.clone());
            e.insert("w_plus".to_string(), self.copairing()?.clone());
        }
        e.insert("pivotal".to_string(), self.pivotal_tensor());
        e.insert("cointegral".to_string(), self.cointegral_tensor());
        if self.variant() != Variant::Small {
            let idems = self.idempotents()?;
            e.insert("idempotent_0".to_string(), idems[0].clone());
            e.insert("idempotent_1".to_string(), idems[1].clone());
            if even {
                for alpha in 0..2 {
                    e.insert(format!("v_plus_1_{alpha}"), self.graded_ribbon(alpha, false)?);
                    e.insert(format!("v_minus_1_{alpha}"), self.graded_ribbon(alpha, true)?);
                    for beta in 0..2 {
                        e.insert(format!("w_plus_1_{alpha}_1_{beta}"), self.graded_copairing(alpha, beta)?);
                    }
                }
            }
        }
        Ok(ClosedFormBundle { variant: self.variant(), p: self.p(), labels: self.engine().labels(), elements: e })
    }
}
