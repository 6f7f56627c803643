//! Factorizability through the rank of the Drinfeld map.

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::graded::GradedHopfData;
use crate::linalg::{rank, SparseRow};
use crate::tensor::Tensor;

/// Rank data of the Drinfeld map `f ↦ f(M') M''` of the direct sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrinfeldRank {
    /// Rank of the Drinfeld map.
    pub rank: usize,
    /// Dimension of the direct sum.
    pub dim: usize,
}

impl DrinfeldRank {
    /// True when the Drinfeld map is an isomorphism.
    pub fn is_factorizable(&self) -> bool {
        self.rank == self.dim
    }
}

/// Rank of the Drinfeld map attached to an M-matrix on a basis of size `dim`.
///
/// On the dual basis `δ_x`, the map sends `δ_x` to the sum of the second legs
/// of the terms of `M` whose first leg is `x`, so its rank is the rank of the
/// coefficient matrix of `M`.
pub fn drinfeld_rank(m: &Tensor, dim: usize) -> DrinfeldRank {
    let mut rows: Vec<SparseRow> = vec![SparseRow::new(); dim];
    for (k, c) in m.iter() {
        rows[k[0] as usize].insert(k[1], c.clone());
    }
    DrinfeldRank { rank: rank(rows), dim }
}

/// Tests whether the direct sum of a ribbon Hopf G-coalgebra is factorizable.
///
/// `M_+ = R_21 R` is built from the R-matrix of the direct sum, or read from
/// the stored M-matrix when the data carry no R-matrix.
pub fn is_factorizable(g: &GradedHopfData) -> Result<DrinfeldRank, CoreError> {
    let h = g.direct_sum();
    let m = h.monodromy()?;
    Ok(drinfeld_rank(&m, h.dim()))
}
