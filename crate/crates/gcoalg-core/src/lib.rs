//! Unimodular ribbon Hopf G-coalgebras over finite abelian groups.
//!
//! Algebras are given by sparse structure tables on a finite basis with
//! coefficients in a cyclotomic field. The crate provides
//!
//! * [`HopfAlgebraData`]: an ordinary Hopf algebra with optional R-matrix,
//!   ribbon element, pivotal element, integral and cointegral;
//! * [`GradedHopfData`]: a Hopf G-coalgebra `{H_α}`, produced by [`split`]
//!   from a G-splitting system and turned back into an algebra by
//!   [`GradedHopfData::direct_sum`];
//! * exhaustive axiom checkers returning an [`AxiomReport`];
//! * the factorizability test [`is_factorizable`].
//!
//! ```
//! use cyclo_field::CycScalar;
//! use gcoalg_core::{check_hopf_axioms, GradedHopfData, HopfAlgebraData, ProductTable, Tensor};
//!
//! // The group algebra of Z/2 on the basis {1, g}.
//! let one = CycScalar::one(1);
//! let mut product = ProductTable::new(2);
//! product.set(0, 0, vec![(0, one.clone())]);
//! product.set(0, 1, vec![(1, one.clone())]);
//! product.set(1, 0, vec![(1, one.clone())]);
//! product.set(1, 1, vec![(0, one.clone())]);
//! let h = HopfAlgebraData {
//!     name: "k[Z2]".into(),
//!     order: 1,
//!     labels: vec!["1".into(), "g".into()],
//!     product,
//!     unit: Tensor::basis(&[0], one.clone()),
//!     coproduct: vec![Tensor::basis(&[0, 0], one.clone()), Tensor::basis(&[1, 1], one.clone())],
//!     counit: vec![one.clone(), one.clone()],
//!     antipode: vec![Tensor::basis(&[0], one.clone()), Tensor::basis(&[1], one.clone())],
//!     r_matrix: None,
//!     m_plus: None,
//!     m_minus: None,
//!     ribbon: None,
//!     ribbon_inverse: None,
//!     pivotal: None,
//!     integral: None,
//!     cointegral: None,
//! };
//! let g = GradedHopfData::trivial(h).unwrap();
//! assert!(check_hopf_axioms(&g).all_passed());
//! ```

mod axioms;
mod error;
mod factorize;
mod graded;
mod group;
mod hopf;
pub mod linalg;
mod table;
mod tensor;

pub use axioms::{check_all, check_hopf_axioms, check_ribbon_axioms, check_unimodular_axioms, AxiomCheck, AxiomReport, Outcome};
pub use error::CoreError;
pub use factorize::{drinfeld_rank, is_factorizable, DrinfeldRank};
pub use graded::{split, GradedHopfData};
pub use group::FiniteAbelianGroup;
pub use hopf::HopfAlgebraData;
pub use table::{ProductTable, Row};
pub use tensor::{Key, Tensor};
