//! Quantum `sl2` at a root of unity `q` of even order `2p`, in three forms:
//! the restricted quantum group `U`, its ribbon extension `Ũ` and the small
//! quantum group `Ū`.
//!
//! Elements are exact linear combinations of PBW monomials `E^a F^b K^c` over
//! `Q(ζ_{8p})`, multiplied by rewriting with the defining relations. The
//! closed-form structure elements (R-matrix, ribbon elements, M-matrix,
//! copairing, integral and cointegral) are provided together with
//! brute-force constructions that reproduce them, and the algebras export
//! structure tables to `gcoalg-core`, where `U` and `Ũ` split along the
//! central idempotents `1₀, 1₁` into Hopf `Z/2Z`-coalgebras.
//!
//! ```
//! use quantum_sl2::QuantumGroupInstance;
//!
//! let u = QuantumGroupInstance::restricted(2).unwrap();
//! let ef = u.product(&u.e(), &u.f()).unwrap();
//! let fe = u.product(&u.f(), &u.e()).unwrap();
//! // [E, F] = (K - K^{-1}) / (q - q^{-1})
//! let k = u.consts();
//! let expected = u.k().minus(&u.element(0, 0, -1)).scale(&k.brace_one_inv);
//! assert_eq!(ef.minus(&fe), expected);
//! ```

mod adjoint;
mod closed;
pub mod error;
mod golden;
mod graded;
mod instance;
mod oracle;
pub mod pbw;
pub mod scalars;
mod structure;
pub mod variant;

pub use error::QuantumError;
pub use golden::ClosedFormBundle;
pub use graded::{Gradings, LambdaVTable};
pub use instance::QuantumGroupInstance;
pub use pbw::{AlgebraElement, PBWMonomial, PbwEngine};
pub use scalars::QConstants;
pub use structure::IdempotentBasis;
pub use variant::Variant;
