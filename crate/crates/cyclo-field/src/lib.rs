//! Exact arithmetic in cyclotomic fields.
//!
//! [`CycScalar`] represents an element of `Q(zeta_N)` as its unique
//! polynomial in `zeta_N` of degree below `phi(N)`, so scalar equality is
//! coefficient equality. Coefficients are exact rationals ([`Rat`]) that stay
//! in machine words until they outgrow them.
//!
//! ```
//! use cyclo_field::{named_constants, CycScalar};
//!
//! let c = named_constants(2);
//! assert_eq!(c.sqrt_p.powu(2), CycScalar::from_int(c.n, 2));
//! assert_eq!(c.t.powu(8), CycScalar::one(c.n));
//! let x: CycScalar = "(1 - z^3)/2 [N=16]".parse().unwrap();
//! assert_eq!(x.to_string(), "(1 - z^3)/2 [N=16]");
//! ```

mod constants;
mod context;
mod error;
mod rat;
mod scalar;
mod text;

pub use constants::{field_order, gauss_sum, gauss_sum_closed_form, named_constants, NamedConstants};
pub use context::{context, cyclotomic_polynomial, CycloContext};
pub use error::FieldError;
pub use rat::Rat;
pub use scalar::CycScalar;
