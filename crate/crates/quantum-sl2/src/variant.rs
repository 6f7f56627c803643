//! The three algebras and the numerical data distinguishing them.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Which quantum group is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    /// The restricted quantum group `U`, with `K^{2p} = 1`.
    Restricted,
    /// The ribbon extension `Ũ`, with `K̃^{4p} = 1` and `K = K̃^2`.
    Tilde,
    /// The small quantum group `Ū`, with `K̄^p = 1`.
    Small,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Restricted => "U",
            Variant::Tilde => "Ũ",
            Variant::Small => "Ū",
        })
    }
}

impl Variant {
    /// Order of the Cartan generator.
    pub fn cartan_order(self, p: u32) -> u32 {
        match self {
            Variant::Restricted => 2 * p,
            Variant::Tilde => 4 * p,
            Variant::Small => p,
        }
    }

    /// Exponent `w` with `K E K^{-1} = ζ^w E`, where `ζ` generates `Q(ζ_{8p})`.
    pub fn e_weight(self) -> i64 {
        match self {
            Variant::Tilde => 4,
            _ => 8,
        }
    }

    /// Exponent `h` with `[E, F] = (K^h - K^{-h}) / (q - q^{-1})`.
    pub fn commutator_power(self) -> i64 {
        match self {
            Variant::Tilde => 2,
            _ => 1,
        }
    }

    /// Exponent of `ζ` in the eigenvalue of the Cartan generator on the
    /// weight idempotent `e_1`.
    pub fn eigen_step(self, p: u32) -> i64 {
        (8 * p / self.cartan_order(p)) as i64
    }

    /// Shift `s` with `E e_m = e_{m+s} E`.
    pub fn weight_shift(self) -> u32 {
        match self {
            Variant::Small => 1,
            _ => 2,
        }
    }

    /// The Cartan exponent `c` on which the integral is supported.
    pub fn integral_cartan(self, p: u32) -> u32 {
        match self {
            Variant::Tilde => 2 * p - 2,
            _ => p - 1,
        }
    }

    /// Name of the Cartan generator.
    pub fn cartan_name(self) -> &'static str {
        match self {
            Variant::Restricted => "K",
            Variant::Tilde => "K̃",
            Variant::Small => "K̄",
        }
    }
}
