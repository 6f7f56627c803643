//! Named constants of `Q(zeta_{8p})` and the quadratic Gauss sums that define `sqrt(p)`.

use crate::rat::Rat;
use crate::scalar::CycScalar;

/// Scalars attached to an even root of unity `q` of order `2p`, realized in `Q(zeta_{8p})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedConstants {
    /// The parameter `p`.
    pub p: u32,
    /// The field order `N = 8p`.
    pub n: u32,
    /// `zeta_N`.
    pub zeta: CycScalar,
    /// `q = zeta^4`, of order `2p`.
    pub q: CycScalar,
    /// `t = zeta^2`, of order `4p`, with `t^2 = q`.
    pub t: CycScalar,
    /// `i = zeta^{2p}`.
    pub i: CycScalar,
    /// The positive square root of `p`.
    pub sqrt_p: CycScalar,
    /// The positive square root of `2`.
    pub sqrt_2: CycScalar,
    /// The positive square root of `2p`.
    pub sqrt_2p: CycScalar,
}

/// The field order `8p` used for parameter `p`.
pub fn field_order(p: u32) -> u32 {
    8 * p
}

/// `sum_{n=0}^{4p-1} t^{sign * n^2 + d * n}` with `t = zeta_{8p}^2`.
pub fn gauss_sum(p: u32, sign: i64, d: i64) -> CycScalar {
    let n = field_order(p);
    let mut acc = CycScalar::zero(n);
    for m in 0..(4 * p as i64) {
        acc += &CycScalar::zeta_pow(n, 2 * (sign * m * m + d * m));
    }
    acc
}

/// Closed form of [`gauss_sum`]: `2 sqrt(p) (1 + sign*i) t^{-sign d^2/4}` for even `d`, zero for odd `d`.
pub fn gauss_sum_closed_form(p: u32, sign: i64, d: i64) -> CycScalar {
    let c = named_constants(p);
    if d.rem_euclid(2) == 1 {
        return CycScalar::zero(c.n);
    }
    let h = d / 2;
    let one_pm_i = &CycScalar::one(c.n) + &c.i.scale(&Rat::from_int(sign));
    let t_pow = CycScalar::zeta_pow(c.n, 2 * (-sign * h * h));
    &(&c.sqrt_p.scale(&Rat::from_int(2)) * &one_pm_i) * &t_pow
}

/// Builds the named constants for `p >= 2`.
///
/// # Panics
/// Panics if `p < 2`.
pub fn named_constants(p: u32) -> NamedConstants {
    assert!(p >= 2, "p must be at least 2");
    let n = field_order(p);
    let zeta = CycScalar::zeta(n);
    let q = CycScalar::zeta_pow(n, 4);
    let t = CycScalar::zeta_pow(n, 2);
    let i = CycScalar::zeta_pow(n, 2 * p as i64);
    let two_one_plus_i = (&CycScalar::one(n) + &i).scale(&Rat::from_int(2));
    let sqrt_p = gauss_sum(p, 1, 0).div(&two_one_plus_i).expect("1 + i is nonzero");
    let sqrt_2 = &CycScalar::zeta_pow(n, p as i64) + &CycScalar::zeta_pow(n, -(p as i64));
    let sqrt_2p = &sqrt_p * &sqrt_2;
    NamedConstants { p, n, zeta, q, t, i, sqrt_p, sqrt_2, sqrt_2p }
}
