//! Quantum numbers and normalization constants in `Q(ζ_{8p})`.

use cyclo_field::{named_constants, CycScalar, NamedConstants, Rat};

/// Scalars shared by all three algebras at a fixed `p`.
#[derive(Clone, Debug)]
pub struct QConstants {
    /// The parameter `p`.
    pub p: u32,
    /// Field order `8p`.
    pub n: u32,
    /// Named constants `q`, `t`, `i`, `√p`, `√2`, `√2p`.
    pub named: NamedConstants,
    /// `{1} = q - q^{-1}`.
    pub brace_one: CycScalar,
    /// `{1}^{-1}`.
    pub brace_one_inv: CycScalar,
    /// `[k]!` for `0 <= k < p`.
    pub factorial: Vec<CycScalar>,
    /// `1 / [k]!` for `0 <= k < p`.
    pub factorial_inv: Vec<CycScalar>,
    /// `p' = p / gcd(p, 2)`.
    pub p_prime: u32,
    /// `√p'`.
    pub sqrt_p_prime: CycScalar,
}

impl QConstants {
    /// Builds the constants for `p >= 2`.
    pub fn new(p: u32) -> QConstants {
        let named = named_constants(p);
        let n = named.n;
        let brace_one = &named.q - &CycScalar::zeta_pow(n, -4);
        let brace_one_inv = brace_one.inv().expect("q is not ±1");
        let mut factorial = vec![CycScalar::one(n)];
        for k in 1..p as i64 {
            let bracket = &(&CycScalar::zeta_pow(n, 4 * k) - &CycScalar::zeta_pow(n, -4 * k)) * &brace_one_inv;
            let next = &factorial[(k - 1) as usize] * &bracket;
            factorial.push(next);
        }
        let factorial_inv = factorial.iter().map(|f| f.inv().expect("[k]! is nonzero for k < p")).collect();
        let p_prime = if p % 2 == 0 { p / 2 } else { p };
        let sqrt_p_prime = if p % 2 == 0 { named.sqrt_2p.scale(&Rat::new(1, 2)) } else { named.sqrt_p.clone() };
        QConstants { p, n, named, brace_one, brace_one_inv, factorial, factorial_inv, p_prime, sqrt_p_prime }
    }

    /// `ζ^k`.
    pub fn zeta(&self, k: i64) -> CycScalar {
        CycScalar::zeta_pow(self.n, k)
    }

    /// `q^k`.
    pub fn q(&self, k: i64) -> CycScalar {
        self.zeta(4 * k)
    }

    /// `t^k`.
    pub fn t(&self, k: i64) -> CycScalar {
        self.zeta(2 * k)
    }

    /// `i^k`.
    pub fn i(&self, k: i64) -> CycScalar {
        self.zeta(2 * self.p as i64 * k)
    }

    /// The integer `k` as a scalar.
    pub fn int(&self, k: i64) -> CycScalar {
        CycScalar::from_int(self.n, k)
    }

    /// The rational `num / den` as a scalar.
    pub fn rat(&self, num: i64, den: i64) -> CycScalar {
        CycScalar::from_rat(self.n, Rat::new(num, den))
    }

    /// `{k} = q^k - q^{-k}`.
    pub fn brace(&self, k: i64) -> CycScalar {
        &self.q(k) - &self.q(-k)
    }

    /// `[k] = {k} / {1}`.
    pub fn bracket(&self, k: i64) -> CycScalar {
        &self.brace(k) * &self.brace_one_inv
    }

    /// `{±1}^k` for `sign = ±1`.
    pub fn brace_unit_pow(&self, sign: i64, k: u32) -> CycScalar {
        let b = self.brace_one.powu(k as u64);
        if sign < 0 && k % 2 == 1 {
            -b
        } else {
            b
        }
    }

    /// `[p-1]! / (i^{p-1} {1}^{p-1})`, the common factor of the integrals.
    pub fn integral_core(&self) -> CycScalar {
        let p = self.p as i64;
        let denom = &self.i(p - 1) * &self.brace_one.powu((p - 1) as u64);
        self.factorial[(p - 1) as usize].div(&denom).expect("nonzero")
    }
}
