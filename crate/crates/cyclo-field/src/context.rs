//! Per-order reduction data for `Q(zeta_N)`.
//!
//! A context stores the cyclotomic polynomial `Phi_N` and the reductions of
//! low powers of `zeta` modulo it. Contexts are built once per order and
//! leaked into a process-wide registry, so lookups return `&'static` data.

use std::cell::Cell;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// A sparse integer polynomial in the reduced basis: `(power, coefficient)` pairs.
pub type SparseInt = Vec<(u32, i64)>;

/// Reduction data for one cyclotomic order `N`.
#[derive(Debug)]
pub struct CycloContext {
    n: u32,
    phi: usize,
    poly: Vec<i64>,
    /// `powers[k]` is `x^k mod Phi_N` for `k < 2 * phi`.
    powers: Vec<SparseInt>,
    /// `zeta[k]` is `zeta^k` reduced, for `k < N`.
    zeta: Vec<SparseInt>,
}

impl CycloContext {
    fn build(n: u32) -> CycloContext {
        assert!(n >= 1, "cyclotomic order must be positive");
        let poly = cyclotomic_polynomial(n);
        let phi = poly.len() - 1;
        let mut powers: Vec<SparseInt> = Vec::with_capacity(2 * phi);
        let mut cur = vec![0i64; phi.max(1)];
        if phi == 0 {
            unreachable!("Phi_N has positive degree");
        }
        cur[0] = 1;
        for _ in 0..(2 * phi).max(n as usize) {
            powers.push(to_sparse(&cur));
            // multiply by x and reduce the overflow coefficient with x^phi = -sum c_i x^i
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for (i, c) in poly.iter().take(phi).enumerate() {
                    cur[i] -= top * c;
                }
            }
        }
        let zeta = powers[..n as usize].to_vec();
        powers.truncate(2 * phi);
        CycloContext { n, phi, poly, powers, zeta }
    }

    /// The order `N`.
    pub fn order(&self) -> u32 {
        self.n
    }

    /// Euler's totient `phi(N)`, the field degree.
    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Coefficients of `Phi_N`, lowest degree first.
    pub fn polynomial(&self) -> &[i64] {
        &self.poly
    }

    /// `x^k mod Phi_N` for `k < 2 * phi(N)`.
    pub fn reduced_power(&self, k: usize) -> &SparseInt {
        &self.powers[k]
    }

    /// `zeta^k` in the reduced basis, for any integer `k`.
    pub fn zeta_power(&self, k: i64) -> &SparseInt {
        &self.zeta[k.rem_euclid(self.n as i64) as usize]
    }
}

fn to_sparse(v: &[i64]) -> SparseInt {
    v.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| (i as u32, *c)).collect()
}

/// Computes `Phi_n` with integer coefficients, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_divide(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let lead = den[dn];
    debug_assert!(lead == 1 || lead == -1);
    let qn = num.len() - 1 - dn;
    let mut q = vec![0i64; qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn] / lead;
        q[i] = c;
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|c| *c == 0), "inexact cyclotomic division");
    q
}

type Registry = Mutex<HashMap<u32, &'static CycloContext>>;

fn registry() -> &'static Registry {
    static REG: OnceLock<Registry> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

thread_local! {
    static LAST: Cell<Option<&'static CycloContext>> = const { Cell::new(None) };
}

/// Returns the shared context for order `n`, building it on first use.
pub fn context(n: u32) -> &'static CycloContext {
    if let Some(c) = LAST.with(|l| l.get()) {
        if c.n == n {
            return c;
        }
    }
    let ctx = {
        let mut map = registry().lock().expect("context registry poisoned");
        *map.entry(n).or_insert_with(|| Box::leak(Box::new(CycloContext::build(n))))
    };
    LAST.with(|l| l.set(Some(ctx)));
    ctx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(24), vec![1, 0, 0, 0, -1, 0, 0, 0, 1]);
    }

    #[test]
    fn degrees_are_totients() {
        for (n, phi) in [(16, 8), (24, 8), (32, 16), (40, 16), (48, 16), (105, 48)] {
            assert_eq!(context(n).degree(), phi);
        }
    }

    #[test]
    fn zeta_to_the_n_is_one() {
        let c = context(24);
        assert_eq!(c.zeta_power(24), &vec![(0, 1)]);
        assert_eq!(c.zeta_power(-1), c.zeta_power(23));
    }
}
