//! Elements of `Q(zeta_N)` in canonical reduced form.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::context::{context, SparseInt};
use crate::error::FieldError;
use crate::rat::Rat;

/// An exact element of the cyclotomic field `Q(zeta_N)`.
///
/// The value is stored as the unique polynomial in `zeta_N` of degree below
/// `phi(N)` that represents it, as a sorted list of nonzero `(power, coefficient)`
/// pairs. Rational scalars may carry `N = 1` and combine freely with any order.
#[derive(Clone)]
pub struct CycScalar {
    n: u32,
    terms: Vec<(u32, Rat)>,
}

fn common_order(a: u32, b: u32) -> u32 {
    if a == b || b == 1 {
        a
    } else if a == 1 {
        b
    } else {
        panic!("cannot combine scalars of cyclotomic orders {a} and {b}")
    }
}

impl CycScalar {
    /// Zero in `Q(zeta_n)`.
    pub fn zero(n: u32) -> CycScalar {
        CycScalar { n, terms: Vec::new() }
    }

    /// One in `Q(zeta_n)`.
    pub fn one(n: u32) -> CycScalar {
        CycScalar::from_rat(n, Rat::ONE)
    }

    /// The rational `r` viewed in `Q(zeta_n)`.
    pub fn from_rat(n: u32, r: Rat) -> CycScalar {
        let terms = if r.is_zero() { Vec::new() } else { vec![(0, r)] };
        CycScalar { n, terms }
    }

    /// The integer `k` viewed in `Q(zeta_n)`.
    pub fn from_int(n: u32, k: i64) -> CycScalar {
        CycScalar::from_rat(n, Rat::from_int(k))
    }

    /// A rational constant that adapts to the order of whatever it meets.
    pub fn rational(r: Rat) -> CycScalar {
        CycScalar::from_rat(1, r)
    }

    /// The primitive root `zeta_n = exp(2 pi i / n)`.
    pub fn zeta(n: u32) -> CycScalar {
        CycScalar::zeta_pow(n, 1)
    }

    /// `zeta_n^k` for any integer `k`.
    pub fn zeta_pow(n: u32, k: i64) -> CycScalar {
        let sp = context(n).zeta_power(k);
        CycScalar { n, terms: sp.iter().map(|(i, c)| (*i, Rat::from_int(*c))).collect() }
    }

    /// Builds a scalar from arbitrary polynomial coefficients in `zeta_n`
    /// (index = power), reducing modulo `Phi_n`.
    pub fn from_coeffs(n: u32, coeffs: &[Rat]) -> CycScalar {
        let ctx = context(n);
        let phi = ctx.degree();
        let mut acc = vec![Rat::ZERO; phi];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let red = if k < 2 * phi { ctx.reduced_power(k) } else { ctx.zeta_power(k as i64) };
            for (i, m) in red {
                acc[*i as usize].add_mul_assign(c, &Rat::from_int(*m));
            }
        }
        CycScalar::from_dense(n, acc)
    }

    fn from_dense(n: u32, dense: Vec<Rat>) -> CycScalar {
        let terms = dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i as u32, c)).collect();
        CycScalar { n, terms }
    }

    /// The cyclotomic order `N` of the field this scalar lives in.
    pub fn order(&self) -> u32 {
        self.n
    }

    /// The nonzero `(power, coefficient)` pairs of the canonical form.
    pub fn terms(&self) -> &[(u32, Rat)] {
        &self.terms
    }

    /// Dense canonical coefficient vector of length `phi(N)`.
    pub fn coeffs(&self) -> Vec<Rat> {
        let mut v = vec![Rat::ZERO; context(self.n).degree()];
        for (i, c) in &self.terms {
            v[*i as usize] = c.clone();
        }
        v
    }

    /// Returns `true` for zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns `true` for one.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// The rational value, if this scalar is rational.
    pub fn as_rational(&self) -> Option<Rat> {
        match self.terms.as_slice() {
            [] => Some(Rat::ZERO),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Re-tags a rational scalar (or one already of order `n`) with order `n`.
    ///
    /// # Panics
    /// Panics if the scalar has a different nontrivial order.
    pub fn with_order(mut self, n: u32) -> CycScalar {
        self.n = common_order(n, self.n);
        self
    }

    /// Multiplies by a rational.
    pub fn scale(&self, r: &Rat) -> CycScalar {
        if r.is_zero() {
            return CycScalar::zero(self.n);
        }
        CycScalar { n: self.n, terms: self.terms.iter().map(|(i, c)| (*i, c * r)).collect() }
    }

    /// Multiplies by `zeta_N^k`.
    pub fn mul_zeta(&self, k: i64) -> CycScalar {
        assert!(self.n != 1 || k == 0, "mul_zeta needs a nontrivial order");
        if self.is_zero() || k.rem_euclid(self.n as i64) == 0 {
            return self.clone();
        }
        self.mul_sparse_int(context(self.n).zeta_power(k))
    }

    fn mul_sparse_int(&self, s: &SparseInt) -> CycScalar {
        let ctx = context(self.n);
        let phi = ctx.degree();
        let mut acc = vec![Rat::ZERO; 2 * phi];
        for (i, a) in &self.terms {
            for (j, m) in s {
                acc[(*i + *j) as usize].add_mul_assign(a, &Rat::from_int(*m));
            }
        }
        CycScalar::reduce_dense(self.n, acc)
    }

    fn reduce_dense(n: u32, mut acc: Vec<Rat>) -> CycScalar {
        let ctx = context(n);
        let phi = ctx.degree();
        for k in (phi..acc.len()).rev() {
            if acc[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut acc[k]);
            for (i, m) in ctx.reduced_power(k) {
                acc[*i as usize].add_mul_assign(&c, &Rat::from_int(*m));
            }
        }
        acc.truncate(phi);
        CycScalar::from_dense(n, acc)
    }

    /// `self += a * b`.
    pub fn add_mul_assign(&mut self, a: &CycScalar, b: &CycScalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let prod = a * b;
        *self += &prod;
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<CycScalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(CycScalar::from_rat(self.n, r.checked_inv().expect("nonzero")));
        }
        // Solve A y = e_0 where column j of A is self * zeta^j.
        let phi = context(self.n).degree();
        let mut rows: Vec<Vec<Rat>> = vec![vec![Rat::ZERO; phi + 1]; phi];
        for j in 0..phi {
            let col = self.mul_sparse_int(&vec![(j as u32, 1)]);
            for (i, c) in col.terms {
                rows[i as usize][j] = c;
            }
        }
        rows[0][phi] = Rat::ONE;
        for col in 0..phi {
            let piv = (col..phi).find(|r| !rows[*r][col].is_zero()).ok_or(FieldError::DivisionByZero)?;
            rows.swap(col, piv);
            let inv = rows[col][col].checked_inv().expect("nonzero pivot");
            for x in rows[col].iter_mut() {
                *x = &*x * &inv;
            }
            let pivot_row = rows[col].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, pv) in row.iter_mut().zip(&pivot_row) {
                    if !pv.is_zero() {
                        *x -= &(&f * pv);
                    }
                }
            }
        }
        let sol: Vec<Rat> = rows.into_iter().map(|mut r| r.pop().expect("augmented column")).collect();
        Ok(CycScalar::from_dense(self.n, sol))
    }

    /// Division `self / other`.
    pub fn div(&self, other: &CycScalar) -> Result<CycScalar, FieldError> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<CycScalar, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(base.powu(e.unsigned_abs()))
    }

    /// Nonnegative integer power.
    pub fn powu(&self, mut e: u64) -> CycScalar {
        let mut out = CycScalar::one(self.n);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        out
    }

    /// Complex conjugation, the automorphism `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> CycScalar {
        let mut acc = CycScalar::zero(self.n);
        for (i, c) in &self.terms {
            acc += &CycScalar::zeta_pow(self.n, -(*i as i64)).scale(c);
        }
        acc
    }

    /// Floating-point value at `zeta_N = exp(2 pi i / N)` together with a
    /// bound on the absolute rounding error of each component.
    pub fn to_complex_with_error(&self) -> ((f64, f64), f64) {
        let mut re = 0.0f64;
        let mut im = 0.0f64;
        let mut mass = 0.0f64;
        for (k, c) in &self.terms {
            let ang = 2.0 * std::f64::consts::PI * (*k as f64) / (self.n as f64);
            let cf = c.to_f64();
            re += cf * ang.cos();
            im += cf * ang.sin();
            mass += cf.abs();
        }
        let bound = (self.terms.len() as f64 + 8.0) * 4.0 * f64::EPSILON * mass.max(f64::MIN_POSITIVE);
        ((re, im), bound)
    }

    /// Floating-point value at `zeta_N = exp(2 pi i / N)` accurate to `10^-digits`.
    pub fn to_complex(&self, digits: u32) -> Result<(f64, f64), FieldError> {
        let (z, bound) = self.to_complex_with_error();
        let target = 10f64.powi(-(digits as i32));
        if bound < target {
            Ok(z)
        } else {
            Err(FieldError::PrecisionUnavailable { digits, bound })
        }
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, o: &Self) -> bool {
        self.terms == o.terms && (self.n == o.n || self.as_rational().is_some())
    }
}

impl Eq for CycScalar {}

impl Hash for CycScalar {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.terms.hash(h);
    }
}

impl Default for CycScalar {
    fn default() -> Self {
        CycScalar::zero(1)
    }
}

impl From<Rat> for CycScalar {
    fn from(r: Rat) -> Self {
        CycScalar::rational(r)
    }
}

impl From<i64> for CycScalar {
    fn from(k: i64) -> Self {
        CycScalar::rational(Rat::from_int(k))
    }
}

/// Product of two short term lists, reduced term by term.
fn mul_sparse(n: u32, a: &[(u32, Rat)], b: &[(u32, Rat)]) -> CycScalar {
    let ctx = context(n);
    let phi = ctx.degree();
    let mut out: Vec<(u32, Rat)> = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a {
        for (j, y) in b {
            let k = (*i + *j) as usize;
            let prod = x * y;
            if k < phi {
                out.push((k as u32, prod));
            } else {
                for (t, m) in ctx.reduced_power(k) {
                    out.push((*t, &prod * &Rat::from_int(*m)));
                }
            }
        }
    }
    out.sort_unstable_by_key(|(k, _)| *k);
    let mut terms: Vec<(u32, Rat)> = Vec::with_capacity(out.len());
    for (k, c) in out {
        match terms.last_mut() {
            Some((last, acc)) if *last == k => *acc += &c,
            _ => terms.push((k, c)),
        }
    }
    terms.retain(|(_, c)| !c.is_zero());
    CycScalar { n, terms }
}

fn merge_add(n: u32, a: &[(u32, Rat)], b: &[(u32, Rat)], negate_b: bool) -> CycScalar {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
            out.push((b[j].0, c));
            j += 1;
        } else {
            let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
            if !c.is_zero() {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    CycScalar { n, terms: out }
}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, o: &CycScalar) -> CycScalar {
        merge_add(common_order(self.n, o.n), &self.terms, &o.terms, false)
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, o: &CycScalar) -> CycScalar {
        merge_add(common_order(self.n, o.n), &self.terms, &o.terms, true)
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, o: &CycScalar) -> CycScalar {
        let n = common_order(self.n, o.n);
        if self.is_zero() || o.is_zero() {
            return CycScalar::zero(n);
        }
        if let Some(r) = self.as_rational() {
            return o.scale(&r).with_order(n);
        }
        if let Some(r) = o.as_rational() {
            return self.scale(&r).with_order(n);
        }
        let phi = context(n).degree();
        if self.terms.len() * o.terms.len() * 4 <= phi {
            return mul_sparse(n, &self.terms, &o.terms);
        }
        let mut acc = vec![Rat::ZERO; 2 * phi - 1];
        for (i, a) in &self.terms {
            for (j, b) in &o.terms {
                acc[(*i + *j) as usize].add_mul_assign(a, b);
            }
        }
        CycScalar::reduce_dense(n, acc)
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { n: self.n, terms: self.terms.iter().map(|(i, c)| (*i, -c)).collect() }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, o: CycScalar) -> CycScalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, o: &CycScalar) -> CycScalar {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<CycScalar> for &'a CycScalar {
            type Output = CycScalar;
            fn $m(self, o: CycScalar) -> CycScalar {
                self.$m(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, o: &CycScalar) {
        if o.is_zero() {
            self.n = common_order(self.n, o.n);
            return;
        }
        *self = &*self + o;
    }
}

impl AddAssign<CycScalar> for CycScalar {
    fn add_assign(&mut self, o: CycScalar) {
        *self += &o;
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, o: &CycScalar) {
        *self = &*self - o;
    }
}

impl MulAssign<&CycScalar> for CycScalar {
    fn mul_assign(&mut self, o: &CycScalar) {
        *self = &*self * o;
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
