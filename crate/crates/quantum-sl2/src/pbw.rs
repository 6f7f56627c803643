//! PBW monomials, algebra elements, and normal ordering by rewriting.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use cyclo_field::CycScalar;
use gcoalg_core::{Key, Tensor};
use serde::{Deserialize, Serialize};

use crate::scalars::QConstants;
use crate::variant::Variant;

/// A PBW monomial `E^a F^b K^c` (with `K̃` or `K̄` in the other variants).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PBWMonomial {
    /// Which algebra the monomial lives in.
    pub variant: Variant,
    /// Exponent of `E`, in `0..p`.
    pub a: u32,
    /// Exponent of `F`, in `0..p`.
    pub b: u32,
    /// Exponent of the Cartan generator, in `0..cartan_order`.
    pub c: u32,
}

impl fmt::Display for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("E", self.a), ("F", self.b), (self.variant.cartan_name(), self.c)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// A sparse linear combination of PBW monomials of one algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraElement {
    variant: Variant,
    p: u32,
    terms: BTreeMap<PBWMonomial, CycScalar>,
}

impl AlgebraElement {
    /// The zero element.
    pub fn zero(variant: Variant, p: u32) -> Self {
        AlgebraElement { variant, p, terms: BTreeMap::new() }
    }

    /// `c` times a single monomial.
    pub fn monomial(m: PBWMonomial, p: u32, c: CycScalar) -> Self {
        let mut x = AlgebraElement::zero(m.variant, p);
        x.add_term(m, c);
        x
    }

    /// The variant of the algebra.
    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// The parameter `p`.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Adds `c` times a monomial, dropping zero coefficients.
    pub fn add_term(&mut self, m: PBWMonomial, c: CycScalar) {
        assert_eq!(m.variant, self.variant, "monomial of another variant");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Coefficient of a monomial.
    pub fn coefficient(&self, m: &PBWMonomial) -> Option<&CycScalar> {
        self.terms.get(m)
    }

    /// Terms in PBW order.
    pub fn iter(&self) -> impl Iterator<Item = (&PBWMonomial, &CycScalar)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of two elements of the same algebra.
    pub fn plus(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    /// Difference of two elements of the same algebra.
    pub fn minus(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &CycScalar) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.variant, self.p);
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c}) {m}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

type Row = Vec<(u32, CycScalar)>;
type Acc = BTreeMap<u32, CycScalar>;

fn accumulate(acc: &mut Acc, k: u32, c: CycScalar) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&k) {
        Some(v) => {
            *v += &c;
            if v.is_zero() {
                acc.remove(&k);
            }
        }
        None => {
            acc.insert(k, c);
        }
    }
}

/// Normal ordering in the PBW basis of one algebra.
///
/// Products are computed by right multiplication with one generator at a
/// time, each step applying a single defining relation. The normal forms of
/// `F^b E` and all products of basis monomials are memoized.
pub struct PbwEngine {
    variant: Variant,
    consts: QConstants,
    cart: u32,
    dim: usize,
    f_pow_e: Vec<Row>,
    products: Vec<OnceLock<Row>>,
    coproducts: Vec<OnceLock<Tensor>>,
    antipodes: Vec<OnceLock<Tensor>>,
}

impl PbwEngine {
    /// Builds the engine for `variant` at parameter `p`.
    pub fn new(variant: Variant, consts: QConstants) -> Self {
        let p = consts.p;
        let cart = variant.cartan_order(p);
        let dim = (p * p * cart) as usize;
        let mut engine = PbwEngine {
            variant,
            consts,
            cart,
            dim,
            f_pow_e: Vec::new(),
            products: (0..dim * dim).map(|_| OnceLock::new()).collect(),
            coproducts: (0..dim).map(|_| OnceLock::new()).collect(),
            antipodes: (0..dim).map(|_| OnceLock::new()).collect(),
        };
        engine.f_pow_e = engine.build_f_pow_e();
        engine
    }

    /// The variant.
    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// The scalar constants.
    pub fn consts(&self) -> &QConstants {
        &self.consts
    }

    /// Dimension `p^2 · cartan_order`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Order of the Cartan generator.
    pub fn cartan_order(&self) -> u32 {
        self.cart
    }

    /// Basis index of `E^a F^b K^c`, with `c` reduced modulo the Cartan order.
    pub fn index(&self, a: u32, b: u32, c: i64) -> u32 {
        let p = self.consts.p;
        debug_assert!(a < p && b < p);
        (a * p + b) * self.cart + c.rem_euclid(self.cart as i64) as u32
    }

    /// The monomial with a given basis index.
    pub fn monomial(&self, idx: u32) -> PBWMonomial {
        let p = self.consts.p;
        let c = idx % self.cart;
        let ab = idx / self.cart;
        PBWMonomial { variant: self.variant, a: ab / p, b: ab % p, c }
    }

    /// Basis index of a monomial.
    pub fn index_of(&self, m: &PBWMonomial) -> u32 {
        self.index(m.a, m.b, m.c as i64)
    }

    /// Labels of all basis monomials.
    pub fn labels(&self) -> Vec<String> {
        (0..self.dim as u32).map(|i| self.monomial(i).to_string()).collect()
    }

    fn one(&self) -> CycScalar {
        CycScalar::one(self.consts.n)
    }

    fn times_k(&self, x: &Acc, k: i64) -> Acc {
        let mut out = Acc::new();
        for (idx, c) in x {
            let m = self.monomial(*idx);
            accumulate(&mut out, self.index(m.a, m.b, m.c as i64 + k), c.clone());
        }
        out
    }

    fn times_f(&self, x: &Acc) -> Acc {
        let w = self.variant.e_weight();
        let mut out = Acc::new();
        for (idx, c) in x {
            let m = self.monomial(*idx);
            if m.b + 1 < self.consts.p {
                let coeff = c * &self.consts.zeta(-w * m.c as i64);
                accumulate(&mut out, self.index(m.a, m.b + 1, m.c as i64), coeff);
            }
        }
        out
    }

    fn times_e(&self, x: &Acc) -> Acc {
        let w = self.variant.e_weight();
        let mut out = Acc::new();
        for (idx, c) in x {
            let m = self.monomial(*idx);
            let lead = c * &self.consts.zeta(w * m.c as i64);
            for (j, d) in &self.f_pow_e[m.b as usize] {
                let n = self.monomial(*j);
                if m.a + n.a < self.consts.p {
                    accumulate(&mut out, self.index(m.a + n.a, n.b, n.c as i64 + m.c as i64), &lead * d);
                }
            }
        }
        out
    }

    /// Normal forms of `F^b E` for `b < p`, from `F^b E = (F^{b-1} E) F - F^{b-1} [E, F]`.
    fn build_f_pow_e(&self) -> Vec<Row> {
        let p = self.consts.p;
        let h = self.variant.commutator_power();
        let mut out: Vec<Row> = vec![vec![(self.index(1, 0, 0), self.one())]];
        for b in 1..p {
            let prev: Acc = out[(b - 1) as usize].iter().cloned().collect();
            let mut acc = self.times_f(&prev);
            let inv = &self.consts.brace_one_inv;
            accumulate(&mut acc, self.index(0, b - 1, h), -inv);
            accumulate(&mut acc, self.index(0, b - 1, -h), inv.clone());
            out.push(acc.into_iter().collect());
        }
        out
    }

    /// The product of two basis monomials.
    pub fn basis_product(&self, x: u32, y: u32) -> &[(u32, CycScalar)] {
        self.products[x as usize * self.dim + y as usize].get_or_init(|| {
            let mut acc: Acc = Acc::new();
            acc.insert(x, self.one());
            let m = self.monomial(y);
            for _ in 0..m.a {
                acc = self.times_e(&acc);
            }
            for _ in 0..m.b {
                acc = self.times_f(&acc);
            }
            acc = self.times_k(&acc, m.c as i64);
            acc.into_iter().collect()
        })
    }

    /// Legwise product of two PBW tensors of equal rank.
    pub fn mul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        assert_eq!(a.rank(), b.rank(), "rank mismatch");
        let rank = a.rank();
        let mut out = Tensor::zero(rank);
        let mut rows: Vec<&[(u32, CycScalar)]> = Vec::with_capacity(rank);
        for (ka, ca) in a.iter() {
            'pairs: for (kb, cb) in b.iter() {
                rows.clear();
                for leg in 0..rank {
                    let r = self.basis_product(ka[leg], kb[leg]);
                    if r.is_empty() {
                        continue 'pairs;
                    }
                    rows.push(r);
                }
                let coeff = ca * cb;
                expand(&rows, 0, &mut Key::new(), &coeff, &mut out);
            }
        }
        out
    }

    /// A basis monomial as a rank-1 tensor.
    pub fn basis(&self, a: u32, b: u32, c: i64) -> Tensor {
        Tensor::basis(&[self.index(a, b, c)], self.one())
    }

    /// Coproduct of a basis monomial: `Δ(E)^a Δ(F)^b Δ(K)^c` in the tensor square.
    pub fn coproduct(&self, idx: u32) -> &Tensor {
        self.coproducts[idx as usize].get_or_init(|| {
            let m = self.monomial(idx);
            let h = self.variant.commutator_power();
            let one = self.basis(0, 0, 0);
            let e = self.basis(1, 0, 0);
            let f = self.basis(0, 1, 0);
            let delta_e = e.outer(&self.basis(0, 0, h)).plus(&one.outer(&e));
            let delta_f = f.outer(&one).plus(&self.basis(0, 0, -h).outer(&f));
            let mut acc = one.outer(&one);
            for _ in 0..m.a {
                acc = self.mul(&acc, &delta_e);
            }
            for _ in 0..m.b {
                acc = self.mul(&acc, &delta_f);
            }
            let kc = self.basis(0, 0, m.c as i64);
            self.mul(&acc, &kc.outer(&kc))
        })
    }

    /// Antipode of a basis monomial: `S(K)^c S(F)^b S(E)^a`.
    pub fn antipode(&self, idx: u32) -> &Tensor {
        self.antipodes[idx as usize].get_or_init(|| {
            let m = self.monomial(idx);
            let h = self.variant.commutator_power();
            let minus_one = -self.one();
            let s_e = self.basis(1, 0, -h).scale(&minus_one);
            let s_f = self.mul(&self.basis(0, 0, h), &self.basis(0, 1, 0)).scale(&minus_one);
            let mut acc = self.basis(0, 0, -(m.c as i64));
            for _ in 0..m.b {
                acc = self.mul(&acc, &s_f);
            }
            for _ in 0..m.a {
                acc = self.mul(&acc, &s_e);
            }
            acc
        })
    }

    /// Counit of a basis monomial.
    pub fn counit(&self, idx: u32) -> CycScalar {
        let m = self.monomial(idx);
        if m.a == 0 && m.b == 0 {
            self.one()
        } else {
            CycScalar::zero(self.consts.n)
        }
    }

    /// Applies the coproduct to one leg of a tensor.
    pub fn coproduct_on(&self, t: &Tensor, leg: usize) -> Tensor {
        t.map_leg(leg, 2, |x| self.coproduct(x))
    }

    /// Applies the antipode to one leg of a tensor.
    pub fn antipode_on(&self, t: &Tensor, leg: usize) -> Tensor {
        t.map_leg(leg, 1, |x| self.antipode(x))
    }

    /// Applies the counit to one leg of a tensor.
    pub fn counit_on(&self, t: &Tensor, leg: usize) -> Tensor {
        t.contract_leg(leg, |x| self.counit(x))
    }

    /// Converts an element to a rank-1 tensor.
    pub fn to_tensor(&self, x: &AlgebraElement) -> Tensor {
        let mut t = Tensor::zero(1);
        for (m, c) in x.iter() {
            t.add_term(&[self.index_of(m)], c.clone());
        }
        t
    }

    /// Converts a rank-1 tensor to an element.
    pub fn to_element(&self, t: &Tensor) -> AlgebraElement {
        assert_eq!(t.rank(), 1, "expected a rank-1 tensor");
        let mut x = AlgebraElement::zero(self.variant, self.consts.p);
        for (k, c) in t.iter() {
            x.add_term(self.monomial(k[0]), c.clone());
        }
        x
    }
}

pub(crate) fn expand(rows: &[&[(u32, CycScalar)]], leg: usize, key: &mut Key, coeff: &CycScalar, out: &mut Tensor) {
    if leg == rows.len() {
        out.add_term(key, coeff.clone());
        return;
    }
    for (z, c) in rows[leg] {
        key.push(*z);
        expand(rows, leg + 1, key, &(coeff * c), out);
        key.pop();
    }
}
