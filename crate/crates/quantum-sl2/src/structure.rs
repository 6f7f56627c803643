//! Structure tables in the format of `gcoalg-core`, in the PBW basis and in
//! the basis `E^a F^b K^c 1_α` adapted to the central idempotents.

use cyclo_field::CycScalar;
use gcoalg_core::{split, FiniteAbelianGroup, GradedHopfData, HopfAlgebraData, ProductTable, Row, Tensor};

use crate::error::QuantumError;
use crate::instance::QuantumGroupInstance;
use crate::variant::Variant;

/// The basis `{E^a F^b K^c 1_α : a, b < p, c < C/2, α ∈ {0, 1}}` of `U` or
/// `Ũ`, where `C` is the Cartan order, with conversions to and from PBW.
///
/// Since `K^{C/2} 1_α = (-1)^α 1_α`, every PBW monomial splits as
/// `E^a F^b K^c = Σ_α E^a F^b K^c 1_α`, and the idempotents are basis vectors.
#[derive(Clone, Debug)]
pub struct IdempotentBasis {
    p: u32,
    half: u32,
    order: u32,
    to_block: Vec<Tensor>,
    to_pbw: Vec<Tensor>,
}

impl IdempotentBasis {
    /// Builds the basis for an instance of `U` or `Ũ`.
    pub fn new(inst: &QuantumGroupInstance) -> Result<Self, QuantumError> {
        inst.require(inst.variant() != Variant::Small, "U or Ũ")?;
        let p = inst.p();
        let half = inst.cartan_order() / 2;
        let order = inst.field_order();
        let mut basis = IdempotentBasis { p, half, order, to_block: Vec::new(), to_pbw: Vec::new() };
        let one = CycScalar::one(order);
        let half_scalar = inst.consts().rat(1, 2);
        for idx in 0..inst.dim() as u32 {
            let m = inst.engine().monomial(idx);
            let mut t = Tensor::zero(1);
            for alpha in 0..2 {
                let (key, sign) = basis.reduce(m.a, m.b, m.c, alpha);
                t.add_term(&[key], if sign { -one.clone() } else { one.clone() });
            }
            basis.to_block.push(t);
        }
        for idx in 0..basis.dim() as u32 {
            let (a, b, c, alpha) = basis.split_index(idx);
            let mut t = Tensor::zero(1);
            let low = inst.engine().index(a, b, c as i64);
            let high = inst.engine().index(a, b, (c + half) as i64);
            t.add_term(&[low], half_scalar.clone());
            t.add_term(&[high], if alpha == 1 { -half_scalar.clone() } else { half_scalar.clone() });
            basis.to_pbw.push(t);
        }
        Ok(basis)
    }

    /// Dimension of the algebra.
    pub fn dim(&self) -> usize {
        (self.p * self.p * self.half * 2) as usize
    }

    /// Index of `E^a F^b K^c 1_α` for `c < C/2`.
    pub fn index(&self, a: u32, b: u32, c: u32, alpha: usize) -> u32 {
        ((a * self.p + b) * self.half + c) * 2 + alpha as u32
    }

    /// The exponents `(a, b, c, α)` of a basis index.
    pub fn split_index(&self, idx: u32) -> (u32, u32, u32, usize) {
        let alpha = (idx % 2) as usize;
        let rest = idx / 2;
        let c = rest % self.half;
        let ab = rest / self.half;
        (ab / self.p, ab % self.p, c, alpha)
    }

    /// Degree `α` of a basis index.
    pub fn degree(&self, idx: u32) -> usize {
        (idx % 2) as usize
    }

    /// Index and sign of `E^a F^b K^c 1_α` for any `c < C`.
    fn reduce(&self, a: u32, b: u32, c: u32, alpha: usize) -> (u32, bool) {
        if c >= self.half {
            (self.index(a, b, c - self.half, alpha), alpha == 1)
        } else {
            (self.index(a, b, c, alpha), false)
        }
    }

    /// Converts a PBW tensor to this basis.
    pub fn from_pbw(&self, t: &Tensor) -> Tensor {
        let mut out = t.clone();
        for leg in 0..t.rank() {
            out = out.map_leg(leg, 1, |x| &self.to_block[x as usize]);
        }
        out
    }

    /// Converts a tensor in this basis to PBW.
    pub fn to_pbw(&self, t: &Tensor) -> Tensor {
        let mut out = t.clone();
        for leg in 0..t.rank() {
            out = out.map_leg(leg, 1, |x| &self.to_pbw[x as usize]);
        }
        out
    }

    /// `E^a F^b K^c 1_α` for a PBW index `x = E^a F^b K^c` and `c` in any range.
    fn with_degree(&self, inst: &QuantumGroupInstance, pbw: u32, alpha: usize) -> (u32, bool) {
        let m = inst.engine().monomial(pbw);
        self.reduce(m.a, m.b, m.c, alpha)
    }

    fn signed(&self, c: &CycScalar, negate: bool) -> CycScalar {
        if negate {
            -c
        } else {
            c.clone()
        }
    }

    /// Labels `E^a F^b K^c 1_α`.
    pub fn labels(&self, inst: &QuantumGroupInstance) -> Vec<String> {
        (0..self.dim() as u32)
            .map(|idx| {
                let (a, b, c, alpha) = self.split_index(idx);
                let m = inst.monomial(a, b, c as i64);
                if m.a == 0 && m.b == 0 && m.c == 0 {
                    format!("1_{alpha}")
                } else {
                    format!("{m} 1_{alpha}")
                }
            })
            .collect()
    }

    /// The unit `1 = 1₀ + 1₁`.
    fn unit(&self) -> Tensor {
        let mut t = Tensor::zero(1);
        t.add_term(&[self.index(0, 0, 0, 0)], CycScalar::one(self.order));
        t.add_term(&[self.index(0, 0, 0, 1)], CycScalar::one(self.order));
        t
    }

    /// The idempotent `1_α` as a basis vector.
    pub fn idempotent(&self, alpha: usize) -> Tensor {
        Tensor::basis(&[self.index(0, 0, 0, alpha)], CycScalar::one(self.order))
    }
}

impl QuantumGroupInstance {
    /// The Hopf algebra with all available ribbon and unimodular data, as
    /// structure tables in the PBW basis.
    pub fn hopf_data(&self) -> Result<HopfAlgebraData, QuantumError> {
        let dim = self.dim() as u32;
        let mut product = ProductTable::new(dim as usize);
        for x in 0..dim {
            for y in 0..dim {
                product.set(x, y, self.engine().basis_product(x, y).to_vec());
            }
        }
        let mut h = HopfAlgebraData {
            name: format!("{} at p = {}", self.variant(), self.p()),
            order: self.field_order(),
            labels: self.engine().labels(),
            product,
            unit: self.basis(0, 0, 0),
            coproduct: (0..dim).map(|x| self.engine().coproduct(x).clone()).collect(),
            counit: (0..dim).map(|x| self.engine().counit(x)).collect(),
            antipode: (0..dim).map(|x| self.engine().antipode(x).clone()).collect(),
            r_matrix: None,
            m_plus: None,
            m_minus: None,
            ribbon: None,
            ribbon_inverse: None,
            pivotal: Some(self.pivotal_tensor()),
            integral: Some((0..dim).map(|x| self.integral_on_basis(x)).collect()),
            cointegral: Some(self.cointegral_tensor()),
        };
        match self.variant() {
            Variant::Restricted => {
                let (mp, mm) = self.m_matrix()?;
                h.m_plus = Some(mp.clone());
                h.m_minus = Some(mm.clone());
            }
            _ => h.r_matrix = Some(self.r_matrix()?.clone()),
        }
        if self.variant() != Variant::Small || self.p() % 2 == 0 {
            let (vp, vm) = self.ribbon_tensors()?;
            h.ribbon = Some(vp.clone());
            h.ribbon_inverse = Some(vm.clone());
        }
        Ok(h)
    }

    /// The Hopf algebra in the basis `E^a F^b K^c 1_α` (for `U` and `Ũ`).
    pub fn idempotent_basis_data(&self) -> Result<(IdempotentBasis, HopfAlgebraData), QuantumError> {
        let basis = IdempotentBasis::new(self)?;
        let pbw = self.hopf_data()?;
        let dim = basis.dim() as u32;
        let mut product = ProductTable::new(dim as usize);
        for x in 0..dim {
            let (a, b, c, alpha) = basis.split_index(x);
            let px = self.engine().index(a, b, c as i64);
            for y in (0..dim).filter(|y| basis.degree(*y) == alpha) {
                let (a2, b2, c2, _) = basis.split_index(y);
                let py = self.engine().index(a2, b2, c2 as i64);
                let row: Row = self
                    .engine()
                    .basis_product(px, py)
                    .iter()
                    .map(|(z, coeff)| {
                        let (key, neg) = basis.with_degree(self, *z, alpha);
                        (key, basis.signed(coeff, neg))
                    })
                    .collect();
                product.set(x, y, merge_row(row));
            }
        }
        let keys: Vec<u32> = (0..dim).map(|x| basis.degree(x) as u32).collect();
        let product = product.with_keys(keys.clone(), keys);
        let mut coproduct = Vec::with_capacity(dim as usize);
        let mut antipode = Vec::with_capacity(dim as usize);
        let mut counit = Vec::with_capacity(dim as usize);
        for x in 0..dim {
            let (a, b, c, alpha) = basis.split_index(x);
            let px = self.engine().index(a, b, c as i64);
            let mut d = Tensor::zero(2);
            for (k, coeff) in self.engine().coproduct(px).iter() {
                for beta in 0..2 {
                    let (k0, n0) = basis.with_degree(self, k[0], beta);
                    let (k1, n1) = basis.with_degree(self, k[1], alpha ^ beta);
                    d.add_term(&[k0, k1], basis.signed(coeff, n0 != n1));
                }
            }
            coproduct.push(d);
            let mut s = Tensor::zero(1);
            for (k, coeff) in self.engine().antipode(px).iter() {
                let (k0, n0) = basis.with_degree(self, k[0], alpha);
                s.add_term(&[k0], basis.signed(coeff, n0));
            }
            antipode.push(s);
            counit.push(if alpha == 0 { self.engine().counit(px) } else { self.zero_scalar() });
        }
        let integral = (0..dim)
            .map(|x| basis.to_pbw[x as usize].evaluate(self.field_order(), |i| self.integral_on_basis(i)))
            .collect();
        let conv = |t: &Option<Tensor>| t.as_ref().map(|t| basis.from_pbw(t));
        let h = HopfAlgebraData {
            name: format!("{} at p = {} (idempotent basis)", self.variant(), self.p()),
            order: self.field_order(),
            labels: basis.labels(self),
            product,
            unit: basis.unit(),
            coproduct,
            counit,
            antipode,
            r_matrix: conv(&pbw.r_matrix),
            m_plus: conv(&pbw.m_plus),
            m_minus: conv(&pbw.m_minus),
            ribbon: conv(&pbw.ribbon),
            ribbon_inverse: conv(&pbw.ribbon_inverse),
            pivotal: conv(&pbw.pivotal),
            integral: Some(integral),
            cointegral: conv(&pbw.cointegral),
        };
        Ok((basis, h))
    }

    /// The Hopf `Z/2Z`-coalgebra obtained by splitting `U` or `Ũ` along
    /// `{1₀, 1₁}`; for `Ū` the trivially graded algebra.
    pub fn graded(&self) -> Result<GradedHopfData, QuantumError> {
        if self.variant() == Variant::Small {
            return Ok(GradedHopfData::trivial(self.hopf_data()?)?);
        }
        let (basis, h) = self.idempotent_basis_data()?;
        let idems = [basis.idempotent(0), basis.idempotent(1)];
        Ok(split(&h, &FiniteAbelianGroup::z2(), &idems)?)
    }
}

fn merge_row(row: Row) -> Row {
    let mut t = Tensor::zero(1);
    for (k, c) in row {
        t.add_term(&[k], c);
    }
    t.sorted_terms().into_iter().map(|(k, c)| (k[0], c)).collect()
}
