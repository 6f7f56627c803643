//! Hopf G-coalgebras, splitting systems and direct sums.

use cyclo_field::CycScalar;
use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::group::FiniteAbelianGroup;
use crate::hopf::HopfAlgebraData;
use crate::table::ProductTable;
use crate::tensor::Tensor;

/// A Hopf G-coalgebra `{H_α}` over a finite abelian group.
///
/// The pieces `H_α` are stored side by side on one global basis: every basis
/// vector carries a degree `α`, and each family of structure maps is packed
/// into a single table whose `(α, β, ...)` component is read off by the
/// degrees of the legs. Thus `Δ_{α,β}(x)` is the part of the stored coproduct
/// of `x ∈ H_{α+β}` lying in `H_α ⊗ H_β`, `R_{α,β}` is the part of the stored
/// R-matrix in `H_α ⊗ H_β`, and `v_α` is the part of the ribbon element in `H_α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedHopfData {
    group: FiniteAbelianGroup,
    degree: Vec<usize>,
    tables: HopfAlgebraData,
}

impl GradedHopfData {
    /// Assembles graded data from packed tables, checking that every family
    /// respects the grading.
    pub fn new(group: FiniteAbelianGroup, degree: Vec<usize>, tables: HopfAlgebraData) -> Result<Self, CoreError> {
        tables.check_dimensions()?;
        if degree.len() != tables.dim() {
            return Err(CoreError::DimensionMismatch(format!(
                "{} degrees for a basis of size {}",
                degree.len(),
                tables.dim()
            )));
        }
        if let Some(d) = degree.iter().find(|d| **d >= group.order()) {
            return Err(CoreError::InvalidGroup(format!("degree index {d} outside {group}")));
        }
        let g = GradedHopfData { group, degree, tables };
        g.check_homogeneous()?;
        Ok(g)
    }

    fn check_homogeneous(&self) -> Result<(), CoreError> {
        let t = &self.tables;
        let lab = |x: u32| &t.labels[x as usize];
        let bad = |msg: String| Err(CoreError::Inhomogeneous(msg));
        for (x, y, row) in t.product.entries() {
            let d = self.degree(x);
            if self.degree(y) != d {
                return bad(format!("{} * {} mixes degrees", lab(x), lab(y)));
            }
            if row.iter().any(|(z, _)| self.degree(*z) != d) {
                return bad(format!("{} * {} leaves its degree", lab(x), lab(y)));
            }
        }
        for x in 0..t.dim() as u32 {
            let d = self.degree(x);
            for (k, _) in t.coproduct[x as usize].iter() {
                if self.group.add(self.degree(k[0]), self.degree(k[1])) != d {
                    return bad(format!("coproduct of {} has a term of the wrong degree", lab(x)));
                }
            }
            let nd = self.group.neg(d);
            if t.antipode[x as usize].iter().any(|(k, _)| self.degree(k[0]) != nd) {
                return bad(format!("antipode of {} is not in the opposite degree", lab(x)));
            }
            if d != 0 && !t.counit[x as usize].is_zero() {
                return bad(format!("counit is nonzero on {} outside degree 0", lab(x)));
            }
        }
        if let Some(l) = &t.cointegral {
            if l.iter().any(|(k, _)| self.degree(k[0]) != 0) {
                return bad("cointegral is not in degree 0".into());
            }
        }
        Ok(())
    }

    /// The grading group.
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// Degree of a basis vector.
    pub fn degree(&self, x: u32) -> usize {
        self.degree[x as usize]
    }

    /// Degrees of all basis vectors.
    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    /// The packed structure tables.
    pub fn tables(&self) -> &HopfAlgebraData {
        &self.tables
    }

    /// Cyclotomic order of the coefficient field.
    pub fn order(&self) -> u32 {
        self.tables.order
    }

    /// Global indices of the basis of `H_α`.
    pub fn basis(&self, alpha: usize) -> Vec<u32> {
        (0..self.degree.len() as u32).filter(|x| self.degree(*x) == alpha).collect()
    }

    /// Dimension of `H_α` for every `α`.
    pub fn basis_dims(&self) -> Vec<usize> {
        let mut dims = vec![0; self.group.order()];
        for d in &self.degree {
            dims[*d] += 1;
        }
        dims
    }

    /// The part of a tensor whose legs have the given degrees.
    pub fn component(&self, t: &Tensor, degrees: &[usize]) -> Tensor {
        assert_eq!(t.rank(), degrees.len(), "one degree per leg");
        t.filter(|k| k.iter().zip(degrees).all(|(x, d)| self.degree(*x) == *d))
    }

    /// Splits a tensor into its nonzero homogeneous components.
    pub fn components(&self, t: &Tensor) -> Vec<(Vec<usize>, Tensor)> {
        let mut out: Vec<(Vec<usize>, Tensor)> = Vec::new();
        for (k, c) in t.iter() {
            let ds: Vec<usize> = k.iter().map(|x| self.degree(*x)).collect();
            match out.iter_mut().find(|(d, _)| *d == ds) {
                Some((_, part)) => part.add_term(k, c.clone()),
                None => out.push((ds, Tensor::basis(k, c.clone()))),
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// The unit `1_α` of `H_α`.
    pub fn unit(&self, alpha: usize) -> Tensor {
        self.component(&self.tables.unit, &[alpha])
    }

    /// `μ_α(x ⊗ y)` for basis vectors of one degree; zero across degrees.
    pub fn product(&self, x: u32, y: u32) -> Tensor {
        let mut t = Tensor::zero(1);
        if self.degree(x) == self.degree(y) {
            for (z, c) in self.tables.product.basis_product(x, y) {
                t.add_term(&[*z], c.clone());
            }
        }
        t
    }

    /// `Δ_{α,β}(x)` for a basis vector `x ∈ H_{α+β}`.
    pub fn coproduct(&self, alpha: usize, beta: usize, x: u32) -> Tensor {
        if self.group.add(alpha, beta) != self.degree(x) {
            return Tensor::zero(2);
        }
        self.component(&self.tables.coproduct[x as usize], &[alpha, beta])
    }

    /// `ε_0(x)` for a basis vector `x ∈ H_0`; zero on other degrees.
    pub fn counit(&self, x: u32) -> CycScalar {
        self.tables.counit[x as usize].clone()
    }

    /// `S_α(x)` for a basis vector `x ∈ H_α`.
    pub fn antipode(&self, x: u32) -> &Tensor {
        &self.tables.antipode[x as usize]
    }

    /// `R_{α,β}`.
    pub fn r_matrix(&self, alpha: usize, beta: usize) -> Option<Tensor> {
        self.tables.r_matrix.as_ref().map(|r| self.component(r, &[alpha, beta]))
    }

    /// The ribbon element `v_α`.
    pub fn ribbon(&self, alpha: usize) -> Option<Tensor> {
        self.tables.ribbon.as_ref().map(|v| self.component(v, &[alpha]))
    }

    /// The inverse ribbon element `v_α^{-1}`.
    pub fn ribbon_inverse(&self, alpha: usize) -> Option<Tensor> {
        self.tables.ribbon_inverse.as_ref().map(|v| self.component(v, &[alpha]))
    }

    /// The pivotal element `g_α`.
    pub fn pivotal(&self, alpha: usize) -> Option<Tensor> {
        self.tables.pivotal.as_ref().map(|g| self.component(g, &[alpha]))
    }

    /// The Drinfeld element `u_α = S_{-α}(R''_{-α}) R'_α`, computed from `R_{α,-α}`.
    pub fn drinfeld(&self, alpha: usize) -> Option<Tensor> {
        let r = self.r_matrix(alpha, self.group.neg(alpha))?;
        let mut u = Tensor::zero(1);
        for (k, c) in r.iter() {
            let s = self.antipode(k[1]);
            u.add_scaled(&self.tables.mul(s, &self.tables.basis_element(k[0])), c);
        }
        Some(u)
    }

    /// `λ_α(x)` for a basis vector `x ∈ H_α`.
    pub fn integral(&self, x: u32) -> Option<CycScalar> {
        self.tables.integral.as_ref().map(|l| l[x as usize].clone())
    }

    /// The two-sided cointegral `Λ_0`.
    pub fn cointegral(&self) -> Option<&Tensor> {
        self.tables.cointegral.as_ref()
    }

    /// Replaces the ribbon element and its inverse.
    pub fn with_ribbon(mut self, v: Tensor, v_inverse: Tensor) -> Self {
        self.tables.ribbon = Some(v);
        self.tables.ribbon_inverse = Some(v_inverse);
        self
    }

    /// Replaces `Δ_{α,β}` by the zero map.
    pub fn with_zero_coproduct(mut self, alpha: usize, beta: usize) -> Self {
        let deg = self.degree.clone();
        for t in &mut self.tables.coproduct {
            *t = t.filter(|k| !(deg[k[0] as usize] == alpha && deg[k[1] as usize] == beta));
        }
        self
    }

    /// Replaces the family of left integrals.
    pub fn with_integral(mut self, values: Vec<CycScalar>) -> Self {
        self.tables.integral = Some(values);
        self
    }

    /// The direct sum `⊕_α H_α` as an ordinary Hopf algebra.
    pub fn direct_sum(&self) -> HopfAlgebraData {
        let t = &self.tables;
        let g = &self.group;
        let dim = t.dim();
        let mut product = ProductTable::new(dim);
        for (x, y, row) in t.product.entries() {
            if self.degree(x) == self.degree(y) {
                product.set(x, y, row.clone());
            }
        }
        let product = product.with_keys(t.product.left_keys().to_vec(), t.product.right_keys().to_vec());
        let mut unit = Tensor::zero(1);
        for a in g.elements() {
            unit.add_assign(&self.unit(a));
        }
        let coproduct = (0..dim as u32)
            .map(|x| {
                let mut d = Tensor::zero(2);
                for a in g.elements() {
                    d.add_assign(&self.coproduct(a, g.sub(self.degree(x), a), x));
                }
                d
            })
            .collect();
        let counit = (0..dim as u32)
            .map(|x| if self.degree(x) == 0 { self.counit(x) } else { CycScalar::zero(t.order) })
            .collect();
        let antipode = (0..dim as u32).map(|x| self.antipode(x).clone()).collect();
        let sum_over = |f: &dyn Fn(usize) -> Option<Tensor>, rank: usize| -> Option<Tensor> {
            let mut acc = Tensor::zero(rank);
            for a in g.elements() {
                acc.add_assign(&f(a)?);
            }
            Some(acc)
        };
        let r_matrix = sum_over(
            &|a| {
                let mut acc = Tensor::zero(2);
                for b in g.elements() {
                    acc.add_assign(&self.r_matrix(a, b)?);
                }
                Some(acc)
            },
            2,
        );
        let pair_sum = |m: &Option<Tensor>| {
            m.as_ref().map(|m| {
                let mut acc = Tensor::zero(2);
                for a in g.elements() {
                    for b in g.elements() {
                        acc.add_assign(&self.component(m, &[a, b]));
                    }
                }
                acc
            })
        };
        HopfAlgebraData {
            name: t.name.clone(),
            order: t.order,
            labels: t.labels.clone(),
            product,
            unit,
            coproduct,
            counit,
            antipode,
            r_matrix,
            m_plus: pair_sum(&t.m_plus),
            m_minus: pair_sum(&t.m_minus),
            ribbon: sum_over(&|a| self.ribbon(a), 1),
            ribbon_inverse: sum_over(&|a| self.ribbon_inverse(a), 1),
            pivotal: sum_over(&|a| self.pivotal(a), 1),
            integral: t.integral.as_ref().map(|_| (0..dim as u32).map(|x| self.integral(x).unwrap()).collect()),
            cointegral: t.cointegral.clone(),
        }
    }

    /// Renders the structure tables as pretty-printed JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("structure tables serialize")
    }

    /// Reads structure tables written by [`GradedHopfData::to_json`] and re-validates them.
    pub fn from_json(text: &str) -> Result<Self, CoreError> {
        let raw: GradedHopfData = serde_json::from_str(text).map_err(|e| CoreError::Format(e.to_string()))?;
        GradedHopfData::new(raw.group, raw.degree, raw.tables)
    }

    /// The trivially graded coalgebra `{H}` over the trivial group.
    pub fn trivial(h: HopfAlgebraData) -> Result<Self, CoreError> {
        let dim = h.dim();
        GradedHopfData::new(FiniteAbelianGroup::trivial(), vec![0; dim], h)
    }
}

/// Builds the Hopf G-coalgebra `{H 1_α}` from a G-splitting system.
///
/// The idempotents are given in the order of the group's element indices. All
/// splitting equations are verified, as are centrality and idempotence. The
/// idempotents must act diagonally on the basis of `H`, so that each basis
/// vector lies in exactly one `H 1_α`; otherwise `NotDiagonal` is returned.
pub fn split(h: &HopfAlgebraData, group: &FiniteAbelianGroup, idems: &[Tensor]) -> Result<GradedHopfData, CoreError> {
    h.check_dimensions()?;
    let n = group.order();
    if idems.len() != n {
        return Err(CoreError::DimensionMismatch(format!("{} idempotents for a group of order {n}", idems.len())));
    }
    let fail = |equation: &str, detail: String| Err(CoreError::NotASplittingSystem { equation: equation.into(), detail });
    let name = |a: usize| group.format_element(a);
    for (a, e) in idems.iter().enumerate() {
        if e.rank() != 1 {
            return Err(CoreError::DimensionMismatch("idempotents must be rank-1 tensors".into()));
        }
        for x in 0..h.dim() as u32 {
            let b = h.basis_element(x);
            if h.mul(e, &b) != h.mul(&b, e) {
                return fail("central", format!("1_{} does not commute with {}", name(a), h.labels[x as usize]));
            }
        }
    }
    for (a, ea) in idems.iter().enumerate() {
        for (b, eb) in idems.iter().enumerate() {
            let lhs = h.mul(ea, eb);
            let rhs = if a == b { ea.clone() } else { Tensor::zero(1) };
            if lhs != rhs {
                let eq = if a == b { "1_a 1_a = 1_a" } else { "1_a 1_b = 0" };
                return fail(eq, format!("a = {}, b = {}", name(a), name(b)));
            }
        }
    }
    let mut total = Tensor::zero(1);
    for e in idems {
        total.add_assign(e);
    }
    if total != h.unit {
        return fail("1 = sum 1_a", "the idempotents do not sum to the unit".into());
    }
    for (a, e) in idems.iter().enumerate() {
        let want = if a == 0 { h.one() } else { h.zero() };
        if h.epsilon(e) != want {
            return fail("eps(1_a) = delta_(a,0)", format!("eps(1_{}) = {}", name(a), h.epsilon(e)));
        }
        if h.antipode_on(e, 0) != idems[group.neg(a)] {
            return fail("S(1_a) = 1_(-a)", format!("a = {}", name(a)));
        }
    }
    for (a, e) in idems.iter().enumerate() {
        let mut rhs = Tensor::zero(2);
        for b in group.elements() {
            rhs.add_assign(&idems[group.sub(a, b)].outer(&idems[b]));
        }
        if h.delta(e) != rhs {
            return fail("Delta(1_a) = sum 1_(a-b) (x) 1_b", format!("a = {}", name(a)));
        }
    }
    let mut degree = vec![usize::MAX; h.dim()];
    for x in 0..h.dim() as u32 {
        let b = h.basis_element(x);
        for (a, e) in idems.iter().enumerate() {
            let be = h.mul(&b, e);
            if be == b {
                degree[x as usize] = a;
            } else if !be.is_zero() {
                return Err(CoreError::NotDiagonal(format!(
                    "{} * 1_{} is neither {} nor 0",
                    h.labels[x as usize],
                    name(a),
                    h.labels[x as usize]
                )));
            }
        }
    }
    GradedHopfData::new(group.clone(), degree, h.clone())
}
