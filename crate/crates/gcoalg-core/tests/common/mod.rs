//! Textbook Hopf algebras used as test oracles.

#![allow(dead_code)]

use cyclo_field::CycScalar;
use gcoalg_core::{FiniteAbelianGroup, HopfAlgebraData, ProductTable, Tensor};

fn one() -> CycScalar {
    CycScalar::one(1)
}

fn empty(name: &str, labels: Vec<String>, product: ProductTable) -> HopfAlgebraData {
    let dim = labels.len();
    HopfAlgebraData {
        name: name.into(),
        order: 1,
        labels,
        product,
        unit: Tensor::zero(1),
        coproduct: vec![Tensor::zero(2); dim],
        counit: vec![CycScalar::zero(1); dim],
        antipode: vec![Tensor::zero(1); dim],
        r_matrix: None,
        m_plus: None,
        m_minus: None,
        ribbon: None,
        ribbon_inverse: None,
        pivotal: None,
        integral: None,
        cointegral: None,
    }
}

/// The group algebra `k[G]` with trivial R-matrix, ribbon and pivotal elements,
/// integral `λ(a) = δ_{a,0}` and cointegral `Σ_a a`.
pub fn group_algebra(g: &FiniteAbelianGroup) -> HopfAlgebraData {
    let n = g.order();
    let labels = g.elements().map(|a| format!("[{}]", g.format_element(a))).collect();
    let mut product = ProductTable::new(n);
    for a in g.elements() {
        for b in g.elements() {
            product.set(a as u32, b as u32, vec![(g.add(a, b) as u32, one())]);
        }
    }
    let mut h = empty("group algebra", labels, product);
    h.unit = Tensor::basis(&[0], one());
    for a in g.elements() {
        h.coproduct[a] = Tensor::basis(&[a as u32, a as u32], one());
        h.counit[a] = one();
        h.antipode[a] = Tensor::basis(&[g.neg(a) as u32], one());
    }
    let unit = h.unit.clone();
    h.r_matrix = Some(unit.outer(&unit));
    h.ribbon = Some(unit.clone());
    h.ribbon_inverse = Some(unit.clone());
    h.pivotal = Some(unit);
    h.integral = Some(g.elements().map(|a| if a == 0 { one() } else { CycScalar::zero(1) }).collect());
    let mut cl = Tensor::zero(1);
    for a in g.elements() {
        cl.add_term(&[a as u32], one());
    }
    h.cointegral = Some(cl);
    h
}

/// The function algebra `k^G` on the basis of point indicators `δ_a`.
///
/// The indicators form a G-splitting system that is diagonal in this basis.
pub fn function_algebra(g: &FiniteAbelianGroup) -> HopfAlgebraData {
    let n = g.order();
    let labels = g.elements().map(|a| format!("δ{}", g.format_element(a))).collect();
    let mut product = ProductTable::new(n);
    for a in g.elements() {
        product.set(a as u32, a as u32, vec![(a as u32, one())]);
    }
    let mut h = empty("function algebra", labels, product);
    let mut unit = Tensor::zero(1);
    for a in g.elements() {
        unit.add_term(&[a as u32], one());
        let mut d = Tensor::zero(2);
        for b in g.elements() {
            d.add_term(&[g.sub(a, b) as u32, b as u32], one());
        }
        h.coproduct[a] = d;
        h.counit[a] = if a == 0 { one() } else { CycScalar::zero(1) };
        h.antipode[a] = Tensor::basis(&[g.neg(a) as u32], one());
    }
    h.unit = unit.clone();
    h.r_matrix = Some(unit.outer(&unit));
    h.ribbon = Some(unit.clone());
    h.ribbon_inverse = Some(unit.clone());
    h.pivotal = Some(unit);
    h.integral = Some(vec![one(); n]);
    h.cointegral = Some(Tensor::basis(&[0], one()));
    h
}

/// The point indicators of `k^G`, in group-element order.
pub fn indicators(g: &FiniteAbelianGroup) -> Vec<Tensor> {
    g.elements().map(|a| Tensor::basis(&[a as u32], one())).collect()
}
