//! PBW arithmetic: defining relations, Hopf structure on monomials, gradings.

use cyclo_field::CycScalar;
use gcoalg_core::{check_hopf_axioms, GradedHopfData, Tensor};
use proptest::prelude::*;
use quantum_sl2::{AlgebraElement, QuantumError, QuantumGroupInstance, Variant};

fn all_variants(p: u32) -> Vec<QuantumGroupInstance> {
    [Variant::Restricted, Variant::Tilde, Variant::Small].into_iter().map(|v| QuantumGroupInstance::new(v, p).unwrap()).collect()
}

#[test]
fn commutator_of_e_and_f_is_the_cartan_quotient() {
    for p in 2..=5 {
        let u = QuantumGroupInstance::restricted(p).unwrap();
        let ef = u.product(&u.e(), &u.f()).unwrap();
        let fe = u.product(&u.f(), &u.e()).unwrap();
        let k = u.consts();
        let expected = u.k().minus(&u.element(0, 0, -1)).scale(&k.brace_one_inv);
        assert_eq!(ef.minus(&fe), expected, "p = {p}");
    }
}

#[test]
fn tilde_commutator_uses_the_square_of_the_cartan_generator() {
    let u = QuantumGroupInstance::tilde(3).unwrap();
    let ef = u.product(&u.e(), &u.f()).unwrap();
    let fe = u.product(&u.f(), &u.e()).unwrap();
    let expected = u.element(0, 0, 2).minus(&u.element(0, 0, -2)).scale(&u.consts().brace_one_inv);
    assert_eq!(ef.minus(&fe), expected);
}

#[test]
fn cartan_generator_conjugates_e_and_f_by_powers_of_q() {
    for inst in all_variants(3) {
        let k = inst.consts();
        let w = match inst.variant() {
            Variant::Tilde => 1,
            _ => 2,
        };
        let ke = inst.product(&inst.k(), &inst.e()).unwrap();
        let ek = inst.product(&inst.e(), &inst.k()).unwrap();
        assert_eq!(ke, ek.scale(&k.q(w)));
        let kf = inst.product(&inst.k(), &inst.f()).unwrap();
        let fk = inst.product(&inst.f(), &inst.k()).unwrap();
        assert_eq!(kf, fk.scale(&k.q(-w)));
    }
}

#[test]
fn cartan_periodicity_and_nilpotency() {
    for p in 2..=4 {
        let u = QuantumGroupInstance::restricted(p).unwrap();
        let top = u.element(0, 0, 2 * p as i64 - 1);
        assert_eq!(u.product(&top, &u.k()).unwrap(), u.one());
        let e_top = u.element(p - 1, 0, 0);
        assert!(u.product(&e_top, &u.e()).unwrap().is_zero());
        let f_top = u.element(0, p - 1, 0);
        assert!(u.product(&u.f(), &f_top).unwrap().is_zero());
    }
    let s = QuantumGroupInstance::small(3).unwrap();
    assert_eq!(s.product(&s.element(0, 0, 2), &s.k()).unwrap(), s.one());
}

#[test]
fn mixing_variants_is_rejected() {
    let u = QuantumGroupInstance::restricted(2).unwrap();
    let t = QuantumGroupInstance::tilde(2).unwrap();
    let err = u.product(&u.e(), &t.e()).unwrap_err();
    assert!(matches!(err, QuantumError::VariantMismatch { found: Variant::Tilde, .. }));
    let u3 = QuantumGroupInstance::restricted(3).unwrap();
    assert!(u.product(&u.e(), &u3.e()).is_err());
    assert!(matches!(QuantumGroupInstance::restricted(1), Err(QuantumError::InvalidParameter(_))));
}

#[test]
fn coproduct_of_cartan_powers_is_group_like() {
    for inst in all_variants(3) {
        for c in 0..inst.cartan_order() as i64 {
            let kc = inst.element(0, 0, c);
            let expected = inst.basis(0, 0, c).outer(&inst.basis(0, 0, c));
            assert_eq!(inst.coproduct(&kc).unwrap(), expected);
        }
    }
}

#[test]
fn coproduct_is_multiplicative_on_all_monomial_pairs_at_p2() {
    for inst in all_variants(2) {
        let dim = inst.dim() as u32;
        for x in 0..dim {
            for y in 0..dim {
                let xy = inst.engine().basis_product(x, y);
                let mut lhs = Tensor::zero(2);
                for (z, c) in xy {
                    lhs.add_scaled(inst.engine().coproduct(*z), c);
                }
                let rhs = inst.mul(inst.engine().coproduct(x), inst.engine().coproduct(y));
                assert_eq!(lhs, rhs, "{} at x = {x}, y = {y}", inst.variant());
            }
        }
    }
}

#[test]
fn coproduct_of_ef_matches_product_of_coproducts() {
    for inst in all_variants(3) {
        let ef = inst.product(&inst.e(), &inst.f()).unwrap();
        let lhs = inst.coproduct(&ef).unwrap();
        let rhs = inst.mul(&inst.coproduct(&inst.e()).unwrap(), &inst.coproduct(&inst.f()).unwrap());
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn antipode_axiom_holds_on_every_monomial_at_p2() {
    for inst in all_variants(2) {
        for x in 0..inst.dim() as u32 {
            let d = inst.engine().coproduct(x);
            let left = inst.multiply_legs(&inst.antipode_on(d, 0));
            let right = inst.multiply_legs(&inst.antipode_on(d, 1));
            let expected = inst.basis(0, 0, 0).scale(&inst.engine().counit(x));
            assert_eq!(left, expected, "{} at {x}", inst.variant());
            assert_eq!(right, expected, "{} at {x}", inst.variant());
        }
    }
}

#[test]
fn generator_images_match_the_defining_formulas() {
    let u = QuantumGroupInstance::tilde(2).unwrap();
    let one = u.basis(0, 0, 0);
    let de = u.basis(1, 0, 0).outer(&u.basis(0, 0, 2)).plus(&one.outer(&u.basis(1, 0, 0)));
    assert_eq!(u.coproduct(&u.e()).unwrap(), de);
    let se = u.element(1, 0, -2).scale(&-u.one_scalar());
    assert_eq!(u.antipode(&u.e()).unwrap(), se);
    assert!(u.counit(&u.f()).unwrap().is_zero());
    assert!(u.counit(&u.k()).unwrap().is_one());
}

#[test]
fn inverse_antipode_undoes_the_antipode() {
    for inst in all_variants(3) {
        for x in (0..inst.dim() as u32).step_by(7) {
            let t = Tensor::basis(&[x], inst.one_scalar());
            assert_eq!(inst.antipode_inverse_on(&inst.antipode_on(&t, 0), 0), t);
        }
    }
}

#[test]
fn hopf_axioms_pass_in_the_pbw_basis() {
    for (v, p) in [(Variant::Restricted, 2), (Variant::Tilde, 2), (Variant::Small, 3), (Variant::Restricted, 3)] {
        let inst = QuantumGroupInstance::new(v, p).unwrap();
        let g = GradedHopfData::trivial(inst.hopf_data().unwrap()).unwrap();
        let report = check_hopf_axioms(&g);
        assert!(report.all_passed(), "{v} p = {p}\n{report}");
    }
}

#[test]
fn gamma_degree_of_e2_f_k3_is_one() {
    let u = QuantumGroupInstance::restricted(3).unwrap();
    let g = u.gradings(&u.element(2, 1, 3)).unwrap();
    assert_eq!(g.gamma_degree, 1);
    assert_eq!(g.parity_deg, 1);
    let mixed = u.e().plus(&u.f());
    assert!(matches!(u.gradings(&mixed), Err(QuantumError::NotHomogeneous(_))));
    assert!(u.gradings(&AlgebraElement::zero(Variant::Restricted, 3)).is_err());
}

#[test]
fn gamma_and_parity_gradings_are_multiplicative() {
    for p in [2, 3, 4] {
        let u = QuantumGroupInstance::restricted(p).unwrap();
        let dim = u.dim() as u32;
        for x in 0..dim {
            let gx = u.monomial_gradings(&u.engine().monomial(x));
            for y in 0..dim {
                let gy = u.monomial_gradings(&u.engine().monomial(y));
                for (z, _) in u.engine().basis_product(x, y) {
                    let gz = u.monomial_gradings(&u.engine().monomial(*z));
                    assert_eq!(gz.gamma_degree, gx.gamma_degree + gy.gamma_degree);
                    assert_eq!(gz.parity_deg, (gx.parity_deg + gy.parity_deg) % 2);
                }
            }
        }
    }
}

#[test]
fn odd_parity_monomials_are_killed_by_the_integral() {
    for p in [2, 3, 4] {
        let u = QuantumGroupInstance::restricted(p).unwrap();
        for x in 0..u.dim() as u32 {
            let m = u.engine().monomial(x);
            if u.monomial_gradings(&m).parity_deg == 1 {
                assert!(u.integral_on_basis(x).is_zero(), "{m}");
            }
        }
    }
}

fn arb_element(p: u32) -> impl Strategy<Value = Vec<(u32, u32, i64, i64)>> {
    prop::collection::vec((0..p, 0..p, 0..2 * p as i64, -3i64..=3), 1..5)
}

fn build(u: &QuantumGroupInstance, terms: &[(u32, u32, i64, i64)]) -> AlgebraElement {
    let mut x = AlgebraElement::zero(u.variant(), u.p());
    for &(a, b, c, k) in terms {
        x = x.plus(&u.element(a, b, c).scale(&CycScalar::from_int(u.field_order(), k)));
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn unit_is_neutral(terms in arb_element(3)) {
        let u = QuantumGroupInstance::restricted(3).unwrap();
        let x = build(&u, &terms);
        prop_assert_eq!(u.product(&u.one(), &x).unwrap(), x.clone());
        prop_assert_eq!(u.product(&x, &u.one()).unwrap(), x);
    }

    #[test]
    fn product_is_associative(a in arb_element(3), b in arb_element(3), c in arb_element(3)) {
        let u = QuantumGroupInstance::restricted(3).unwrap();
        let (x, y, z) = (build(&u, &a), build(&u, &b), build(&u, &c));
        let left = u.product(&u.product(&x, &y).unwrap(), &z).unwrap();
        let right = u.product(&x, &u.product(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn antipode_is_an_anti_homomorphism(a in arb_element(3), b in arb_element(3)) {
        let u = QuantumGroupInstance::restricted(3).unwrap();
        let (x, y) = (build(&u, &a), build(&u, &b));
        let lhs = u.antipode(&u.product(&x, &y).unwrap()).unwrap();
        let rhs = u.product(&u.antipode(&y).unwrap(), &u.antipode(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
