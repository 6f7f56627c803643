//! The small quantum group and its identification with `U 1₀`.

use gcoalg_core::{check_all, is_factorizable};
use quantum_sl2::{QuantumError, QuantumGroupInstance};

#[test]
fn small_ribbon_element_is_the_degree_zero_part_of_v_plus() {
    for p in [2, 4, 6] {
        let u = QuantumGroupInstance::restricted(p).unwrap();
        let s = QuantumGroupInstance::small(p).unwrap();
        let (vp, vm) = u.ribbon_elements().unwrap();
        let (sp, sm) = s.ribbon_elements().unwrap();
        assert_eq!(u.to_tensor(&u.embed_small(&sp).unwrap()), u.project(&u.to_tensor(&vp), &[0]).unwrap(), "p = {p}");
        assert_eq!(u.to_tensor(&u.embed_small(&sm).unwrap()), u.project(&u.to_tensor(&vm), &[0]).unwrap(), "p = {p}");
    }
}

#[test]
fn small_copairing_is_the_degree_zero_part_of_w_plus() {
    for p in [2, 4] {
        let u = QuantumGroupInstance::restricted(p).unwrap();
        let s = QuantumGroupInstance::small(p).unwrap();
        let embedded = u.embed_small_tensor(s.copairing().unwrap()).unwrap();
        assert_eq!(embedded, u.project(u.copairing().unwrap(), &[0, 0]).unwrap(), "p = {p}");
    }
}

#[test]
fn small_cointegral_is_the_degree_zero_part_of_the_cointegral() {
    for p in [2, 4] {
        let u = QuantumGroupInstance::restricted(p).unwrap();
        let s = QuantumGroupInstance::small(p).unwrap();
        let embedded = u.embed_small(&s.cointegral()).unwrap();
        assert_eq!(u.to_tensor(&embedded), u.project(&u.to_tensor(&u.cointegral()), &[0]).unwrap());
    }
}

#[test]
fn small_integral_agrees_with_the_integral_on_degree_zero() {
    for p in [2, 4] {
        let u = QuantumGroupInstance::restricted(p).unwrap();
        let s = QuantumGroupInstance::small(p).unwrap();
        let k = s.consts();
        let top = s.element(p - 1, p - 1, p as i64 - 1);
        let expected = &k.sqrt_p_prime * &k.integral_core();
        assert_eq!(s.integral(&top).unwrap(), expected);
        for x in 0..s.dim() as u32 {
            let m = s.engine().monomial(x);
            let xs = s.element(m.a, m.b, m.c as i64);
            let lhs = s.integral(&xs).unwrap();
            let rhs = u.integral(&u.embed_small(&xs).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "p = {p}, {m}");
        }
    }
}

#[test]
fn embedding_is_an_algebra_map() {
    let u = QuantumGroupInstance::restricted(2).unwrap();
    let s = QuantumGroupInstance::small(2).unwrap();
    for x in 0..s.dim() as u32 {
        for y in 0..s.dim() as u32 {
            let (mx, my) = (s.engine().monomial(x), s.engine().monomial(y));
            let (ex, ey) = (s.element(mx.a, mx.b, mx.c as i64), s.element(my.a, my.b, my.c as i64));
            let lhs = u.embed_small(&s.product(&ex, &ey).unwrap()).unwrap();
            let rhs = u.product(&u.embed_small(&ex).unwrap(), &u.embed_small(&ey).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
    assert!(u.embed_small(&u.e()).is_err());
}

#[test]
fn small_m_matrix_is_the_monodromy_of_its_r_matrix() {
    for p in [2, 4] {
        let s = QuantumGroupInstance::small(p).unwrap();
        let (mp, mm) = s.m_matrix().unwrap();
        assert_eq!(&s.monodromy_from_r().unwrap(), mp, "p = {p}");
        assert_eq!(s.mul(mp, mm), s.unit_tensor(2), "p = {p}");
    }
}

#[test]
fn alternative_sign_in_small_inverse_m_matrix_fails_at_p4() {
    let s = QuantumGroupInstance::small(4).unwrap();
    let (mp, _) = s.m_matrix().unwrap();
    let alternative = s.small_m_minus_with_sign(1).unwrap();
    assert_ne!(s.mul(mp, &alternative), s.unit_tensor(2));
}

#[test]
fn small_ribbon_element_is_drinfeld_element_times_k_power() {
    for p in [2, 4] {
        let s = QuantumGroupInstance::small(p).unwrap();
        let (vp, vm) = s.ribbon_elements().unwrap();
        assert_eq!(s.ribbon_from_r().unwrap(), s.to_tensor(&vp), "p = {p}");
        assert_eq!(s.product(&vp, &vm).unwrap(), s.one());
    }
}

#[test]
fn small_closed_forms_need_even_p() {
    let s = QuantumGroupInstance::small(3).unwrap();
    assert_eq!(s.ribbon_elements().unwrap_err(), QuantumError::ParityUnsupported(3));
    assert!(s.m_matrix().is_err());
    assert!(s.r_matrix().is_ok());
}

#[test]
fn small_group_passes_every_axiom_and_is_not_factorizable() {
    for p in [2, 4] {
        let s = QuantumGroupInstance::small(p).unwrap();
        let g = s.graded().unwrap();
        let report = check_all(&g);
        assert!(report.all_passed(), "p = {p}\n{report}");
        assert!(!is_factorizable(&g).unwrap().is_factorizable());
    }
    let s = QuantumGroupInstance::small(3).unwrap();
    assert!(is_factorizable(&s.graded().unwrap()).unwrap().is_factorizable());
}
