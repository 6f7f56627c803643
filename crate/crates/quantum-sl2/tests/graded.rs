//! Central idempotents, degree-wise closed forms and the split algebras.

use cyclo_field::CycScalar;
use gcoalg_core::{check_all, is_factorizable, Outcome};
use quantum_sl2::{QuantumError, QuantumGroupInstance, Variant};

#[test]
fn idempotents_are_orthogonal_and_complete() {
    for v in [Variant::Restricted, Variant::Tilde] {
        let inst = QuantumGroupInstance::new(v, 3).unwrap();
        let [i0, i1] = inst.idempotents().unwrap();
        assert_eq!(i0.plus(&i1), inst.basis(0, 0, 0));
        assert!(inst.mul(&i0, &i1).is_zero());
        assert_eq!(inst.mul(&i0, &i0), i0);
        assert_eq!(inst.mul(&i1, &i1), i1);
    }
    let s = QuantumGroupInstance::small(2).unwrap();
    assert!(s.idempotents().is_err());
}

#[test]
fn graded_ribbon_closed_forms_equal_projections() {
    for p in [2, 4, 6] {
        let u = QuantumGroupInstance::restricted(p).unwrap();
        let (vp, vm) = u.ribbon_elements().unwrap();
        for alpha in 0..2 {
            let proj = u.project(&u.to_tensor(&vp), &[alpha]).unwrap();
            assert_eq!(proj, u.graded_ribbon(alpha, false).unwrap(), "v₊ 1_{alpha} at p = {p}");
            let proj = u.project(&u.to_tensor(&vm), &[alpha]).unwrap();
            assert_eq!(proj, u.graded_ribbon(alpha, true).unwrap(), "v₋ 1_{alpha} at p = {p}");
        }
    }
}

#[test]
fn graded_copairing_closed_forms_equal_projections() {
    for p in [2, 4] {
        let u = QuantumGroupInstance::restricted(p).unwrap();
        let w = u.copairing().unwrap();
        for alpha in 0..2 {
            for beta in 0..2 {
                let proj = u.project(w, &[alpha, beta]).unwrap();
                assert_eq!(proj, u.graded_copairing(alpha, beta).unwrap(), "w({alpha},{beta}) at p = {p}");
            }
        }
    }
}

#[test]
fn graded_closed_forms_need_even_p() {
    let u = QuantumGroupInstance::restricted(3).unwrap();
    assert_eq!(u.graded_ribbon(0, false).unwrap_err(), QuantumError::ParityUnsupported(3));
    assert_eq!(u.graded_copairing(1, 1).unwrap_err(), QuantumError::ParityUnsupported(3));
    assert_eq!(u.lambda_v_values().unwrap_err(), QuantumError::ParityUnsupported(3));
}

fn unit_over_sqrt2(u: &QuantumGroupInstance, sign: i64) -> CycScalar {
    let k = u.consts();
    let one = u.one_scalar();
    let unit = if sign > 0 { &one - &k.i(1) } else { &one + &k.i(1) };
    unit.div(&k.named.sqrt_2).unwrap()
}

#[test]
fn integral_of_graded_ribbon_elements() {
    for p in [2, 4, 6, 8] {
        let u = QuantumGroupInstance::restricted(p).unwrap();
        let k = u.consts();
        let table = u.lambda_v_values().unwrap();
        let plus = &unit_over_sqrt2(&u, 1) * &k.t(3);
        let minus = &unit_over_sqrt2(&u, -1) * &k.t(-3);
        if p % 4 == 0 {
            assert_eq!(table.plus_1, plus, "p = {p}");
            assert_eq!(table.minus_1, minus, "p = {p}");
            assert!((&table.plus_1 * &table.minus_1).is_one());
            assert!(table.plus_0.is_zero() && table.minus_0.is_zero());
        } else {
            assert_eq!(table.plus_0, -plus, "p = {p}");
            assert_eq!(table.minus_0, -minus, "p = {p}");
            assert!((&table.plus_0 * &table.minus_0).is_one());
            assert!(table.plus_1.is_zero() && table.minus_1.is_zero());
        }
        assert_eq!(table.get(1, 0), &table.plus_0);
    }
}

#[test]
fn parity_of_graded_ribbon_elements() {
    let u = QuantumGroupInstance::restricted(4).unwrap();
    let (vp, _) = u.ribbon_elements().unwrap();
    let v0 = u.to_element(&u.project(&u.to_tensor(&vp), &[0]).unwrap());
    let v1 = u.to_element(&u.project(&u.to_tensor(&vp), &[1]).unwrap());
    assert_eq!(u.gradings(&v0).unwrap().parity_deg, 1);
    assert_eq!(u.gradings(&v1).unwrap().parity_deg, 0);
    assert!(u.gradings(&vp).is_err());
}

#[test]
fn parity_vanishing_bead_identities() {
    let cases = [
        (4, vec![(0, 0, 1), (0, 2, 1), (0, 4, 1), (0, 1, 0), (0, 3, 0), (0, 5, 0), (1, 0, 1), (1, 1, 1), (1, 2, 1)]),
        (2, vec![(0, 0, 1), (0, 1, 1), (0, 2, 1), (1, 0, 1), (1, 2, 1), (1, 4, 1), (1, 1, 0), (1, 3, 0), (1, 5, 0)]),
    ];
    for (p, list) in cases {
        let u = QuantumGroupInstance::restricted(p).unwrap();
        for (alpha, n, beta) in list {
            assert!(u.parity_bead(alpha, n, beta).unwrap().is_zero(), "p = {p}, ({alpha}, {n}, {beta})");
        }
        let witness = if p % 4 == 0 { (1, 0, 0) } else { (0, 0, 0) };
        assert!(!u.parity_bead(witness.0, witness.1, witness.2).unwrap().is_zero(), "p = {p}: identities are not vacuous");
    }
}

#[test]
fn split_restricted_and_tilde_pass_every_axiom_at_p2() {
    for v in [Variant::Restricted, Variant::Tilde] {
        let inst = QuantumGroupInstance::new(v, 2).unwrap();
        let g = inst.graded().unwrap();
        assert_eq!(g.basis_dims(), vec![inst.dim() / 2, inst.dim() / 2]);
        let report = check_all(&g);
        assert!(report.all_passed(), "{v}\n{report}");
        let na: Vec<_> = report.entries.iter().filter(|e| matches!(e.outcome, Outcome::NotApplicable { .. })).collect();
        if v == Variant::Tilde {
            assert!(na.is_empty(), "{na:?}");
        } else {
            assert!(na.iter().all(|e| e.axiom.starts_with("ribbon")));
        }
    }
}

#[test]
fn split_restricted_passes_every_axiom_at_p4() {
    let u = QuantumGroupInstance::restricted(4).unwrap();
    let report = check_all(&u.graded().unwrap());
    assert!(report.all_passed(), "{report}");
}

#[test]
fn idempotent_basis_round_trips() {
    let u = QuantumGroupInstance::tilde(2).unwrap();
    let (basis, h) = u.idempotent_basis_data().unwrap();
    let (vp, _) = u.ribbon_elements().unwrap();
    let v = u.to_tensor(&vp);
    assert_eq!(basis.to_pbw(&basis.from_pbw(&v)), v);
    assert_eq!(h.labels[basis.index(0, 0, 0, 1) as usize], "1_1");
    assert_eq!(basis.to_pbw(&basis.idempotent(0)), u.idempotents().unwrap()[0]);
}

#[test]
fn restricted_is_factorizable_and_tilde_is_not() {
    for p in [2, 3] {
        let u = QuantumGroupInstance::restricted(p).unwrap();
        let r = is_factorizable(&u.graded().unwrap()).unwrap();
        assert!(r.is_factorizable(), "U at p = {p}: {r:?}");
    }
    for p in [2, 4] {
        let t = QuantumGroupInstance::tilde(p).unwrap();
        let r = is_factorizable(&t.graded().unwrap()).unwrap();
        assert!(!r.is_factorizable(), "Ũ at p = {p}: {r:?}");
        assert_eq!(r.rank * 2, r.dim);
    }
}
