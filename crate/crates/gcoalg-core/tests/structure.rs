mod common;

use common::{function_algebra, group_algebra, indicators};
use cyclo_field::CycScalar;
use gcoalg_core::{
    check_all, check_hopf_axioms, check_ribbon_axioms, check_unimodular_axioms, drinfeld_rank, is_factorizable, split,
    CoreError, FiniteAbelianGroup, GradedHopfData, Outcome, Tensor,
};

#[test]
fn group_algebra_of_z2_passes_every_axiom_when_trivially_graded() {
    let h = group_algebra(&FiniteAbelianGroup::z2());
    let g = GradedHopfData::trivial(h).unwrap();
    let report = check_all(&g);
    assert!(report.all_passed(), "{report}");
    assert_eq!(report.not_applicable(), 0);
}

#[test]
fn trivial_split_returns_the_algebra_in_degree_zero() {
    let h = group_algebra(&FiniteAbelianGroup::z2());
    let g = split(&h, &FiniteAbelianGroup::trivial(), &[h.unit.clone()]).unwrap();
    assert_eq!(g.basis_dims(), vec![2]);
    assert_eq!(g.direct_sum(), h);
}

#[test]
fn function_algebra_splits_over_its_group() {
    for factors in [vec![2], vec![3], vec![2, 2], vec![4]] {
        let grp = FiniteAbelianGroup::new(factors).unwrap();
        let h = function_algebra(&grp);
        let g = split(&h, &grp, &indicators(&grp)).unwrap();
        assert_eq!(g.basis_dims(), vec![1; grp.order()]);
        let report = check_all(&g);
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.axiom("hopf 3").len(), grp.order().pow(3));
    }
}

#[test]
fn zero_coproduct_component_breaks_the_counit_axiom() {
    let grp = FiniteAbelianGroup::z2();
    let g = split(&function_algebra(&grp), &grp, &indicators(&grp)).unwrap().with_zero_coproduct(0, 1);
    let report = check_hopf_axioms(&g);
    let counit = report.axiom("hopf 4");
    let bad: Vec<_> = counit.iter().filter(|e| !e.is_ok()).collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].instance, "α=1");
    match &bad[0].outcome {
        Outcome::Fail { witness } => assert!(witness.contains("δ1"), "{witness}"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn swapped_idempotents_are_rejected() {
    let grp = FiniteAbelianGroup::z2();
    let h = function_algebra(&grp);
    let mut idems = indicators(&grp);
    idems.swap(0, 1);
    match split(&h, &grp, &idems) {
        Err(CoreError::NotASplittingSystem { equation, .. }) => assert!(equation.contains("eps"), "{equation}"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn non_diagonal_splitting_is_reported() {
    let grp = FiniteAbelianGroup::z2();
    let h = group_algebra(&grp);
    let half = CycScalar::from_rat(1, cyclo_field::Rat::new(1, 2));
    let mut e0 = Tensor::zero(1);
    e0.add_term(&[0], half.clone());
    e0.add_term(&[1], half.clone());
    let mut e1 = Tensor::zero(1);
    e1.add_term(&[0], half.clone());
    e1.add_term(&[1], -half);
    assert!(matches!(split(&h, &grp, &[e0, e1]), Err(CoreError::NotDiagonal(_))));
}

#[test]
fn scaled_ribbon_element_breaks_the_normalization() {
    let grp = FiniteAbelianGroup::z2();
    let g = split(&function_algebra(&grp), &grp, &indicators(&grp)).unwrap();
    let v = g.tables().ribbon.clone().unwrap();
    let two = CycScalar::from_int(1, 2);
    let half = CycScalar::from_rat(1, cyclo_field::Rat::new(1, 2));
    let g = g.with_ribbon(v.scale(&two), v.scale(&half));
    let report = check_ribbon_axioms(&g);
    assert!(!report.axiom("ribbon 6")[0].is_ok());
    assert!(report.axiom("ribbon invertibility").iter().all(|e| e.is_ok()));
}

#[test]
fn wrong_integral_is_caught() {
    let grp = FiniteAbelianGroup::z2();
    let g = split(&function_algebra(&grp), &grp, &indicators(&grp)).unwrap();
    let g = g.with_integral(vec![CycScalar::one(1), CycScalar::zero(1)]);
    let report = check_unimodular_axioms(&g);
    assert!(!report.all_passed());
}

#[test]
fn direct_sum_round_trips() {
    let grp = FiniteAbelianGroup::new(vec![2, 3]).unwrap();
    let h = function_algebra(&grp);
    let g = split(&h, &grp, &indicators(&grp)).unwrap();
    let back = g.direct_sum();
    assert_eq!(back, h);
    assert_eq!(split(&back, &grp, &indicators(&grp)).unwrap(), g);
    let mut sum = Tensor::zero(1);
    for a in grp.elements() {
        sum.add_assign(&g.unit(a));
    }
    assert_eq!(back.unit, sum);
    for x in 1..back.dim() as u32 {
        assert!(back.epsilon(&back.basis_element(x)).is_zero());
    }
}

#[test]
fn factorizability_of_textbook_examples() {
    let grp = FiniteAbelianGroup::z2();
    let g = split(&function_algebra(&grp), &grp, &indicators(&grp)).unwrap();
    let r = is_factorizable(&g).unwrap();
    assert_eq!((r.rank, r.dim), (1, 2));
    assert!(!r.is_factorizable());
    let trivial = GradedHopfData::trivial(group_algebra(&FiniteAbelianGroup::trivial())).unwrap();
    assert!(is_factorizable(&trivial).unwrap().is_factorizable());
}

#[test]
fn drinfeld_rank_of_identity_matrix_is_full() {
    let mut m = Tensor::zero(2);
    for x in 0..5 {
        m.add_term(&[x, x], CycScalar::zeta(8));
    }
    assert!(drinfeld_rank(&m, 5).is_factorizable());
}

#[test]
fn json_round_trip() {
    let grp = FiniteAbelianGroup::z2();
    let g = split(&function_algebra(&grp), &grp, &indicators(&grp)).unwrap();
    let text = g.to_json();
    assert_eq!(GradedHopfData::from_json(&text).unwrap(), g);
    assert!(matches!(GradedHopfData::from_json("{"), Err(CoreError::Format(_))));
}

#[test]
fn inhomogeneous_tables_are_rejected() {
    let grp = FiniteAbelianGroup::z2();
    let h = group_algebra(&grp);
    assert!(matches!(GradedHopfData::new(grp, vec![0, 1], h), Err(CoreError::Inhomogeneous(_))));
}
