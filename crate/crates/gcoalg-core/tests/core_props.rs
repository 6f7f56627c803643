mod common;

use common::{function_algebra, group_algebra, indicators};
use cyclo_field::CycScalar;
use gcoalg_core::linalg::{rank, SparseRow};
use gcoalg_core::{check_all, split, FiniteAbelianGroup, GradedHopfData};
use proptest::prelude::*;

fn small_group() -> impl Strategy<Value = FiniteAbelianGroup> {
    prop::collection::vec(1u32..4, 0..3).prop_map(|f| FiniteAbelianGroup::new(f).unwrap())
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-2i64..3, c), r))
}

fn rows(m: &[Vec<i64>]) -> Vec<SparseRow> {
    m.iter()
        .map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(j, v)| (j as u32, CycScalar::from_int(1, *v))).collect())
        .collect()
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn function_algebras_split_into_valid_coalgebras(grp in small_group()) {
        let h = function_algebra(&grp);
        let g = split(&h, &grp, &indicators(&grp)).unwrap();
        prop_assert!(check_all(&g).all_passed());
        prop_assert_eq!(g.direct_sum(), h);
    }

    #[test]
    fn group_algebras_pass_when_trivially_graded(grp in small_group()) {
        let g = GradedHopfData::trivial(group_algebra(&grp)).unwrap();
        prop_assert!(check_all(&g).all_passed());
    }

    #[test]
    fn rank_is_invariant_under_transposition(m in matrix()) {
        prop_assert_eq!(rank(rows(&m)), rank(rows(&transpose(&m))));
    }

    #[test]
    fn repeated_rows_do_not_raise_rank(m in matrix()) {
        let mut doubled = m.clone();
        doubled.extend(m.iter().cloned());
        let r = rank(rows(&m));
        prop_assert_eq!(rank(rows(&doubled)), r);
        prop_assert!(r <= m.len().min(m[0].len()));
    }
}
