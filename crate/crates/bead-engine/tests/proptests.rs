//! Randomized checks on closures of short braids at `p = 2`.

mod common;

use bead_engine::{collect, collect_naive, decorate, presentation, BeadEngine, Mode};
use common::{braid_text, values};
use diagram::{parse, reverse_component};
use proptest::prelude::*;
use quantum_sl2::Variant;

fn braid() -> impl Strategy<Value = (usize, Vec<(usize, bool)>)> {
    (2usize..=3).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n - 1, any::<bool>()), 0..5)))
}

fn engine(small: bool) -> BeadEngine {
    BeadEngine::new(if small { Variant::Small } else { Variant::Restricted }, 2).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cancelling_crossings_leave_the_invariant_unchanged((n, word) in braid(), at in 0usize..6, i in 0usize..2, pos in any::<bool>(), small in any::<bool>()) {
        let e = engine(small);
        let i = i % (n - 1);
        let at = at.min(word.len());
        let mut longer = word.clone();
        longer.splice(at..at, [(i, pos), (i, !pos)]);
        let a = values(&e, &parse(&braid_text(n, &word)).unwrap(), Mode::GradedInU);
        let b = values(&e, &parse(&braid_text(n, &longer)).unwrap(), Mode::GradedInU);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn conjugate_braids_have_equal_closures((n, word) in braid(), shift in 0usize..5, small in any::<bool>()) {
        prop_assume!(!word.is_empty());
        let e = engine(small);
        let d = parse(&braid_text(n, &word)).unwrap();
        let mut rotated = word.clone();
        rotated.rotate_left(shift % word.len());
        let r = parse(&braid_text(n, &rotated)).unwrap();
        let (a, b) = (values(&e, &d, Mode::GradedInU), values(&e, &r, Mode::GradedInU));
        prop_assume!(d.trace().anchors() == r.trace().anchors());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn contraction_matches_expansion((n, word) in braid(), small in any::<bool>()) {
        prop_assume!(word.len() <= 3);
        let e = engine(small);
        let dd = decorate(&e, &parse(&braid_text(n, &word)).unwrap()).unwrap();
        prop_assert_eq!(collect(&e, &dd).tensor.sorted_terms(), collect_naive(&e, &dd).tensor.sorted_terms());
    }

    #[test]
    fn beads_stay_in_u((n, word) in braid()) {
        let e = engine(false);
        let d = parse(&braid_text(n, &word)).unwrap();
        prop_assert!(!presentation(&e, &d).unwrap().has_odd_cartan_power(&e));
        prop_assert_eq!(values(&e, &d, Mode::GradedInU), values(&e, &d, Mode::FullTilde));
    }

    #[test]
    fn reversal_leaves_the_invariant_unchanged((n, word) in braid(), c in 0usize..3, small in any::<bool>()) {
        let e = engine(small);
        let d = parse(&braid_text(n, &word)).unwrap();
        let r = reverse_component(&d, c % d.component_count()).unwrap();
        prop_assert_eq!(values(&e, &d, Mode::GradedInU), values(&e, &r, Mode::GradedInU));
    }
}
