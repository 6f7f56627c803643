//! Which bead conventions give an invariant, and that they all agree.

mod common;

use bead_engine::{evaluate_diagram, BeadConventions, BeadEngine, DiscLegs, Mode, RLeg, Reversal};
use common::{load, values};
use diagram::reverse_component;
use quantum_sl2::Variant;

/// Whether an engine passes a handful of isotopy and move checks.
fn consistent(e: &BeadEngine) -> bool {
    let same = |a: &str, b: &str| values(e, &load(a), Mode::GradedInU) == values(e, &load(b), Mode::GradedInU);
    let zero = |a: &str| evaluate_diagram(e, &load(a), Mode::GradedInU).unwrap().is_zero();
    let reversible = |a: &str| {
        let d = load(a);
        (0..d.component_count()).all(|c| values(e, &reverse_component(&d, c).unwrap(), Mode::GradedInU) == values(e, &d, Mode::GradedInU))
    };
    same("unknot", "unknot_snake")
        && same("plus_one", "plus_one_ccw")
        && same("plus_one", "plus_one_braid")
        && same("hopf", "hopf_braid")
        && same("braid3_a", "braid3_b")
        && zero("dot_pierced_twice")
        && zero("plus_one_dotted")
        && reversible("hopf_01")
        && reversible("trefoil")
}

fn with(variant: Variant, p: u32, conv: BeadConventions) -> BeadEngine {
    BeadEngine::new(variant, p).unwrap().with_conventions(conv)
}

#[test]
fn default_conventions_are_consistent() {
    for (variant, p) in [(Variant::Small, 2), (Variant::Restricted, 2), (Variant::Small, 4)] {
        assert!(consistent(&with(variant, p, BeadConventions::default())), "{variant:?} at p = {p}");
    }
}

#[test]
fn changing_one_convention_breaks_invariance() {
    let d = BeadConventions::default();
    let variants = [
        BeadConventions { r_leg: RLeg::Over, ..d },
        BeadConventions { reversal: Reversal::Antipode, ..d },
        BeadConventions { disc_reversal: Reversal::InverseAntipode, ..d },
        BeadConventions { disc_legs: DiscLegs::RightToLeft, ..d },
        BeadConventions { cap_exponent: 1, ..d },
    ];
    for conv in variants {
        let broken = [(Variant::Small, 2), (Variant::Restricted, 2), (Variant::Small, 4)]
            .into_iter()
            .any(|(variant, p)| !consistent(&with(variant, p, conv)));
        assert!(broken, "{conv:?} passes every check");
    }
}

#[test]
fn consistent_conventions_give_the_same_invariant() {
    let settings = [(Variant::Small, 2), (Variant::Restricted, 2), (Variant::Small, 4)];
    let names = ["minus_one", "hopf_01", "trefoil", "plus_one_dotted", "dot_pierced_twice"];
    let survivors: Vec<BeadConventions> = BeadConventions::all()
        .into_iter()
        .filter(|&conv| settings.iter().all(|&(variant, p)| consistent(&with(variant, p, conv))))
        .collect();
    assert_eq!(survivors.len(), 8);
    for (variant, p) in settings {
        let base = with(variant, p, BeadConventions::default());
        for &conv in &survivors {
            let e = with(variant, p, conv);
            for name in names {
                let d = load(name);
                assert_eq!(values(&e, &d, Mode::GradedInU), values(&base, &d, Mode::GradedInU), "{name} with {conv:?}");
            }
        }
    }
}
