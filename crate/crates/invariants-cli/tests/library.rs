//! Library-level properties of the invariant computations.

use bead_engine::Mode;
use invariants_cli::corpus::{load, CORPUS};
use invariants_cli::{boundary_invariant, parse_omega, parse_scalar, Calculator, CliError, StructureKind, VariantChoice};
use proptest::prelude::*;

fn calc(choice: VariantChoice) -> Calculator {
    Calculator::new(choice, 2, Mode::GradedInU).unwrap()
}

#[test]
fn unrefined_sum_agrees_between_code_paths() {
    for choice in [VariantChoice::Restricted, VariantChoice::Small] {
        let c = calc(choice);
        for (name, _) in CORPUS {
            let d = load(name);
            assert_eq!(c.unrefined(&d).unwrap(), c.unrefined_by_relabeling(&d).unwrap(), "{name}");
        }
    }
}

#[test]
fn zero_labels_of_u_give_the_small_invariant() {
    let (u, s) = (calc(VariantChoice::Restricted), calc(VariantChoice::Small));
    let d = load("unknot");
    assert_eq!(u.refined_at(&d, &[0]).unwrap(), s.unrefined(&d).unwrap());
}

#[test]
fn structure_kind_follows_p() {
    assert_eq!(StructureKind::for_p(4).unwrap(), StructureKind::Spin);
    assert_eq!(StructureKind::for_p(6).unwrap(), StructureKind::Cohomological);
    assert!(matches!(StructureKind::for_p(5), Err(CliError::OddP(5))));
}

#[test]
fn boundary_invariant_rejects_bad_sublinks() {
    let c = Calculator::new(VariantChoice::Restricted, 2, Mode::GradedInU).unwrap();
    let err = boundary_invariant(&c, &load("plus_one"), &[1], None).unwrap_err();
    assert!(matches!(err, CliError::NotEven(_)));
    let err = boundary_invariant(&c, &load("plus_one"), &[0], Some(StructureKind::Spin)).unwrap_err();
    assert!(matches!(err, CliError::StructureKindMismatch { p: 2, .. }));
    let s = calc(VariantChoice::Small);
    assert!(matches!(boundary_invariant(&s, &load("plus_one"), &[0], None), Err(CliError::Unsupported(_))));
}

#[test]
fn boundary_invariant_of_the_sphere_is_one() {
    let c = Calculator::new(VariantChoice::Restricted, 2, Mode::GradedInU).unwrap();
    for name in ["plus_one", "minus_one"] {
        assert!(boundary_invariant(&c, &load(name), &[0], None).unwrap().value.is_one(), "{name}");
    }
}

#[test]
fn scalars_parse() {
    let c = calc(VariantChoice::Small);
    assert_eq!(parse_scalar(&c, "i").unwrap(), c.i_pow(1));
    assert_eq!(parse_scalar(&c, "i^3").unwrap(), parse_scalar(&c, "-i").unwrap());
    assert_eq!(parse_scalar(&c, "z^4").unwrap(), c.i_pow(1));
    assert!((&parse_scalar(&c, "-1").unwrap() + &c.one()).is_zero());
    assert!(parse_scalar(&c, "2").is_err());
}

proptest! {
    #[test]
    fn omega_round_trips(bits in prop::collection::vec(0u32..2, 0..8), commas in any::<bool>()) {
        let text: String = if commas {
            bits.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        } else {
            bits.iter().map(u32::to_string).collect()
        };
        prop_assert_eq!(parse_omega(&text).unwrap(), bits);
    }

    #[test]
    fn omega_rejects_other_digits(bad in 2u32..10) {
        let text = format!("0,{bad}");
        prop_assert!(parse_omega(&text).is_err());
    }
}
