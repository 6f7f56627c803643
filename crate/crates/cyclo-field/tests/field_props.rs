use cyclo_field::{context, CycScalar, Rat};
use proptest::prelude::*;

const N: u32 = 24;

fn scalar() -> impl Strategy<Value = CycScalar> {
    prop::collection::vec((0u32..N, -9i64..=9, 1i64..=6), 0..5).prop_map(|terms| {
        let mut coeffs = vec![Rat::ZERO; N as usize];
        for (k, a, b) in terms {
            coeffs[k as usize] += &Rat::new(a, b);
        }
        CycScalar::from_coeffs(N, &coeffs)
    })
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn approx(x: &CycScalar) -> (f64, f64) {
    x.to_complex_with_error().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_idempotent(a in scalar()) {
        let again = CycScalar::from_coeffs(N, &a.coeffs());
        prop_assert_eq!(&again, &a);
        prop_assert!(a.terms().iter().all(|(k, c)| (*k as usize) < context(N).degree() && !c.is_zero()));
    }

    #[test]
    fn text_round_trip(a in scalar()) {
        let back: CycScalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn float_evaluation_is_a_ring_map(a in scalar(), b in scalar()) {
        let (pa, pb, pab) = (approx(&a), approx(&b), approx(&(&a * &b)));
        let expect = cmul(pa, pb);
        prop_assert!((pab.0 - expect.0).abs() < 1e-9 && (pab.1 - expect.1).abs() < 1e-9);
        let s = approx(&(&a + &b));
        prop_assert!((s.0 - pa.0 - pb.0).abs() < 1e-9 && (s.1 - pa.1 - pb.1).abs() < 1e-9);
    }

    #[test]
    fn powers_agree_with_repeated_products(a in scalar(), e in 0u64..6) {
        let mut acc = CycScalar::one(N);
        for _ in 0..e {
            acc = &acc * &a;
        }
        prop_assert_eq!(a.powu(e), acc);
    }
}
