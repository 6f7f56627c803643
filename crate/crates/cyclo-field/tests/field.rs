use cyclo_field::{gauss_sum, gauss_sum_closed_form, named_constants, CycScalar, FieldError, Rat};

fn close(a: (f64, f64), b: (f64, f64), tol: f64) -> bool {
    (a.0 - b.0).abs() < tol && (a.1 - b.1).abs() < tol
}

fn float_gauss(p: u32, sign: f64, d: f64) -> (f64, f64) {
    let mut re = 0.0;
    let mut im = 0.0;
    for n in 0..4 * p {
        let n = n as f64;
        let ang = std::f64::consts::PI / (2.0 * p as f64) * (sign * n * n + d * n);
        re += ang.cos();
        im += ang.sin();
    }
    (re, im)
}

#[test]
fn t_has_order_4p() {
    for p in 2..=6 {
        let c = named_constants(p);
        assert_eq!(c.t.pow(4 * p as i64).unwrap(), CycScalar::one(c.n));
        for k in 1..4 * p as u64 {
            assert!(!c.t.powu(k).is_one());
        }
    }
}

#[test]
fn zeta_has_exact_order_n() {
    let n = 24;
    let z = CycScalar::zeta(n);
    assert!(z.powu(24).is_one());
    for k in 1..24 {
        assert!(!z.powu(k).is_one(), "zeta^{k} = 1");
    }
}

#[test]
fn ring_identity_one_plus_t_times_one_minus_t() {
    let c = named_constants(3);
    let one = CycScalar::one(c.n);
    assert_eq!(&(&one + &c.t) * &(&one - &c.t), &one - &(&c.t * &c.t));
}

#[test]
fn inverse_of_q_is_q_to_2p_minus_1() {
    for p in 2..=6 {
        let c = named_constants(p);
        assert_eq!(c.q.inv().unwrap(), c.q.powu(2 * p as u64 - 1));
    }
}

#[test]
fn division_by_zero_is_an_error() {
    let z = CycScalar::zero(16);
    assert_eq!(z.inv(), Err(FieldError::DivisionByZero));
    assert_eq!(CycScalar::one(16).div(&z), Err(FieldError::DivisionByZero));
    assert_eq!(z.pow(-2), Err(FieldError::DivisionByZero));
}

#[test]
fn square_roots_are_exact_and_positive() {
    for p in 2..=6 {
        let c = named_constants(p);
        assert_eq!(c.sqrt_p.powu(2), CycScalar::from_int(c.n, p as i64));
        assert_eq!(c.sqrt_2.powu(2), CycScalar::from_int(c.n, 2));
        assert_eq!(c.sqrt_2p.powu(2), CycScalar::from_int(c.n, 2 * p as i64));
        let sp = c.sqrt_p.to_complex(12).unwrap();
        assert!(close(sp, ((p as f64).sqrt(), 0.0), 1e-12));
        let s2p = c.sqrt_2p.to_complex(12).unwrap();
        assert!(close(s2p, ((2.0 * p as f64).sqrt(), 0.0), 1e-12));
    }
}

#[test]
fn sqrt_4_is_two() {
    let c = named_constants(4);
    assert_eq!(c.sqrt_p, CycScalar::from_int(c.n, 2));
}

#[test]
fn sqrt_2_matches_float_gauss_sum() {
    let g = float_gauss(2, 1.0, 0.0);
    // |G| / |2(1+i)| is sqrt(p)
    let approx = (g.0 * g.0 + g.1 * g.1).sqrt() / (2.0 * 2f64.sqrt());
    let exact = named_constants(2).sqrt_p.to_complex(12).unwrap();
    assert!((approx - 1.41421356).abs() < 1e-8);
    assert!(close(exact, (approx, 0.0), 1e-12));
}

#[test]
fn gauss_sums_vanish_for_odd_d() {
    for p in 2..=6 {
        for d in (1..4 * p as i64).step_by(2) {
            assert!(gauss_sum(p, 1, d).is_zero());
            assert!(gauss_sum(p, -1, d).is_zero());
        }
    }
}

#[test]
fn gauss_sums_match_closed_form_and_float_oracle() {
    for p in 2..=6 {
        for d in 0..4 * p as i64 {
            for sign in [1i64, -1] {
                let g = gauss_sum(p, sign, d);
                assert_eq!(g, gauss_sum_closed_form(p, sign, d), "p={p} d={d} sign={sign}");
                let f = float_gauss(p, sign as f64, d as f64);
                assert!(close(g.to_complex(9).unwrap(), f, 1e-9));
            }
        }
    }
}

#[test]
fn to_complex_of_units() {
    let c = named_constants(2);
    assert!(close(CycScalar::one(c.n).to_complex(12).unwrap(), (1.0, 0.0), 1e-15));
    assert!(close(c.i.to_complex(12).unwrap(), (0.0, 1.0), 1e-15));
    let h = std::f64::consts::FRAC_1_SQRT_2;
    assert!(close(c.t.to_complex(12).unwrap(), (h, h), 1e-12));
    assert!((h - 0.70710678).abs() < 1e-8);
}

#[test]
fn conjugation_inverts_roots_of_unity() {
    let c = named_constants(5);
    assert_eq!(c.t.conj(), c.t.inv().unwrap());
    assert_eq!(c.sqrt_p.conj(), c.sqrt_p);
    assert_eq!(c.i.conj(), -&c.i);
}

#[test]
fn rational_scalars_adapt_to_order() {
    let c = named_constants(2);
    let half = CycScalar::rational(Rat::new(1, 2));
    let x = &half * &c.q;
    assert_eq!(x.order(), 16);
    assert_eq!(&x + &half, &c.q.scale(&Rat::new(1, 2)) + &CycScalar::from_rat(16, Rat::new(1, 2)));
    assert_eq!(half, CycScalar::from_rat(16, Rat::new(1, 2)));
}

#[test]
fn serde_round_trip() {
    let x: CycScalar = "(2 + z - 5*z^7)/3 [N=16]".parse().unwrap();
    let j = serde_json::to_string(&x).unwrap();
    assert_eq!(j, "\"(2 + z - 5*z^7)/3 [N=16]\"");
    let back: CycScalar = serde_json::from_str(&j).unwrap();
    assert_eq!(back, x);
}
