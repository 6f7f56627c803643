//! Adjoint action, the Cartan part's action, and transmutation.

use gcoalg_core::Tensor;
use quantum_sl2::QuantumGroupInstance;

#[test]
fn cartan_generator_acts_by_q_to_the_degree() {
    let t = QuantumGroupInstance::tilde(3).unwrap();
    for x in 0..t.dim() as u32 {
        let m = t.engine().monomial(x);
        let y = t.element(m.a, m.b, m.c as i64);
        let acted = t.adjoint_action(&t.k(), &y).unwrap();
        assert_eq!(acted, y.scale(&t.consts().q(m.a as i64 - m.b as i64)));
    }
}

#[test]
fn adjoint_action_preserves_u_inside_tilde() {
    let t = QuantumGroupInstance::tilde(2).unwrap();
    for x in 0..t.dim() as u32 {
        for y in 0..t.dim() as u32 {
            if t.engine().monomial(y).c % 2 == 1 {
                continue;
            }
            let acted = t.adjoint_tensor(&Tensor::basis(&[x], t.one_scalar()), &Tensor::basis(&[y], t.one_scalar()));
            assert!(t.restrict_to_restricted(&acted).is_ok());
        }
    }
}

fn act_first_leg(t: &QuantumGroupInstance, d: &Tensor, y: &Tensor) -> Tensor {
    let mut out = Tensor::zero(2);
    for (k, c) in d.iter() {
        let acted = t.adjoint_tensor(&Tensor::basis(&[k[0]], c.clone()), y);
        out.add_assign(&acted.outer(&Tensor::basis(&[k[1]], t.one_scalar())));
    }
    out
}

#[test]
fn cartan_part_acting_on_one_leg() {
    let t = QuantumGroupInstance::tilde(2).unwrap();
    let d = t.diagonal_part().unwrap();
    for x in (0..t.dim() as u32).filter(|x| t.engine().monomial(*x).c % 2 == 0) {
        let m = t.engine().monomial(x);
        let y = t.basis(m.a, m.b, m.c as i64);
        let degree = m.a as i64 - m.b as i64;
        assert_eq!(act_first_leg(&t, &d, &y), y.outer(&t.basis(0, 0, 2 * degree)), "{m}");
    }
}

#[test]
fn cartan_part_acting_on_both_legs() {
    let t = QuantumGroupInstance::tilde(2).unwrap();
    let d = t.diagonal_part().unwrap();
    let even: Vec<u32> = (0..t.dim() as u32).filter(|x| t.engine().monomial(*x).c % 2 == 0).collect();
    for &x in &even {
        for &y in &even {
            let (mx, my) = (t.engine().monomial(x), t.engine().monomial(y));
            let (bx, by) = (Tensor::basis(&[x], t.one_scalar()), Tensor::basis(&[y], t.one_scalar()));
            let mut lhs = Tensor::zero(2);
            for (k, c) in d.iter() {
                let a1 = t.adjoint_tensor(&Tensor::basis(&[k[0]], c.clone()), &bx);
                let a2 = t.adjoint_tensor(&Tensor::basis(&[k[1]], t.one_scalar()), &by);
                lhs.add_assign(&a1.outer(&a2));
            }
            let dx = mx.a as i64 - mx.b as i64;
            let dy = my.a as i64 - my.b as i64;
            assert_eq!(lhs, bx.outer(&by).scale(&t.consts().q(2 * dx * dy)), "{mx}, {my}");
        }
    }
}

#[test]
fn transmutation_in_u_matches_the_r_matrix_version_in_tilde() {
    let u = QuantumGroupInstance::restricted(2).unwrap();
    let t = QuantumGroupInstance::tilde(2).unwrap();
    for x in 0..u.dim() as u32 {
        let xt = Tensor::basis(&[x], u.one_scalar());
        let lifted = t.embed_restricted(&xt).unwrap();
        let coproduct = t.embed_restricted(&u.transmuted_coproduct(&xt)).unwrap();
        assert_eq!(coproduct, t.transmuted_coproduct_via_r(&lifted).unwrap(), "coproduct at {x}");
        let antipode = t.embed_restricted(&u.transmuted_antipode(&xt)).unwrap();
        assert_eq!(antipode, t.transmuted_antipode_via_r(&lifted).unwrap(), "antipode at {x}");
        assert_eq!(u.transmuted_antipode_inverse(&u.transmuted_antipode(&xt)), xt);
        assert_eq!(u.transmuted_antipode(&u.transmuted_antipode_inverse(&xt)), xt);
    }
}

#[test]
fn transmuted_antipode_fixes_the_cointegral() {
    for p in [2, 3] {
        let u = QuantumGroupInstance::restricted(p).unwrap();
        let l = u.to_tensor(&u.cointegral());
        assert_eq!(u.transmuted_antipode(&l), l);
    }
}

#[test]
fn transmuted_coproduct_is_counital() {
    let u = QuantumGroupInstance::restricted(3).unwrap();
    for x in (0..u.dim() as u32).step_by(5) {
        let xt = Tensor::basis(&[x], u.one_scalar());
        let d = u.transmuted_coproduct(&xt);
        assert_eq!(u.counit_on(&d, 0), xt);
        assert_eq!(u.counit_on(&d, 1), xt);
    }
}
