use proptest::prelude::*;
use qsl2::laurent::q;
use qsl2::tensor_rep::{act, act_divided, act_divided_comult, form_irr, Generator, ModuleShape, TensorVector};
use qsl2::LaurentPoly;

/// A shape with 1-3 factors of dimension up to 4 and a basis vector in it.
fn arb_basis_vector() -> impl Strategy<Value = TensorVector> {
    prop::collection::vec(0usize..=3, 1..=3).prop_flat_map(|dims| {
        let idx: Vec<_> = dims.iter().map(|&d| 0..=d).collect();
        (Just(dims), idx).prop_map(|(dims, idx)| TensorVector::basis(ModuleShape(dims), &idx).unwrap())
    })
}

fn kk(v: &TensorVector) -> TensorVector {
    act(Generator::K, v).minus(&act(Generator::Kinv, v)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn k_conjugation(v in arb_basis_vector()) {
        let ke = act(Generator::K, &act(Generator::E, &act(Generator::Kinv, &v)));
        prop_assert_eq!(ke, act(Generator::E, &v).scale_poly(&q(2)));
        let kf = act(Generator::K, &act(Generator::F, &act(Generator::Kinv, &v)));
        prop_assert_eq!(kf, act(Generator::F, &v).scale_poly(&q(-2)));
        prop_assert_eq!(act(Generator::K, &act(Generator::Kinv, &v)), v);
    }

    #[test]
    fn commutator(v in arb_basis_vector()) {
        let ef = act(Generator::E, &act(Generator::F, &v));
        let fe = act(Generator::F, &act(Generator::E, &v));
        let lhs = ef.minus(&fe).unwrap().scale_poly(&(&q(1) - &q(-1)));
        prop_assert_eq!(lhs, kk(&v));
    }

    #[test]
    fn divided_powers_agree(v in arb_basis_vector(), r in 0usize..=4) {
        for g in [Generator::E, Generator::F] {
            prop_assert_eq!(act_divided(g, r, &v).unwrap(), act_divided_comult(g, r, &v).unwrap());
        }
    }
}

/// `<v_{t+a}, E^(a) v_t> = q^{-(2at-ak+a²)} <F^(a) v_{t+a}, v_t>`: the scalar
/// leaves the first slot conjugated. The bilinear reading, with the scalar
/// taken out unchanged, fails whenever the exponent is nonzero.
#[test]
fn adjointness_semilinear() {
    let mut linear_failures = 0;
    for k in 0..=6 {
        let v = |x: usize| TensorVector::basis(ModuleShape(vec![k]), &[x]).unwrap();
        for t in 0..=k {
            for a in 0..=k - t {
                let e = (2 * a * t + a * a) as i64 - (a * k) as i64;
                let ea = act_divided(Generator::E, a, &v(t)).unwrap();
                let fa = act_divided(Generator::F, a, &v(t + a)).unwrap();
                let lhs = form_irr(&v(t + a), &ea).unwrap();
                let rhs = form_irr(&fa, &v(t)).unwrap();
                assert_eq!(lhs, rhs.mul_poly(&q(-e)), "k={k} t={t} a={a}");
                // F-version
                assert_eq!(form_irr(&v(t), &fa).unwrap(), form_irr(&ea, &v(t + a)).unwrap().mul_poly(&q(e)));
                if lhs != rhs.mul_poly(&q(e)) {
                    linear_failures += 1;
                }
            }
        }
    }
    assert!(linear_failures > 0);
}

#[test]
fn highest_weight_action() {
    let v = TensorVector::basis(ModuleShape(vec![3]), &[1]).unwrap();
    let e = act(Generator::E, &v);
    assert_eq!(e.coeff(&[2]).to_laurent().unwrap(), qsl2::laurent::qint(2));
    let top = TensorVector::basis(ModuleShape(vec![3]), &[3]).unwrap();
    assert!(act(Generator::E, &top).is_zero());
    assert_eq!(act(Generator::K, &top), top.scale_poly(&LaurentPoly::q_pow(3)));
}
