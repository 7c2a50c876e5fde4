use num_bigint::BigInt;
use proptest::prelude::*;
use qsl2::laurent::{q, qbinom, qfact, qint};
use qsl2::{LaurentPoly, LaurentSeries, RationalQ};

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    (-6i64..6, prop::collection::vec(-5i64..=5, 0..6))
        .prop_map(|(low, cs)| LaurentPoly::from_coeffs(low, cs.into_iter().map(BigInt::from).collect()))
}

fn arb_nonzero() -> impl Strategy<Value = LaurentPoly> {
    arb_poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &LaurentPoly::one(), a);
    }

    #[test]
    fn bar_is_ring_involution(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        prop_assert_eq!(a.bar().at_one(), a.at_one());
    }

    #[test]
    fn evaluation_at_one_is_multiplicative(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!((&a * &b).at_one(), a.at_one() * b.at_one());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in arb_poly(), d in arb_nonzero()) {
        prop_assert_eq!((&a * &d).div_exact(&d).unwrap(), a);
    }

    #[test]
    fn text_round_trip(a in arb_poly()) {
        let back: LaurentPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn rational_field(a in arb_nonzero(), b in arb_nonzero(), c in arb_nonzero(), d in arb_nonzero()) {
        let x = RationalQ::new(a.clone(), b.clone()).unwrap();
        let y = RationalQ::new(c, d).unwrap();
        prop_assert_eq!(&(&x * &y) / &y, x.clone());
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!((&x * &y).bar(), &x.bar() * &y.bar());
        prop_assert_eq!(&x * &x.inverse().unwrap(), RationalQ::one());
        prop_assert_eq!(RationalQ::from_poly(a.clone()) / RationalQ::from_poly(b.clone()), x);
    }

    #[test]
    fn series_inverse(a in arb_poly(), order in 1i64..20) {
        // unit constant term so the inverse is a power series
        let p = &LaurentPoly::one() + &a.shift(1 - a.low_exp().unwrap_or(1));
        let s = LaurentSeries::from_poly(&p, order);
        let inv = s.inverse().unwrap();
        prop_assert_eq!(s.mul(&inv), LaurentSeries::one(order));
    }

    #[test]
    fn quantum_numbers(n in 0usize..9, k in 0usize..9) {
        prop_assert_eq!(qint(n).bar(), qint(n));
        prop_assert_eq!(qint(n).at_one(), BigInt::from(n));
        let (n, k) = (n as i64, k.min(n) as i64);
        prop_assert_eq!(qbinom(n, k), qbinom(n, n - k));
        if n >= 1 && k >= 1 {
            // q-Pascal rule
            let rhs = &qbinom(n - 1, k - 1).shift(n - k) + &qbinom(n - 1, k).shift(-k);
            prop_assert_eq!(qbinom(n, k), rhs);
        }
        let f = &(&qfact(k as usize) * &qfact((n - k) as usize)) * &qbinom(n, k);
        prop_assert_eq!(f, qfact(n as usize));
    }
}

#[test]
fn quantum_integer_examples() {
    assert_eq!(qint(3), LaurentPoly::from_terms([(-2, 1), (0, 1), (2, 1)]));
    assert_eq!(&q(1) - &q(-1), LaurentPoly::from_terms([(1, 1), (-1, -1)]));
    assert!(qbinom(2, 3).is_zero());
}
