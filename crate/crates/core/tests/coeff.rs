use akalg::coeff::{EvalPoint, Factored, Monomial, Poly, RatFunc};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Small polynomials in `q, Q_1, Q_2`.
fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u16..3, 0u16..3, 0u16..3), -3i64..=3), 0..4).prop_map(|terms| {
        Poly::from_terms(
            terms
                .into_iter()
                .map(|((a, b, c), k)| (Monomial::var(0, a).mul(&Monomial::var(1, b)).mul(&Monomial::var(2, c)), BigInt::from(k)))
                .collect(),
        )
    })
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| RatFunc::new(n, d).ok())
}

fn point() -> impl Strategy<Value = EvalPoint> {
    (1i64..=7, -5i64..=5, -5i64..=5).prop_filter_map("nonzero values", |(q, a, b)| {
        let r = |v: i64| BigRational::from_integer(v.into());
        (a != 0 && b != 0).then(|| EvalPoint::new(r(q + 1), vec![r(a), r(b)]).ok()).flatten()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(a in ratfunc(), c in poly()) {
        prop_assume!(!c.is_zero());
        let scaled = RatFunc::new(a.numer().mul(&c), a.denom().mul(&c)).unwrap();
        prop_assert_eq!(scaled.numer(), a.numer());
        prop_assert_eq!(scaled.denom(), a.denom());
        prop_assert!(a.denom().leading_coeff_sign().is_gt());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc(), b in ratfunc(), p in point()) {
        let (Ok(x), Ok(y)) = (a.evaluate(&p), b.evaluate(&p)) else { return Ok(()) };
        prop_assert_eq!((&a + &b).evaluate(&p).unwrap(), &x + &y);
        prop_assert_eq!((&a * &b).evaluate(&p).unwrap(), &x * &y);
    }

    #[test]
    fn prime_involution_squares_to_identity(a in ratfunc()) {
        prop_assert_eq!(a.prime_involution(2).prime_involution(2), a.clone());
        prop_assert_eq!(a.permute_params(&[2, 1]).permute_params(&[2, 1]), a);
    }

    #[test]
    fn factored_products_match_direct_expansion(
        factors in prop::collection::vec((-2i64..=3, 1usize..=2, -2i64..=3, 1usize..=2, -2i64..=2), 0..6),
        qint in prop::collection::vec((1u32..=5, -2i64..=2), 0..3),
    ) {
        let mut f = Factored::one();
        let mut direct = RatFunc::one();
        for &(a, s, b, t, e) in &factors {
            if s == t && a == b {
                continue;
            }
            f.mul_binomial(a, s, b, t, e);
            let bin = &RatFunc::q_mono(a, s) - &RatFunc::q_mono(b, t);
            direct = &direct * &bin.pow(e).unwrap();
        }
        for &(h, e) in &qint {
            f.mul_q_int(h, e);
            direct = &direct * &akalg::coeff::q_int(h as i64).pow(e).unwrap();
        }
        let got = f.to_ratfunc();
        prop_assert_eq!(got.numer(), direct.numer());
        prop_assert_eq!(got.denom(), direct.denom());
    }
}

#[test]
fn big_rational_helpers_round_trip() {
    let x = RatFunc::from_rational(&BigRational::new(3.into(), (-6).into()));
    assert_eq!(x, RatFunc::from_int(-1).checked_div(&RatFunc::from_int(2)).unwrap());
    assert!(RatFunc::zero().inv().is_err());
    assert!(!BigRational::one().is_zero());
}
