use num_bigint::BigInt;
use num_rational::BigRational;
use pgst_core::arith::is_prime;
use pgst_core::{make_cos, verify_alternating_identity, AlternatingKind, CycloReal};
use proptest::prelude::*;

#[test]
fn float_values_match_cosines_up_to_200() {
    for m in 2..=200u64 {
        for r in 1..m {
            let x = make_cos(r, m).unwrap();
            let want = 2.0 * (r as f64 * std::f64::consts::PI / m as f64).cos();
            assert!((x.to_f64() - want).abs() < 1e-12, "2cos({r}π/{m})");
        }
    }
}

#[test]
fn antisymmetry() {
    for m in 2..=60u64 {
        for r in 1..m {
            assert_eq!(make_cos(m - r, m).unwrap(), -make_cos(r, m).unwrap());
        }
    }
}

#[test]
fn alternating_identities_up_to_100() {
    for p in (3..=100u64).filter(|&p| is_prime(p)) {
        assert!(verify_alternating_identity(AlternatingKind::Prime, p).unwrap());
        assert!(verify_alternating_identity(AlternatingKind::TwicePrime, p).unwrap());
    }
}

#[test]
fn spec_examples() {
    let one = CycloReal::from_integer(1, 5);
    assert_eq!(make_cos(1, 5).unwrap() - make_cos(2, 5).unwrap(), one);
    let r = CycloReal::from_integer(1, 10) - make_cos(2, 10).unwrap() + make_cos(4, 10).unwrap();
    assert!(r.is_zero());
    assert!(make_cos(2, 4).unwrap().is_zero());
    assert_eq!(make_cos(1, 3).unwrap().lift(15).unwrap(), make_cos(5, 15).unwrap());
    assert_eq!(make_cos(1, 4).unwrap().lift(8).unwrap(), make_cos(2, 8).unwrap());
    assert!(make_cos(1, 4).unwrap().lift(6).is_err());
    assert!(make_cos(0, 4).is_err());
    assert!(make_cos(4, 4).is_err());
}

fn element(m: u64) -> impl Strategy<Value = CycloReal> {
    prop::collection::vec((1..m, -4i64..=4), 1..4).prop_map(move |terms| {
        terms.into_iter().fold(CycloReal::zero(m), |acc, (r, k)| {
            &acc + &make_cos(r, m).unwrap().scale_int(&BigInt::from(k))
        })
    })
}

fn conductor() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 4, 5, 6, 7, 8, 9, 10, 12, 15])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(
        (x, y, z) in conductor().prop_flat_map(|m| (element(m), element(m), element(m))),
        num in -5i64..=5,
        den in 1i64..=5,
    ) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert!((&x - &x).is_zero());
        let q = BigRational::new(num.into(), den.into());
        prop_assert_eq!((&x + &y).scale(&q), &x.scale(&q) + &y.scale(&q));
        prop_assert!(x.is_real());
        let f = x.to_f64() + y.to_f64();
        prop_assert!(((&x + &y).to_f64() - f).abs() < 1e-9);
    }

    #[test]
    fn mixed_conductors_auto_lift(x in conductor().prop_flat_map(element), y in conductor().prop_flat_map(element)) {
        let s = &x + &y;
        prop_assert!((s.to_f64() - x.to_f64() - y.to_f64()).abs() < 1e-9);
        prop_assert!((&s - &y - x.clone()).is_zero());
    }

    #[test]
    fn lift_round_trip(m in 2u64..=30, r_frac in 0.0f64..1.0, k in 1u64..=6) {
        let r = 1 + ((m - 1) as f64 * r_frac) as u64 % (m - 1);
        let x = make_cos(r, m).unwrap();
        let lifted = x.lift(m * k).unwrap();
        prop_assert_eq!(&lifted, &make_cos(r * k, m * k).unwrap());
        prop_assert_eq!(lifted.conductor(), m * k);
        prop_assert!((lifted.to_f64() - x.to_f64()).abs() < 1e-12);
        prop_assert_eq!(x.lift(m).unwrap(), x);
    }
}
