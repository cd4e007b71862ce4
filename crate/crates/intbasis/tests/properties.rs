use intbasis::ring::{crt_lift, FqT, Integers, Pid};
use intbasis::upoly::{format_poly, parse_poly};
use num_bigint::BigInt;
use proptest::prelude::*;

proptest! {
    #[test]
    fn z_poly_format_round_trip(c in prop::collection::vec(-1000i64..1000, 1..8)) {
        let r = Integers;
        let mut f: Vec<BigInt> = c.into_iter().map(BigInt::from).collect();
        while f.last().is_some_and(|x| *x == BigInt::from(0)) {
            f.pop();
        }
        let s = format_poly(&r, &f);
        prop_assert_eq!(parse_poly(&r, &s).unwrap(), f);
    }

    #[test]
    fn fqt_json_round_trip(c in prop::collection::vec(0i64..5, 0..6)) {
        let r = FqT::new(5);
        let a = r.poly(&c);
        prop_assert_eq!(r.from_json(&r.to_json(&a)), Some(a));
    }

    #[test]
    fn z_reduce_is_idempotent(a in -100000i64..100000, m in 1i64..500) {
        let r = Integers;
        let (a, m) = (BigInt::from(a), BigInt::from(m));
        let once = r.reduce(&a, &m);
        prop_assert_eq!(r.reduce(&once, &m), once.clone());
        prop_assert!(r.divides(&m, &r.sub(&a, &once)));
    }

    #[test]
    fn crt_lift_meets_every_congruence(a in 0i64..1000, b in 0i64..1000) {
        let r = Integers;
        let pairs = vec![(BigInt::from(a), BigInt::from(8)), (BigInt::from(b), BigInt::from(125))];
        let x = crt_lift(&r, &pairs);
        for (c, m) in &pairs {
            prop_assert!(r.divides(m, &r.sub(&x, c)));
        }
    }
}
