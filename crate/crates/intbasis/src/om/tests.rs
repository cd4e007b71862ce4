use super::*;
use crate::ring::{FqT, Integers};
use crate::upoly::parse_poly;
use num_bigint::BigInt;

pub(crate) const DEG13: &str = "x^13 + 3*(5)^8*x^11 + 18753*(5)^12*x^10 + 781253*(5)^16*x^9 + 244178131*(5)^20*x^8 + 783631254*(5)^24*x^7 + 14894940628*(5)^28*x^6 + 763967225003*(5)^32*x^5 + 193053764471876*(5)^36*x^4 + 1562575008*(5)^48*x^3 + 488318756*(5)^52*x^2 + 1527929762506*(5)^56*x + 4579209021877*(5)^60";

fn z(n: i64) -> BigInt {
    BigInt::from(n)
}

#[test]
fn quadratic_at_two_and_five() {
    let r = Integers;
    let f = parse_poly(&r, "x^2 - 5").unwrap();
    let mut om = montes(&r, &f, &z(2)).unwrap();
    assert_eq!(om.degrees(), vec![2]);
    assert_eq!((om.reps[0].e, om.reps[0].f), (1, 2));
    assert_eq!(om_index(&mut om).unwrap().total, 1);
    let mut om5 = montes(&r, &f, &z(5)).unwrap();
    assert_eq!((om5.reps[0].e, om5.reps[0].f), (2, 1));
    let d = delta_invariants(&mut om5).unwrap();
    assert_eq!(d.index.total, 0);
    assert_eq!(d.delta0, vec![q(1)]);
    assert_eq!(d.delta_star, q(1));
    assert_eq!(d.rho, 0);
    assert!(detect_index_zero(&r, &f, &z(5)));
    assert!(!detect_index_zero(&r, &f, &z(2)));
}

#[test]
fn degree13_at_five() {
    let r = Integers;
    let f = parse_poly(&r, DEG13).unwrap();
    let mut om = montes(&r, &f, &z(5)).unwrap();
    assert_eq!(om.degrees(), vec![4, 6, 3]);
    let idx = om_index(&mut om).unwrap();
    assert_eq!(idx.total, 372);
    // the degree-6 prime sits on the second order key polynomial, the degree-3
    // prime only refines it and keeps the order-one frame
    let lv = om.reps[1].levels();
    assert_eq!(lv.len(), 2);
    assert_eq!(parse_poly(&r, "x^3 + 5^8*x + 5^12").unwrap(), lv[1].phi);
    assert_eq!(om.reps[2].frame_degrees(), vec![1]);
    assert_eq!(om.reps[0].levels()[0].psi, vec![vec![2], vec![0], vec![0], vec![0], vec![1]]);
}

#[test]
fn degree13_at_two() {
    let r = Integers;
    let f = parse_poly(&r, DEG13).unwrap();
    let mut om = montes(&r, &f, &z(2)).unwrap();
    assert_eq!(om.degrees(), vec![6, 3, 4]);
    assert_eq!(om_index(&mut om).unwrap().total, 3);
}

#[test]
fn eisenstein_over_fqt() {
    for qq in [2u64, 3, 5] {
        let r = FqT::new(qq);
        for n in 1..=5 {
            let f = parse_poly(&r, &format!("x^{qq} + t^{n}*x + t")).unwrap();
            let mut om = montes(&r, &f, &r.t()).unwrap();
            assert_eq!(om.reps.len(), 1);
            assert_eq!(om.reps[0].e, qq);
            let d = delta_invariants(&mut om).unwrap();
            assert_eq!(d.index.total, 0);
            assert_eq!(d.delta, (n * qq) as i64);
        }
    }
}

#[test]
fn exact_linear_factor() {
    let r = Integers;
    let f = parse_poly(&r, "(x - 1)*(x^2 + 3)").unwrap();
    let mut om = montes(&r, &f, &z(2)).unwrap();
    let idx = om_index(&mut om).unwrap();
    assert_eq!(om.degrees().iter().sum::<usize>(), 3);
    assert!(idx.total >= 1);
}
