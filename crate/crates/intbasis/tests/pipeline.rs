mod common;

use intbasis::basis::{integral_basis, PrimeHints};
use intbasis::ring::Integers;
use intbasis::upoly::{parse_poly, PolyOps};
use num_bigint::BigInt;

fn z(n: i64) -> BigInt {
    BigInt::from(n)
}

#[test]
fn degree13_golden_basis() {
    let r = Integers;
    let f = parse_poly(&r, common::DEG13).unwrap();
    let hints = PrimeHints { primes: vec![z(2), z(5)], ..Default::default() };
    let ib = integral_basis(&r, &f, &hints, 2).unwrap();
    assert_eq!(ib.index, z(8) * z(5).pow(372));
    let want = [(0, 0), (0, 4), (0, 8), (0, 12), (0, 18), (0, 24), (0, 29), (0, 33), (0, 37), (0, 42), (1, 51), (1, 55), (1, 59)];
    for (a, (e2, e5)) in ib.basis.denominators.iter().zip(want) {
        assert_eq!(*a, z(2).pow(e2) * z(5).pow(e5));
    }
    let g4 = &ib.basis.crt_numerators[4];
    let five19 = z(5).pow(19);
    let want5 = parse_poly(&r, "x^4+(5)^8*x^2+(5)^12*x").unwrap();
    assert_eq!(r.preduce(&r.psub(g4, &want5), &five19), vec![]);
    assert_eq!(r.preduce(&r.psub(g4, &r.pmono(4)), &z(2)), vec![]);
}

#[test]
fn quadratic_at_two() {
    let r = Integers;
    let f = parse_poly(&r, "x^2-5").unwrap();
    let ib = integral_basis(&r, &f, &PrimeHints::default(), 1).unwrap();
    assert_eq!(ib.index, z(2));
    assert_eq!(ib.field_discriminant, z(5));
    assert_eq!(ib.basis.numerators[1], parse_poly(&r, "x+1").unwrap());
}
