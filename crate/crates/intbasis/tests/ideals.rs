mod common;

use intbasis::basis::{ideal_basis, integral_basis, local_basis_at, PrimeHints};
use intbasis::ideals::{normalize_at, FractionalIdeal, PrimeIdealId};
use intbasis::om::montes;
use intbasis::ring::{Integers, Pid};
use intbasis::upoly::{parse_poly, PolyOps};
use intbasis::verify::prime_values;
use intbasis::value::{q, Val};
use num_bigint::BigInt;

fn z(n: i64) -> BigInt {
    BigInt::from(n)
}

fn ideal(p: i64, exps: &[(usize, i64)]) -> FractionalIdeal<BigInt> {
    FractionalIdeal { factors: exps.iter().map(|&(o, n)| (PrimeIdealId { p: z(p), ordinal: o }, n)).collect() }
}

#[test]
fn normalization_cases() {
    let r = Integers;
    let f = parse_poly(&r, "x^2-5").unwrap();
    let om = montes(&r, &f, &z(5)).unwrap();
    assert_eq!(normalize_at(&om, &ideal(5, &[(0, 3)])), (2, vec![-1]));
    assert_eq!(normalize_at(&om, &ideal(5, &[])), (0, vec![0]));

    let g = parse_poly(&r, "(x^3-2)*(x-1)+16").unwrap();
    let om = montes(&r, &g, &z(2)).unwrap();
    let es: Vec<u64> = om.reps.iter().map(|x| x.e).collect();
    let (i1, i3) = (es.iter().position(|&e| e == 1).unwrap(), es.iter().position(|&e| e == 3).unwrap());
    let (m, star) = normalize_at(&om, &ideal(2, &[(i1, -2), (i3, 1)]));
    assert_eq!(m, 1);
    assert_eq!((star[i1], star[i3]), (-3, -2));
    // normalizing again changes nothing
    let again = ideal(2, &[(i1, star[i1]), (i3, star[i3])]);
    assert_eq!(normalize_at(&om, &again), (0, star));
}

#[test]
fn degree13_split_at_two() {
    let r = Integers;
    let f = parse_poly(&r, common::DEG13).unwrap();
    let (b, om, idx) = local_basis_at(&r, &f, &z(2)).unwrap();
    assert_eq!(idx.total, 3);
    assert_eq!(b.exponents.iter().sum::<i64>(), 3);
    let g = r.pmul(&parse_poly(&r, "x^3+x^2+1").unwrap(), &parse_poly(&r, "x^4+x^3+1").unwrap());
    for i in 0..7 {
        assert_eq!(b.numerators[i], r.pmono(i));
    }
    // the remaining numerators are g times an S-basis, so ≡ g·(monic) mod 2
    for (i, h) in b.numerators.iter().enumerate().skip(7) {
        let (_, rem) = r.pdivrem(&r.preduce(h, &z(2)), &r.preduce(&g, &z(2)));
        assert!(r.preduce(&rem, &z(2)).is_empty(), "numerator {i}");
    }
    assert_eq!(om.reps.len(), 3);
}

#[test]
fn split_basis_not_reduced() {
    let r = Integers;
    let f = parse_poly(&r, "(x-1)^2+3").unwrap();
    let (b, _, _) = local_basis_at(&r, &f, &z(3)).unwrap();
    assert_eq!(b.numerators, vec![r.pmono(0), r.pmono(1)]);
    assert_eq!(b.alphas, vec![q(0), q(0)]);
}

#[test]
fn inverse_prime_membership() {
    let r = Integers;
    let f = parse_poly(&r, "x^2-5").unwrap();
    let ib = ideal_basis(&r, &f, &PrimeHints::default(), &ideal(5, &[(0, -1)]), 1).unwrap();
    assert!(ib.alpha.is_empty());
    assert!(ib.size > ib.index_size);
    let mut om = montes(&r, &f, &z(5)).unwrap();
    let p5 = ib.primes.iter().find(|w| w.p == z(5)).unwrap();
    for (g, eta) in p5.basis.numerators.iter().zip(&p5.basis.exponents) {
        let w = prime_values(&mut om, g).unwrap()[0];
        // w_I(g/5^η) = w(g) - η + 1/2 ≥ 0
        assert!(w - (q(*eta) - q(1) / q(2)) >= Val::Fin(q(0)));
    }
    assert_eq!(p5.basis.exponents, vec![0, 1]);
}

#[test]
fn unit_ideal_matches_integral_basis() {
    let r = Integers;
    let f = parse_poly(&r, "x^3-12*x+28").unwrap();
    let ib = integral_basis(&r, &f, &PrimeHints::default(), 1).unwrap();
    let id = ideal_basis(&r, &f, &PrimeHints::default(), &FractionalIdeal::<BigInt> { factors: vec![] }, 1).unwrap();
    assert_eq!(ib.basis.denominators, id.basis.denominators);
    assert_eq!(id.size, id.index_size);
    let scalar = ideal_basis(&r, &f, &PrimeHints::default(), &ideal(3, &[(0, 0)]), 1).unwrap();
    assert_eq!(scalar.size, scalar.index_size);
    let _ = r.one();
}
