use super::{Pid, RingKind};
use crate::ff::{Fe, FfField};
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// The rational integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Pid for Integers {
    type Elem = BigInt;

    fn kind(&self) -> RingKind {
        RingKind::Z
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        a.div_mod_floor(b)
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
    fn normalize(&self, a: &BigInt) -> BigInt {
        a.abs()
    }
    fn size_h(&self, a: &BigInt) -> u64 {
        a.bits()
    }
    fn reduce(&self, a: &BigInt, m: &BigInt) -> BigInt {
        let m = m.abs();
        let r = a.mod_floor(&m);
        if &r + &r > m {
            r - m
        } else {
            r
        }
    }
    fn residue_field(&self, p: &BigInt) -> FfField {
        FfField::prime(small_prime(p))
    }
    fn residue_in_range(&self, p: &BigInt) -> bool {
        p.to_u64().is_some_and(|v| v < 1 << 62)
    }
    fn to_residue(&self, k: &FfField, _p: &BigInt, a: &BigInt) -> Fe {
        let r = a.mod_floor(&BigInt::from(k.p()));
        k.from_u64(r.to_u64().unwrap())
    }
    fn lift_residue(&self, _k: &FfField, _p: &BigInt, x: &Fe) -> BigInt {
        BigInt::from(x[0])
    }
    fn is_prime(&self, p: &BigInt) -> bool {
        p.sign() == Sign::Plus && is_probable_prime(p.magnitude())
    }
    fn fmt_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn to_json(&self, a: &BigInt) -> serde_json::Value {
        serde_json::Value::String(a.to_string())
    }
    fn from_json(&self, v: &serde_json::Value) -> Option<BigInt> {
        let s = v.as_str()?;
        let n: BigInt = s.parse().ok()?;
        (n.to_string() == s).then_some(n)
    }
}

/// Residue arithmetic runs on machine words.
pub(crate) fn small_prime(p: &BigInt) -> u64 {
    p.to_u64().filter(|&v| v < (1 << 62)).expect("residue characteristic exceeds 2^62")
}

const SMALL_PRIMES: [u32; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

/// Miller–Rabin with the first fifteen prime bases, deterministic below 3·10^24
/// and a strong probable-prime test beyond.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for &sp in &SMALL_PRIMES {
        let sp = BigUint::from(sp);
        if n == &sp {
            return true;
        }
        if (n % &sp).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for &a in &SMALL_PRIMES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
