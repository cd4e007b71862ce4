//! Factoring discriminants at desk scale, and the Chinese remainder lift.

use super::Pid;
use crate::error::{Error, Result};
use std::sync::OnceLock;

const TRIAL_BOUND: u32 = 1_000_000;

/// User supplied knowledge about the factorization of a discriminant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorHint<E> {
    /// A prime number (or prime polynomial).
    Prime(E),
    /// A squarefree element whose `e`-th power is the exact contribution of its primes.
    Squarefree(E, u64),
}

/// A factor `base^exp`; `prime` is false for a hinted squarefree composite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece<E> {
    pub base: E,
    pub exp: u64,
    pub prime: bool,
}

fn small_primes() -> &'static [u32] {
    static P: OnceLock<Vec<u32>> = OnceLock::new();
    P.get_or_init(|| {
        let n = TRIAL_BOUND as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                (i * i..=n).step_by(i).for_each(|j| sieve[j] = false);
            }
            i += 1;
        }
        (2..=n).filter(|&i| sieve[i]).map(|i| i as u32).collect()
    })
}

/// Factors `n ≠ 0` into pieces using trial division (over `Z`), full
/// factorization (over `F_q[t]`) and hints. Pieces are sorted by base.
pub fn factor_with_hints<R: Pid>(r: &R, n: &R::Elem, hints: &[FactorHint<R::Elem>]) -> Result<Vec<Piece<R::Elem>>> {
    if r.is_zero(n) {
        return Err(Error::Input("cannot factor zero".into()));
    }
    let mut out: Vec<Piece<R::Elem>> = vec![];
    let mut rest = r.normalize(n);
    let push = |out: &mut Vec<Piece<R::Elem>>, base: R::Elem, exp: u64, prime: bool| {
        if exp > 0 {
            match out.iter_mut().find(|x| x.base == base) {
                Some(x) => x.exp += exp,
                None => out.push(Piece { base, exp, prime }),
            }
        }
    };
    for h in hints {
        match h {
            FactorHint::Prime(p) => {
                let p = r.normalize(p);
                if !r.is_prime(&p) {
                    return Err(Error::NotPrime(r.fmt_elem(&p)));
                }
                let (v, q) = r.split_valuation(&rest, &p);
                rest = q;
                push(&mut out, p, v, true);
            }
            FactorHint::Squarefree(m, e) => {
                let m = r.normalize(m);
                if r.is_unit(&m) {
                    continue;
                }
                let me = r.pow(&m, *e);
                if !r.divides(&me, &rest) {
                    return Err(Error::Input(format!("hint {}^{} does not divide", r.fmt_elem(&m), e)));
                }
                rest = r.exact_div(&rest, &me);
                let prime = r.is_prime(&m);
                push(&mut out, m, *e, prime);
            }
        }
    }
    if !r.is_unit(&rest) {
        if let Some(fs) = r.full_factorization(&rest) {
            for (p, e) in fs {
                push(&mut out, p, e, true);
            }
        } else {
            let mut c = rest;
            let mut proven = false;
            for &sp in small_primes() {
                let p = r.from_i64(sp as i64);
                if r.is_unit(&c) || 2 * r.size_h(&p) >= r.size_h(&c) + 2 {
                    // no factor below sqrt(c) remains
                    proven = true;
                    break;
                }
                let (v, q) = r.split_valuation(&c, &p);
                if v > 0 {
                    c = q;
                    push(&mut out, p, v, true);
                }
            }
            if !r.is_unit(&c) {
                if proven || r.is_prime(&c) {
                    push(&mut out, c, 1, true);
                } else {
                    return Err(Error::Unfactored(r.fmt_elem(&c)));
                }
            }
        }
    }
    out.sort_by(|a, b| a.base.cmp(&b.base));
    Ok(out)
}

/// Primes with multiplicity; composite pieces are an error.
pub fn prime_factors<R: Pid>(r: &R, n: &R::Elem, hints: &[FactorHint<R::Elem>]) -> Result<Vec<(R::Elem, u64)>> {
    let pieces = factor_with_hints(r, n, hints)?;
    pieces
        .into_iter()
        .map(|pc| if pc.prime { Ok((pc.base, pc.exp)) } else { Err(Error::Unfactored(r.fmt_elem(&pc.base))) })
        .collect()
}

/// Squarefree factorization `n = Π n_i^{e_i}` with pairwise coprime squarefree
/// `n_i`, sorted by exponent. Hinted composites are kept intact.
pub fn squarefree_factorization<R: Pid>(r: &R, n: &R::Elem, hints: &[FactorHint<R::Elem>]) -> Result<Vec<(R::Elem, u64)>> {
    let pieces = factor_with_hints(r, n, hints)?;
    let mut out: Vec<(R::Elem, u64)> = vec![];
    for pc in pieces {
        match out.iter_mut().find(|x| x.1 == pc.exp) {
            Some(x) => x.0 = r.mul(&x.0, &pc.base),
            None => out.push((pc.base, pc.exp)),
        }
    }
    out.sort_by_key(|a| a.1);
    Ok(out)
}

/// The canonical element congruent to each `a_i` modulo `m_i` (pairwise coprime moduli).
pub fn crt_lift<R: Pid>(r: &R, pairs: &[(R::Elem, R::Elem)]) -> R::Elem {
    let mut x = r.zero();
    let mut m = r.one();
    for (a, mi) in pairs {
        if r.is_unit(mi) {
            continue;
        }
        let inv = r.inv_mod(&r.reduce(&m, mi), mi).expect("moduli must be coprime");
        let t = r.reduce(&r.mul(&r.sub(a, &x), &inv), mi);
        x = r.add(&x, &r.mul(&m, &t));
        m = r.mul(&m, mi);
    }
    r.reduce(&x, &m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FqT, Integers};
    use num_bigint::BigInt;

    #[test]
    fn squarefree_with_hint_keeps_cofactor() {
        let z = Integers;
        // 2^6 * 5^7 * n with n = 1000003 * 1000033 out of trial range
        let n = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        let d = BigInt::from(64) * BigInt::from(5).pow(7) * &n;
        assert!(matches!(squarefree_factorization(&z, &d, &[]), Err(Error::Unfactored(_))));
        let sf = squarefree_factorization(&z, &d, &[FactorHint::Squarefree(n.clone(), 1)]).unwrap();
        assert_eq!(sf, vec![(n, 1), (BigInt::from(2), 6), (BigInt::from(5), 7)]);
    }

    #[test]
    fn prime_cofactor_is_accepted() {
        let z = Integers;
        let d = BigInt::from(9) * BigInt::from(1_000_003u64);
        assert_eq!(prime_factors(&z, &d, &[]).unwrap(), vec![(BigInt::from(3), 2), (BigInt::from(1_000_003), 1)]);
    }

    #[test]
    fn crt_symmetric_over_z() {
        let z = Integers;
        let m5 = BigInt::from(5).pow(19);
        let a = BigInt::from(5).pow(8) - BigInt::from(5).pow(27);
        let x = crt_lift(&z, &[(a.clone(), m5.clone()), (BigInt::from(0), BigInt::from(2))]);
        // canonical representative lies in the symmetric range of 2*5^19
        assert_eq!(x, BigInt::from(5).pow(8) - &m5);
        assert_eq!((&x - &a) % (BigInt::from(2) * &m5), BigInt::from(0));
    }

    #[test]
    fn crt_over_f2t_brute_force() {
        let r = FqT::new(2);
        let x = crt_lift(&r, &[(r.one(), r.t()), (r.zero(), r.poly(&[1, 1]))]);
        let hits: Vec<_> = (0..4)
            .map(|b| r.poly(&[b & 1, b >> 1]))
            .filter(|c| r.reduce(c, &r.t()) == r.one() && r.divides(&r.poly(&[1, 1]), c))
            .collect();
        assert_eq!(hits, vec![x.clone()]);
        assert_eq!(x, r.poly(&[1, 1]));
    }

    #[test]
    fn fqt_factors_fully() {
        let r = FqT::new(3);
        let t = r.t();
        let d = r.mul(&r.pow(&t, 5), &r.pow(&r.poly(&[1, 0, 1]), 2));
        assert_eq!(prime_factors(&r, &d, &[]).unwrap(), vec![(t, 5), (r.poly(&[1, 0, 1]), 2)]);
    }
}
