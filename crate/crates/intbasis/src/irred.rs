//! Irreducibility of `f` over `A` by Hensel lifting at a good prime and
//! recombination of the modular factors (Zassenhaus).

use crate::error::{Error, Result};
use crate::ff::ff_factorize;
use crate::ring::{Pid, RingKind};
use crate::upoly::{hensel_lift, Poly, PolyOps};

const GOOD_PRIMES: usize = 8;
const MAX_MODULAR_FACTORS: usize = 16;

/// Small primes of `A` in a fixed order: `2, 3, 5, …` or the monic irreducible
/// polynomials of `F_q[t]` by degree.
pub fn small_primes<R: Pid>(r: &R) -> impl Iterator<Item = R::Elem> + '_ {
    let t = r.var_t();
    let q = match r.kind() {
        RingKind::Z => 0,
        RingKind::FqT(q) => q,
    };
    (0u64..).filter_map(move |n| {
        let cand = match &t {
            None => r.from_i64(n as i64),
            Some(t) => {
                // n enumerates monic polynomials: base-q digits below a leading 1.
                let mut digits = vec![];
                let mut m = n + q;
                while m > 0 {
                    digits.push(m % q);
                    m /= q;
                }
                if digits.last() != Some(&1) {
                    return None;
                }
                digits.iter().rev().fold(r.zero(), |acc, &c| r.add(&r.mul(&acc, t), &r.from_i64(c as i64)))
            }
        };
        (!r.is_zero(&cand) && !r.is_unit(&cand) && r.is_prime(&cand)).then_some(cand)
    })
}

/// Size bound exceeding that of every coefficient of a monic factor of `f`.
fn factor_size_bound<R: Pid>(r: &R, f: &Poly<R::Elem>) -> u64 {
    let d = (f.len() - 1) as u64;
    let h = f.iter().map(|c| r.size_h(c)).max().unwrap_or(0);
    match r.kind() {
        // Mignotte: |coefficient| ≤ 2^d ‖f‖₂, plus a bit for the symmetric range.
        RingKind::Z => d + h + 64 - (d + 1).leading_zeros() as u64 + 2,
        // Roots have pole order at most h at infinity.
        RingKind::FqT(_) => d * h + 1,
    }
}

fn subset_sums(degs: &[usize], d: usize) -> Vec<bool> {
    let mut s = vec![false; d + 1];
    s[0] = true;
    for &g in degs {
        for i in (g..=d).rev() {
            s[i] = s[i] || s[i - g];
        }
    }
    s
}

/// `Ok(())` when `f` (monic, separable) is irreducible over `A`.
pub fn check_irreducible<R: Pid>(r: &R, f: &Poly<R::Elem>) -> Result<()> {
    let d = f.len() - 1;
    if d <= 1 {
        return Ok(());
    }
    let disc = r.discriminant(f);
    if r.is_zero(&disc) {
        return Err(Error::Inseparable);
    }
    let mut allowed = vec![true; d + 1];
    let mut best: Option<(R::Elem, Vec<crate::ff::FfPoly>)> = None;
    for p in small_primes(r).filter(|p| !r.divides(p, &disc)).take(GOOD_PRIMES) {
        let k = r.residue_field(&p);
        let fs: Vec<_> = ff_factorize(&k, &r.to_residue_poly(&k, &p, f)).into_iter().map(|(g, _)| g).collect();
        if fs.len() == 1 {
            return Ok(());
        }
        let sums = subset_sums(&fs.iter().map(|g| g.len() - 1).collect::<Vec<_>>(), d);
        allowed.iter_mut().zip(&sums).for_each(|(a, s)| *a &= *s);
        if (1..d).all(|i| !allowed[i]) {
            return Ok(());
        }
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((p, fs));
        }
    }
    let (p, fs) = best.ok_or_else(|| Error::Internal("no prime of good reduction".into()))?;
    if fs.len() > MAX_MODULAR_FACTORS {
        return Err(Error::DeskScale(format!("{} modular factors to recombine", fs.len())));
    }
    let bound = factor_size_bound(r, f);
    let mut sigma = 1;
    while r.size_h(&r.pow(&p, sigma)) <= bound {
        sigma += 1;
    }
    let modulus = r.pow(&p, sigma);
    let lifts = hensel_lift(r, f, &p, &fs, sigma);
    let n = lifts.len();
    for mask in 1u32..(1 << n) - 1 {
        // A factor and its cofactor are both found; look at the smaller side only.
        let deg: usize = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| lifts[i].len() - 1).sum();
        if deg > d / 2 || !allowed[deg] || (2 * deg == d && mask & 1 == 0) {
            continue;
        }
        let g = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .fold(r.pone(), |acc, i| r.preduce_lower(&r.pmul(&acc, &lifts[i]), &modulus));
        if r.prem(f, &g).is_empty() {
            return Err(Error::Reducible);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FqT, Integers};
    use crate::upoly::parse_poly;

    #[test]
    fn integer_cases() {
        let z = Integers;
        for (s, irr) in [
            ("x^4+1", true),
            ("x^4-10*x^2+1", true),
            ("x^2-5", true),
            ("x^4-1", false),
            ("(x^2+x+1)*(x^2-3)", false),
            ("(x^3+2*x+7)*(x^3-11*x^2+5)", false),
            ("x^6+x^3+1", true),
        ] {
            let f = parse_poly(&z, s).unwrap();
            assert_eq!(check_irreducible(&z, &f).is_ok(), irr, "{s}");
        }
    }

    #[test]
    fn function_field_cases() {
        let r = FqT::new(5);
        let f = parse_poly(&r, "x^3+t^2*x+t").unwrap();
        assert!(check_irreducible(&r, &f).is_ok());
        let g = parse_poly(&r, "(x^2+t)*(x^2+t^3+1)").unwrap();
        assert!(matches!(check_irreducible(&r, &g), Err(Error::Reducible)));
        let p: Vec<_> = small_primes(&r).take(7).map(|p| r.fmt_elem(&p)).collect();
        assert_eq!(p[..6], ["t", "t+1", "t+2", "t+3", "t+4", "t^2+2"]);
    }
}
