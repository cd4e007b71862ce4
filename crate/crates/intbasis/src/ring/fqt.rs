use super::{Pid, RingKind};
use crate::ff::{ff_factorize, ff_is_irreducible, invmod, mulmod, Fe, FfField};
use std::cmp::Ordering;

/// `F_q[t]` for a prime `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FqT {
    q: u64,
}

impl FqT {
    pub fn new(q: u64) -> Self {
        assert!((2..1 << 31).contains(&q), "field size out of range");
        FqT { q }
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn t(&self) -> FqPoly {
        FqPoly(vec![0, 1])
    }
    pub fn poly(&self, coeffs: &[i64]) -> FqPoly {
        let q = self.q as i64;
        FqPoly::trimmed(coeffs.iter().map(|&c| c.rem_euclid(q) as u64).collect())
    }
    fn prime_field(&self) -> FfField {
        FfField::prime(self.q)
    }
    fn to_ff(&self, a: &FqPoly) -> Vec<Fe> {
        a.0.iter().map(|&c| vec![c]).collect()
    }
}

/// Polynomial in `t`, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FqPoly(pub Vec<u64>);

impl FqPoly {
    pub fn trimmed(mut v: Vec<u64>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        FqPoly(v)
    }
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }
}

impl Ord for FqPoly {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.iter().rev().cmp(o.0.iter().rev()))
    }
}

impl PartialOrd for FqPoly {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Pid for FqT {
    type Elem = FqPoly;

    fn kind(&self) -> RingKind {
        RingKind::FqT(self.q)
    }
    fn zero(&self) -> FqPoly {
        FqPoly(vec![])
    }
    fn one(&self) -> FqPoly {
        FqPoly(vec![1])
    }
    fn from_i64(&self, n: i64) -> FqPoly {
        self.poly(&[n])
    }
    fn is_zero(&self, a: &FqPoly) -> bool {
        a.0.is_empty()
    }
    fn add(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let n = a.0.len().max(b.0.len());
        let g = |v: &FqPoly, i: usize| v.0.get(i).copied().unwrap_or(0);
        FqPoly::trimmed((0..n).map(|i| (g(a, i) + g(b, i)) % self.q).collect())
    }
    fn sub(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &FqPoly) -> FqPoly {
        FqPoly(a.0.iter().map(|&c| (self.q - c) % self.q).collect())
    }
    fn mul(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        if a.0.is_empty() || b.0.is_empty() {
            return self.zero();
        }
        let mut r = vec![0u64; a.0.len() + b.0.len() - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                r[i + j] = (r[i + j] + mulmod(x, y, self.q)) % self.q;
            }
        }
        FqPoly::trimmed(r)
    }
    fn div_rem(&self, a: &FqPoly, b: &FqPoly) -> (FqPoly, FqPoly) {
        assert!(!b.0.is_empty(), "division by zero");
        let q = self.q;
        let mut r = a.0.clone();
        if r.len() < b.0.len() {
            return (self.zero(), a.clone());
        }
        let li = invmod(*b.0.last().unwrap(), q);
        let mut quo = vec![0u64; r.len() - b.0.len() + 1];
        for k in (0..quo.len()).rev() {
            let c = mulmod(r[k + b.0.len() - 1], li, q);
            if c == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                r[k + j] = (r[k + j] + q - mulmod(c, y, q)) % q;
            }
            quo[k] = c;
        }
        r.truncate(b.0.len() - 1);
        (FqPoly::trimmed(quo), FqPoly::trimmed(r))
    }
    fn is_unit(&self, a: &FqPoly) -> bool {
        a.0.len() == 1
    }
    fn normalize(&self, a: &FqPoly) -> FqPoly {
        match a.0.last() {
            None | Some(1) => a.clone(),
            Some(&l) => {
                let li = invmod(l, self.q);
                FqPoly(a.0.iter().map(|&c| mulmod(c, li, self.q)).collect())
            }
        }
    }
    fn size_h(&self, a: &FqPoly) -> u64 {
        a.degree().unwrap_or(0) as u64
    }
    fn reduce(&self, a: &FqPoly, m: &FqPoly) -> FqPoly {
        self.div_rem(a, m).1
    }
    fn residue_field(&self, p: &FqPoly) -> FfField {
        let d = p.degree().expect("zero prime");
        assert!(d >= 1, "unit is not prime");
        let k = self.prime_field();
        if d == 1 {
            k
        } else {
            k.extend(&self.to_ff(&self.normalize(p)))
        }
    }
    fn to_residue(&self, k: &FfField, p: &FqPoly, a: &FqPoly) -> Fe {
        let r = self.reduce(a, p);
        let mut v = r.0;
        v.resize(k.dim(), 0);
        v
    }
    fn lift_residue(&self, _k: &FfField, _p: &FqPoly, x: &Fe) -> FqPoly {
        FqPoly::trimmed(x.clone())
    }
    fn var_t(&self) -> Option<FqPoly> {
        Some(self.t())
    }
    fn full_factorization(&self, a: &FqPoly) -> Option<Vec<(FqPoly, u64)>> {
        let fs = ff_factorize(&self.prime_field(), &self.to_ff(a));
        Some(fs.into_iter().map(|(g, m)| (FqPoly::trimmed(g.into_iter().map(|c| c[0]).collect()), m as u64)).collect())
    }
    fn is_prime(&self, p: &FqPoly) -> bool {
        p.0.len() >= 2 && ff_is_irreducible(&self.prime_field(), &self.to_ff(p))
    }
    fn fmt_elem(&self, a: &FqPoly) -> String {
        if a.0.is_empty() {
            return "0".into();
        }
        let mut terms = vec![];
        for (i, &c) in a.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{i}"),
            };
            terms.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        terms.join("+")
    }
    fn to_json(&self, a: &FqPoly) -> serde_json::Value {
        serde_json::Value::Array(a.0.iter().map(|&c| c.into()).collect())
    }
    fn from_json(&self, v: &serde_json::Value) -> Option<FqPoly> {
        let c: Vec<u64> = v.as_array()?.iter().map(|x| x.as_u64().filter(|&c| c < self.q)).collect::<Option<_>>()?;
        (c.last() != Some(&0)).then_some(FqPoly(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_roundtrip() {
        let r = FqT::new(3);
        let p = r.poly(&[1, 0, 1]);
        let k = r.residue_field(&p);
        assert_eq!(k.dim(), 2);
        let a = r.poly(&[2, 1, 1, 1]);
        let x = r.to_residue(&k, &p, &a);
        assert_eq!(r.lift_residue(&k, &p, &x), r.reduce(&a, &p));
    }

    #[test]
    fn primes_and_sizes() {
        let r = FqT::new(2);
        assert!(r.is_prime(&r.poly(&[1, 1, 1])));
        assert!(!r.is_prime(&r.poly(&[1, 0, 1])));
        assert_eq!(r.size_h(&r.poly(&[1, 1, 0, 1])), 3);
        assert_eq!(r.fmt_elem(&r.poly(&[1, 0, 1])), "t^2+1");
    }
}
