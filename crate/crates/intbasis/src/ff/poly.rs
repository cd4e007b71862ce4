//! Dense univariate polynomials over an [`FfField`], lowest degree first and
//! without trailing zeros (the zero polynomial is empty).

use super::{Fe, FfField};
use num_bigint::BigUint;

pub type FfPoly = Vec<Fe>;

impl FfField {
    pub fn trim(&self, a: &mut FfPoly) {
        while a.last().is_some_and(|c| self.is_zero(c)) {
            a.pop();
        }
    }
    pub fn trimmed(&self, mut a: FfPoly) -> FfPoly {
        self.trim(&mut a);
        a
    }
    /// Degree, with `None` for the zero polynomial.
    pub fn pdeg(&self, a: &FfPoly) -> Option<usize> {
        a.len().checked_sub(1)
    }
    pub fn pconst(&self, c: Fe) -> FfPoly {
        self.trimmed(vec![c])
    }
    pub fn px(&self) -> FfPoly {
        vec![self.zero(), self.one()]
    }
    pub fn padd(&self, a: &FfPoly, b: &FfPoly) -> FfPoly {
        let n = a.len().max(b.len());
        let z = self.zero();
        let v = (0..n).map(|i| self.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
        self.trimmed(v)
    }
    pub fn psub(&self, a: &FfPoly, b: &FfPoly) -> FfPoly {
        let n = a.len().max(b.len());
        let z = self.zero();
        let v = (0..n).map(|i| self.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
        self.trimmed(v)
    }
    pub fn pscale(&self, a: &FfPoly, c: &Fe) -> FfPoly {
        self.trimmed(a.iter().map(|x| self.mul(x, c)).collect())
    }
    pub fn pmul(&self, a: &FfPoly, b: &FfPoly) -> FfPoly {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut r = vec![self.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                r[i + j] = self.add(&r[i + j], &self.mul(x, y));
            }
        }
        self.trimmed(r)
    }
    pub fn monic(&self, a: &FfPoly) -> FfPoly {
        match a.last() {
            None => vec![],
            Some(l) if self.is_one(l) => a.clone(),
            Some(l) => self.pscale(a, &self.inv(l)),
        }
    }
    pub fn pdivrem(&self, a: &FfPoly, b: &FfPoly) -> (FfPoly, FfPoly) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut r = a.clone();
        if r.len() < b.len() {
            return (vec![], r);
        }
        let lb = self.inv(b.last().unwrap());
        let mut qt = vec![self.zero(); r.len() - b.len() + 1];
        for k in (0..qt.len()).rev() {
            let c = self.mul(&r[k + b.len() - 1], &lb);
            if self.is_zero(&c) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                r[k + j] = self.sub(&r[k + j], &self.mul(&c, y));
            }
            qt[k] = c;
        }
        r.truncate(b.len() - 1);
        (self.trimmed(qt), self.trimmed(r))
    }
    pub fn prem(&self, a: &FfPoly, b: &FfPoly) -> FfPoly {
        self.pdivrem(a, b).1
    }
    /// Monic gcd.
    pub fn pgcd(&self, a: &FfPoly, b: &FfPoly) -> FfPoly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_empty() {
            let r = self.prem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }
    /// `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn pxgcd(&self, a: &FfPoly, b: &FfPoly) -> (FfPoly, FfPoly, FfPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.pconst(self.one()), vec![]);
        let (mut t0, mut t1) = (vec![], self.pconst(self.one()));
        while !r1.is_empty() {
            let (qt, r) = self.pdivrem(&r0, &r1);
            let s = self.psub(&s0, &self.pmul(&qt, &s1));
            let t = self.psub(&t0, &self.pmul(&qt, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if let Some(l) = r0.last().cloned() {
            let li = self.inv(&l);
            return (self.pscale(&r0, &li), self.pscale(&s0, &li), self.pscale(&t0, &li));
        }
        (r0, s0, t0)
    }
    pub fn pderiv(&self, a: &FfPoly) -> FfPoly {
        let v = a.iter().enumerate().skip(1).map(|(i, c)| self.scale(c, i as u64 % self.p())).collect();
        self.trimmed(v)
    }
    pub fn peval(&self, a: &FfPoly, x: &Fe) -> Fe {
        a.iter().rev().fold(self.zero(), |acc, c| self.add(&self.mul(&acc, x), c))
    }
    pub fn pmulmod(&self, a: &FfPoly, b: &FfPoly, m: &FfPoly) -> FfPoly {
        self.prem(&self.pmul(a, b), m)
    }
    pub fn ppowmod(&self, a: &FfPoly, e: &BigUint, m: &FfPoly) -> FfPoly {
        let mut r = self.prem(&self.pconst(self.one()), m);
        let a = self.prem(a, m);
        for i in (0..e.bits()).rev() {
            r = self.pmulmod(&r, &r, m);
            if e.bit(i) {
                r = self.pmulmod(&r, &a, m);
            }
        }
        r
    }
    pub fn ppow(&self, a: &FfPoly, e: usize) -> FfPoly {
        (0..e).fold(self.pconst(self.one()), |acc, _| self.pmul(&acc, a))
    }
    /// Lifts a polynomial over a lower level of the same tower.
    pub fn pembed(&self, a: &FfPoly) -> FfPoly {
        a.iter().map(|c| self.embed(c)).collect()
    }
}
