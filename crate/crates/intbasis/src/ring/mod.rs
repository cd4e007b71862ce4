//! The base principal ideal domain `A`: either `Z` or `F_q[t]` with `q` prime.

mod factor;
mod fqt;
mod integers;

pub use factor::{crt_lift, factor_with_hints, prime_factors, squarefree_factorization, FactorHint, Piece};
pub use fqt::{FqPoly, FqT};
pub use integers::{is_probable_prime, Integers};

use crate::ff::{Fe, FfField};
use std::fmt::Debug;
use std::hash::Hash;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingKind {
    Z,
    FqT(u64),
}

/// Arithmetic of a Euclidean domain with the extras the OM machinery needs:
/// residue fields, residue lifts and canonical reductions.
pub trait Pid: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Ord + Debug + Send + Sync;

    fn kind(&self) -> RingKind;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Euclidean division; `b ≠ 0`.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    fn is_unit(&self, a: &Self::Elem) -> bool;
    /// Canonical associate: `|a|` over `Z`, monic over `F_q[t]`.
    fn normalize(&self, a: &Self::Elem) -> Self::Elem;
    /// Size `h`: bit length over `Z` (with `h(1) = 1`), degree over `F_q[t]`.
    fn size_h(&self, a: &Self::Elem) -> u64;
    /// Canonical representative of `a mod m`: symmetric over `Z`, reduced
    /// degree over `F_q[t]`.
    fn reduce(&self, a: &Self::Elem, m: &Self::Elem) -> Self::Elem;
    /// Residue field `A/p` for a prime `p`.
    fn residue_field(&self, p: &Self::Elem) -> FfField;
    /// Whether `residue_field(p)` fits machine-word arithmetic.
    fn residue_in_range(&self, _p: &Self::Elem) -> bool {
        true
    }
    fn to_residue(&self, k: &FfField, p: &Self::Elem, a: &Self::Elem) -> Fe;
    /// Canonical lift of a residue class (digits in `[0, p)` over `Z`).
    fn lift_residue(&self, k: &FfField, p: &Self::Elem, x: &Fe) -> Self::Elem;
    fn is_prime(&self, p: &Self::Elem) -> bool;
    fn fmt_elem(&self, a: &Self::Elem) -> String;
    fn to_json(&self, a: &Self::Elem) -> serde_json::Value;
    /// Inverse of `to_json`; rejects non-canonical encodings.
    fn from_json(&self, v: &serde_json::Value) -> Option<Self::Elem>;

    /// Complete factorization into normalized primes where it is cheap
    /// (`F_q[t]`); `None` means trial division applies.
    fn full_factorization(&self, _a: &Self::Elem) -> Option<Vec<(Self::Elem, u64)>> {
        None
    }
    /// The variable `t` of `F_q[t]`; `None` over `Z`.
    fn var_t(&self) -> Option<Self::Elem> {
        None
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (q, r) = self.div_rem(a, b);
        assert!(self.is_zero(&r), "inexact division");
        q
    }
    fn divides(&self, b: &Self::Elem, a: &Self::Elem) -> bool {
        if self.is_zero(b) {
            return self.is_zero(a);
        }
        self.is_zero(&self.div_rem(a, b).1)
    }
    fn pow(&self, a: &Self::Elem, e: u64) -> Self::Elem {
        let mut r = self.one();
        let mut b = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        r
    }
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !self.is_zero(&y) {
            let r = self.div_rem(&x, &y).1;
            x = y;
            y = r;
        }
        self.normalize(&x)
    }
    /// `(g, s, t)` with `s a + t b = g` and `g` normalized.
    fn xgcd(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem, Self::Elem) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !self.is_zero(&r1) {
            let (q, r) = self.div_rem(&r0, &r1);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let g = self.normalize(&r0);
        if g == r0 || self.is_zero(&r0) {
            return (r0, s0, t0);
        }
        // r0 = u g for a unit u; rescale the cofactors by u^{-1}
        let u = self.exact_div(&r0, &g);
        let ui = self.exact_div(&self.one(), &u);
        (g, self.mul(&s0, &ui), self.mul(&t0, &ui))
    }
    /// `v_p(a)`, `None` for `a = 0`.
    fn valuation(&self, a: &Self::Elem, p: &Self::Elem) -> Option<u64> {
        if self.is_zero(a) {
            return None;
        }
        let mut v = 0;
        let mut x = a.clone();
        loop {
            let (q, r) = self.div_rem(&x, p);
            if !self.is_zero(&r) {
                return Some(v);
            }
            v += 1;
            x = q;
        }
    }
    /// Strips all factors `p` from `a ≠ 0`: returns `(v_p(a), a / p^v)`.
    fn split_valuation(&self, a: &Self::Elem, p: &Self::Elem) -> (u64, Self::Elem) {
        let mut v = 0;
        let mut x = a.clone();
        loop {
            let (q, r) = self.div_rem(&x, p);
            if !self.is_zero(&r) {
                return (v, x);
            }
            v += 1;
            x = q;
        }
    }
    /// Inverse of a unit modulo `m`.
    fn inv_mod(&self, a: &Self::Elem, m: &Self::Elem) -> Option<Self::Elem> {
        let (g, s, _) = self.xgcd(a, m);
        if !self.is_one(&g) {
            return None;
        }
        Some(self.reduce(&s, m))
    }
}
