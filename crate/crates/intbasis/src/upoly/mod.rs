//! Dense univariate polynomials over the base ring, lowest degree first and
//! without trailing zeros. Operations live on [`PolyOps`], implemented for
//! every [`Pid`].

mod hensel;
mod parse;
mod resultant;

pub use hensel::hensel_lift;
pub use parse::{format_poly, parse_poly};

use crate::ff::{FfField, FfPoly};
use crate::ring::Pid;

pub type Poly<E> = Vec<E>;

/// A polynomial known modulo a power of a prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPoly<E> {
    pub poly: Poly<E>,
    pub prime: E,
    pub sigma: u64,
}

pub trait PolyOps: Pid {
    fn ptrim(&self, a: &mut Poly<Self::Elem>) {
        while a.last().is_some_and(|c| self.is_zero(c)) {
            a.pop();
        }
    }
    fn trimmed(&self, mut a: Poly<Self::Elem>) -> Poly<Self::Elem> {
        self.ptrim(&mut a);
        a
    }
    fn pdeg(&self, a: &Poly<Self::Elem>) -> Option<usize> {
        a.len().checked_sub(1)
    }
    fn pconst(&self, c: Self::Elem) -> Poly<Self::Elem> {
        self.trimmed(vec![c])
    }
    fn pone(&self) -> Poly<Self::Elem> {
        vec![self.one()]
    }
    fn px(&self) -> Poly<Self::Elem> {
        vec![self.zero(), self.one()]
    }
    /// `x^n`.
    fn pmono(&self, n: usize) -> Poly<Self::Elem> {
        let mut v = vec![self.zero(); n + 1];
        v[n] = self.one();
        v
    }
    fn is_monic(&self, a: &Poly<Self::Elem>) -> bool {
        a.last().is_some_and(|c| self.is_one(c))
    }
    fn lc(&self, a: &Poly<Self::Elem>) -> Self::Elem {
        a.last().cloned().unwrap_or_else(|| self.zero())
    }
    fn padd(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let mut v = long.clone();
        for (x, y) in v.iter_mut().zip(short) {
            *x = self.add(x, y);
        }
        self.trimmed(v)
    }
    fn pneg(&self, a: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        a.iter().map(|c| self.neg(c)).collect()
    }
    fn psub(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        self.padd(a, &self.pneg(b))
    }
    fn pscale(&self, a: &Poly<Self::Elem>, c: &Self::Elem) -> Poly<Self::Elem> {
        self.trimmed(a.iter().map(|x| self.mul(x, c)).collect())
    }
    fn pmul(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut r = vec![self.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !self.is_zero(y) {
                    r[i + j] = self.add(&r[i + j], &self.mul(x, y));
                }
            }
        }
        self.trimmed(r)
    }
    fn ppow(&self, a: &Poly<Self::Elem>, e: usize) -> Poly<Self::Elem> {
        let mut r = self.pone();
        let mut b = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = self.pmul(&r, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.pmul(&b, &b);
            }
        }
        r
    }
    /// Division by a monic polynomial.
    fn pdivrem(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> (Poly<Self::Elem>, Poly<Self::Elem>) {
        assert!(self.is_monic(b), "division by a non-monic polynomial");
        let n = b.len();
        if a.len() < n {
            return (vec![], a.clone());
        }
        let mut r = a.clone();
        let mut q = vec![self.zero(); a.len() - n + 1];
        for k in (0..q.len()).rev() {
            let c = r[k + n - 1].clone();
            if self.is_zero(&c) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                r[k + j] = self.sub(&r[k + j], &self.mul(&c, y));
            }
            q[k] = c;
        }
        r.truncate(n - 1);
        (self.trimmed(q), self.trimmed(r))
    }
    fn prem(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        self.pdivrem(a, b).1
    }
    /// Pseudo-remainder: `lc(b)^{deg a - deg b + 1} a mod b`.
    fn pseudo_rem(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        let n = b.len();
        assert!(n > 0);
        if a.len() < n {
            return a.clone();
        }
        let lb = self.lc(b);
        let mut r = a.clone();
        let steps = a.len() - n + 1;
        for _ in 0..steps {
            if r.len() < n {
                r = self.pscale(&r, &lb);
                continue;
            }
            let c = self.lc(&r);
            let shift = r.len() - n;
            let mut nr: Poly<Self::Elem> = r.iter().map(|x| self.mul(x, &lb)).collect();
            for (j, y) in b.iter().enumerate() {
                nr[shift + j] = self.sub(&nr[shift + j], &self.mul(&c, y));
            }
            nr.pop();
            r = self.trimmed(nr);
        }
        r
    }
    fn pderiv(&self, a: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        self.trimmed(a.iter().enumerate().skip(1).map(|(i, c)| self.mul(c, &self.from_i64(i as i64))).collect())
    }
    fn peval(&self, a: &Poly<Self::Elem>, x: &Self::Elem) -> Self::Elem {
        a.iter().rev().fold(self.zero(), |acc, c| self.add(&self.mul(&acc, x), c))
    }
    /// Coefficientwise canonical reduction modulo `m`.
    fn preduce(&self, a: &Poly<Self::Elem>, m: &Self::Elem) -> Poly<Self::Elem> {
        self.trimmed(a.iter().map(|c| self.reduce(c, m)).collect())
    }
    /// Reduces the coefficients below the leading one, keeping a monic polynomial monic.
    fn preduce_lower(&self, a: &Poly<Self::Elem>, m: &Self::Elem) -> Poly<Self::Elem> {
        let mut v = a.clone();
        let n = v.len();
        for c in v.iter_mut().take(n.saturating_sub(1)) {
            *c = self.reduce(c, m);
        }
        v
    }
    /// `min v_p` of the coefficients; `None` for zero.
    fn pval(&self, a: &Poly<Self::Elem>, p: &Self::Elem) -> Option<u64> {
        a.iter().filter_map(|c| self.valuation(c, p)).min()
    }
    /// Exact division of every coefficient by `c`.
    fn pdiv_scalar(&self, a: &Poly<Self::Elem>, c: &Self::Elem) -> Poly<Self::Elem> {
        a.iter().map(|x| self.exact_div(x, c)).collect()
    }
    /// `φ`-adic expansion `a = Σ a_s φ^s` with `deg a_s < deg φ`; `φ` monic.
    fn phi_expansion(&self, a: &Poly<Self::Elem>, phi: &Poly<Self::Elem>) -> Vec<Poly<Self::Elem>> {
        let mut out = vec![];
        let mut cur = a.clone();
        while !cur.is_empty() {
            let (q, r) = self.pdivrem(&cur, phi);
            out.push(r);
            cur = q;
        }
        out
    }
    fn from_phi_expansion(&self, coeffs: &[Poly<Self::Elem>], phi: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        coeffs.iter().rev().fold(vec![], |acc, c| self.padd(&self.pmul(&acc, phi), c))
    }
    fn to_residue_poly(&self, k: &FfField, p: &Self::Elem, a: &Poly<Self::Elem>) -> FfPoly {
        k.trimmed(a.iter().map(|c| self.to_residue(k, p, c)).collect())
    }
    fn lift_residue_poly(&self, k: &FfField, p: &Self::Elem, a: &FfPoly) -> Poly<Self::Elem> {
        self.trimmed(a.iter().map(|c| self.lift_residue(k, p, c)).collect())
    }
    fn resultant(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Self::Elem {
        resultant::resultant(self, a, b)
    }
    /// Discriminant of a monic polynomial, `(-1)^{n(n-1)/2} Res(f, f')`.
    fn discriminant(&self, f: &Poly<Self::Elem>) -> Self::Elem {
        let n = f.len() - 1;
        let r = self.resultant(f, &self.pderiv(f));
        if (n * (n.saturating_sub(1)) / 2) % 2 == 1 {
            self.neg(&r)
        } else {
            r
        }
    }
    /// Reduction of `f` modulo `p^σ`.
    fn truncate(&self, f: &Poly<Self::Elem>, p: &Self::Elem, sigma: u64) -> TruncatedPoly<Self::Elem> {
        let m = self.pow(p, sigma);
        TruncatedPoly { poly: self.preduce_lower(f, &m), prime: p.clone(), sigma }
    }
}

impl<R: Pid> PolyOps for R {}
