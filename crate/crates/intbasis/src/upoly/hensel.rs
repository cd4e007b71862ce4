//! Quadratic Hensel lifting of a coprime factorization modulo `p`.

use super::{Poly, PolyOps};
use crate::ff::{FfField, FfPoly};
use crate::ring::Pid;

/// Lifts `f ≡ Π g_i (mod p)`, the `g_i` monic and pairwise coprime, to monic
/// `F_i` with `f ≡ Π F_i (mod p^sigma)`. `f` must be monic.
pub fn hensel_lift<R: Pid>(r: &R, f: &Poly<R::Elem>, p: &R::Elem, factors: &[FfPoly], sigma: u64) -> Vec<Poly<R::Elem>> {
    let k = r.residue_field(p);
    let mut out = vec![];
    let mut rest = f.clone();
    for (i, g) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            out.push(r.preduce_lower(&rest, &r.pow(p, sigma)));
            break;
        }
        let h = factors[i + 1..].iter().fold(k.pconst(k.one()), |acc, x| k.pmul(&acc, x));
        let (gl, hl) = lift_pair(r, &k, &rest, p, g, &h, sigma);
        out.push(gl);
        rest = hl;
    }
    out
}

fn lift_pair<R: Pid>(
    r: &R,
    k: &FfField,
    f: &Poly<R::Elem>,
    p: &R::Elem,
    g: &FfPoly,
    h: &FfPoly,
    sigma: u64,
) -> (Poly<R::Elem>, Poly<R::Elem>) {
    let (one, s0, t0) = k.pxgcd(g, h);
    assert!(one.len() == 1, "hensel factors must be coprime");
    let lift = |x: &FfPoly| r.lift_residue_poly(k, p, x);
    let (mut g, mut h, mut s, mut t) = (lift(g), lift(h), lift(&s0), lift(&t0));
    let mut e = 1u64;
    while e < sigma {
        e = (2 * e).min(sigma);
        let m = r.pow(p, e);
        let red = |x: &Poly<R::Elem>| r.preduce(x, &m);
        let err = red(&r.psub(f, &r.pmul(&g, &h)));
        let (q, rr) = r.pdivrem(&red(&r.pmul(&s, &err)), &h);
        let g2 = red(&r.padd(&g, &r.padd(&r.pmul(&t, &err), &r.pmul(&q, &g))));
        let h2 = red(&r.padd(&h, &rr));
        let b = red(&r.psub(&r.padd(&r.pmul(&s, &g2), &r.pmul(&t, &h2)), &r.pone()));
        let (c, d) = r.pdivrem(&red(&r.pmul(&s, &b)), &h2);
        s = red(&r.psub(&s, &d));
        t = red(&r.psub(&t, &r.padd(&r.pmul(&t, &b), &r.pmul(&c, &g2))));
        g = g2;
        h = h2;
    }
    let m = r.pow(p, sigma);
    (r.preduce_lower(&g, &m), r.preduce_lower(&h, &m))
}
