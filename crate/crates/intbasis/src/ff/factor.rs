//! Factorization over finite fields: squarefree split, distinct-degree split,
//! then Cantor–Zassenhaus equal-degree splitting with a fixed seed.

use super::{FfField, FfPoly};
use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Pairwise coprime monic squarefree parts with multiplicities, sorted by multiplicity.
pub fn ff_squarefree(k: &FfField, f: &FfPoly) -> Vec<(FfPoly, usize)> {
    assert!(!f.is_empty(), "squarefree split of zero");
    let f = k.monic(f);
    let mut out = vec![];
    sqf_rec(k, &f, 1, &mut out);
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| poly_key(&a.0).cmp(&poly_key(&b.0))));
    out
}

fn sqf_rec(k: &FfField, f: &FfPoly, mult: usize, out: &mut Vec<(FfPoly, usize)>) {
    if f.len() <= 1 {
        return;
    }
    let df = k.pderiv(f);
    let mut c = k.pgcd(f, &df);
    let mut w = k.pdivrem(f, &c).0;
    let mut i = 1;
    while w.len() > 1 {
        let y = k.pgcd(&w, &c);
        let z = k.pdivrem(&w, &y).0;
        if z.len() > 1 {
            out.push((k.monic(&z), i * mult));
        }
        i += 1;
        c = k.pdivrem(&c, &y).0;
        w = y;
    }
    if c.len() > 1 {
        // what is left is a polynomial in x^p
        let p = k.p() as usize;
        let root: FfPoly = c.iter().step_by(p).map(|a| k.pth_root(a)).collect();
        sqf_rec(k, &k.monic(&root), mult * p, out);
    }
}

fn poly_key(a: &FfPoly) -> (usize, Vec<u64>) {
    (a.len(), a.iter().rev().flatten().copied().collect())
}

/// Monic irreducible factors with multiplicities, sorted by degree then coefficients.
pub fn ff_factorize(k: &FfField, f: &FfPoly) -> Vec<(FfPoly, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6f6d_6d61_786d_696e);
    let mut out = vec![];
    for (g, m) in ff_squarefree(k, f) {
        for (t, d) in distinct_degree(k, &g) {
            let mut parts = vec![];
            equal_degree(k, &t, d, &mut rng, &mut parts);
            out.extend(parts.into_iter().map(|h| (h, m)));
        }
    }
    out.sort_by_key(|a| poly_key(&a.0));
    out
}

fn distinct_degree(k: &FfField, g: &FfPoly) -> Vec<(FfPoly, usize)> {
    let q = k.order();
    let x = k.px();
    let mut rest = g.clone();
    let mut h = k.prem(&x, &rest);
    let mut out = vec![];
    let mut d = 0;
    while rest.len() > 1 && 2 * (d + 1) < rest.len() {
        d += 1;
        h = k.ppowmod(&h, &q, &rest);
        let t = k.pgcd(&k.psub(&h, &x), &rest);
        if t.len() > 1 {
            rest = k.pdivrem(&rest, &t).0;
            h = k.prem(&h, &rest);
            out.push((t, d));
        }
    }
    if rest.len() > 1 {
        let d = rest.len() - 1;
        out.push((k.monic(&rest), d));
    }
    out
}

fn equal_degree(k: &FfField, t: &FfPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FfPoly>) {
    let n = t.len() - 1;
    if n == d {
        out.push(k.monic(t));
        return;
    }
    let qd = k.order().pow(d as u32);
    loop {
        let a: FfPoly = k.trimmed((0..n).map(|_| k.random(rng)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = if k.p() == 2 {
            // absolute trace to F_2 of the algebra F_q[x]/t restricted appropriately
            let steps = k.dim() * d;
            let mut acc = vec![];
            let mut cur = k.prem(&a, t);
            for _ in 0..steps {
                acc = k.padd(&acc, &cur);
                cur = k.pmulmod(&cur, &cur, t);
            }
            acc
        } else {
            let e = (&qd - BigUint::one()) / BigUint::from(2u32);
            k.psub(&k.ppowmod(&a, &e, t), &k.pconst(k.one()))
        };
        let g = k.pgcd(&b, t);
        if g.len() > 1 && g.len() < t.len() {
            let h = k.pdivrem(t, &g).0;
            equal_degree(k, &g, d, rng, out);
            equal_degree(k, &h, d, rng, out);
            return;
        }
    }
}

/// Whether a polynomial of positive degree is irreducible.
pub fn ff_is_irreducible(k: &FfField, f: &FfPoly) -> bool {
    let fs = ff_factorize(k, f);
    fs.len() == 1 && fs[0].1 == 1
}
