//! Independent checks of computed bases. Nothing here looks at an OM
//! representation except `prime_values`, which only borrows approximants to
//! form resultants.

use crate::error::{Error, Result};
use crate::ff::{Fe, FfField};
use crate::om::{boost_approximants, OmRepresentation};
use crate::ring::Pid;
use crate::upoly::{Poly, PolyOps};
use crate::value::{q, Q, Val};
use num_bigint::BigUint;

const PZ_MAX_DEGREE: usize = 6;
const PZ_MAX_RESIDUES: u64 = 1 << 12;

/// Element of the fraction field of `A`, reduced with a canonical denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frac<E> {
    pub n: E,
    pub d: E,
}

pub fn frac<R: Pid>(r: &R, n: &R::Elem, d: &R::Elem) -> Frac<R::Elem> {
    assert!(!r.is_zero(d), "zero denominator");
    let g = r.gcd(n, d);
    let (mut n, mut d) = (r.exact_div(n, &g), r.exact_div(d, &g));
    let nd = r.normalize(&d);
    if nd != d {
        let u = r.exact_div(&d, &nd);
        n = r.exact_div(&n, &u);
        d = nd;
    }
    Frac { n, d }
}

pub fn fint<R: Pid>(r: &R, n: &R::Elem) -> Frac<R::Elem> {
    Frac { n: n.clone(), d: r.one() }
}

pub fn fadd<R: Pid>(r: &R, a: &Frac<R::Elem>, b: &Frac<R::Elem>) -> Frac<R::Elem> {
    frac(r, &r.add(&r.mul(&a.n, &b.d), &r.mul(&b.n, &a.d)), &r.mul(&a.d, &b.d))
}

pub fn fsub<R: Pid>(r: &R, a: &Frac<R::Elem>, b: &Frac<R::Elem>) -> Frac<R::Elem> {
    fadd(r, a, &Frac { n: r.neg(&b.n), d: b.d.clone() })
}

pub fn fmul<R: Pid>(r: &R, a: &Frac<R::Elem>, b: &Frac<R::Elem>) -> Frac<R::Elem> {
    frac(r, &r.mul(&a.n, &b.n), &r.mul(&a.d, &b.d))
}

pub fn fdiv<R: Pid>(r: &R, a: &Frac<R::Elem>, b: &Frac<R::Elem>) -> Frac<R::Elem> {
    frac(r, &r.mul(&a.n, &b.d), &r.mul(&a.d, &b.n))
}

/// `v_p`, `None` for zero.
pub fn fval<R: Pid>(r: &R, a: &Frac<R::Elem>, p: &R::Elem) -> Option<i64> {
    let vn = r.valuation(&a.n, p)? as i64;
    Some(vn - r.valuation(&a.d, p).unwrap_or(0) as i64)
}

fn fresidue<R: Pid>(r: &R, k: &FfField, p: &R::Elem, a: &Frac<R::Elem>) -> Fe {
    k.div(&r.to_residue(k, p, &a.n), &r.to_residue(k, p, &a.d))
}

/// Characteristic polynomial of a square matrix over `A` (Berkowitz, no divisions),
/// coefficients from the constant term up.
pub fn charpoly_matrix<R: Pid>(r: &R, m: &[Vec<R::Elem>]) -> Poly<R::Elem> {
    let n = m.len();
    let mut v = vec![r.one()];
    for k in 0..n {
        let mut t = vec![r.one(), r.neg(&m[k][k])];
        let mut ac: Vec<R::Elem> = (0..k).map(|i| m[i][k].clone()).collect();
        for _ in 0..k {
            let dot = (0..k).fold(r.zero(), |s, i| r.add(&s, &r.mul(&m[k][i], &ac[i])));
            t.push(r.neg(&dot));
            ac = (0..k).map(|i| (0..k).fold(r.zero(), |s, j| r.add(&s, &r.mul(&m[i][j], &ac[j])))).collect();
        }
        let w = (0..k + 2)
            .map(|i| (0..=i.min(k)).fold(r.zero(), |s, l| r.add(&s, &r.mul(&t[i - l], &v[l]))))
            .collect();
        v = w;
    }
    v.reverse();
    v
}

/// Characteristic polynomial of `g(θ)` acting on `K[x]/(f)`.
pub fn charpoly<R: Pid>(r: &R, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Poly<R::Elem> {
    let d = f.len() - 1;
    let mut cols = vec![];
    let mut h = r.prem(g, f);
    for _ in 0..d {
        cols.push(h.clone());
        h = r.prem(&r.pmul(&h, &r.px()), f);
    }
    let m: Vec<Vec<R::Elem>> = (0..d).map(|i| (0..d).map(|j| cols[j].get(i).cloned().unwrap_or_else(|| r.zero())).collect()).collect();
    charpoly_matrix(r, &m)
}

/// `w(g(θ)) = min_𝔭 w_𝔭(g(θ))` from the Newton polygon of the characteristic polynomial.
pub fn w_min<R: Pid>(r: &R, f: &Poly<R::Elem>, g: &Poly<R::Elem>, p: &R::Elem) -> Val {
    let c = charpoly(r, f, g);
    let d = c.len() - 1;
    let mut best = Val::Inf;
    for (j, cj) in c.iter().enumerate().take(d) {
        if let Some(v) = r.valuation(cj, p) {
            best = best.min(Val::Fin(q(v as i64) / q((d - j) as i64)));
        }
    }
    best
}

/// Whether `g(θ)/a` is integral at `p`.
pub fn is_integral<R: Pid>(r: &R, f: &Poly<R::Elem>, g: &Poly<R::Elem>, a: &R::Elem, p: &R::Elem) -> bool {
    let va = r.valuation(a, p).expect("nonzero denominator") as i64;
    let c = charpoly(r, f, g);
    let d = c.len() - 1;
    c.iter().enumerate().all(|(j, cj)| r.valuation(cj, p).is_none_or(|v| v as i64 >= (d - j) as i64 * va))
}

/// `w_𝔭(g(θ))` for every prime above `p`, as `v_p(Res(φ̃_𝔭, g)) / deg φ̃_𝔭` with
/// approximants pushed to precision `2 (v_p(Δ) + 1)` and then doubled until two
/// successive precisions agree.
pub fn prime_values<R: Pid>(om: &mut OmRepresentation<R>, g: &Poly<R::Elem>) -> Result<Vec<Val>> {
    let r = om.ring.clone();
    let vd = r.valuation(&r.discriminant(&om.f), &om.p).ok_or(Error::Inseparable)? as i64;
    let f = om.f.clone();
    let mut target = 2 * (vd + 1);
    let mut last: Option<Vec<Val>> = None;
    for _ in 0..16 {
        let targets = vec![q(target); om.reps.len()];
        boost_approximants(&f, &mut om.reps, &targets)?;
        let vals: Vec<Val> = om
            .reps
            .iter()
            .map(|rep| match r.valuation(&r.resultant(&rep.approx, g), &om.p) {
                Some(v) => Val::Fin(q(v as i64) / q(rep.degree as i64)),
                None => Val::Inf,
            })
            .collect();
        if last.as_ref() == Some(&vals) {
            return Ok(vals);
        }
        last = Some(vals);
        target *= 2;
    }
    Err(Error::Precision("resultant valuations did not stabilize".into()))
}

/// Basis `h_i(θ)/a_i` given by numerators (monic, degree `i`) and denominators.
#[derive(Clone, Debug)]
pub struct BasisView<'a, E> {
    pub numerators: &'a [Poly<E>],
    pub denominators: &'a [E],
}

/// Coordinates of `c(θ)` (coefficients in the fraction field) in the basis.
fn coordinates<R: Pid>(r: &R, b: &BasisView<R::Elem>, c: &[Frac<R::Elem>]) -> Vec<Frac<R::Elem>> {
    let d = b.numerators.len();
    let mut rest: Vec<Frac<R::Elem>> = (0..d).map(|i| c.get(i).cloned().unwrap_or_else(|| fint(r, &r.zero()))).collect();
    let mut out = vec![fint(r, &r.zero()); d];
    for i in (0..d).rev() {
        let ci = fmul(r, &rest[i], &fint(r, &b.denominators[i]));
        for (k, hk) in b.numerators[i].iter().enumerate() {
            let t = fdiv(r, &fmul(r, &ci, &fint(r, hk)), &fint(r, &b.denominators[i]));
            rest[k] = fsub(r, &rest[k], &t);
        }
        out[i] = ci;
    }
    out
}

/// Structure constants: `table[i][j]` are the coordinates of `b_i b_j`.
pub fn mult_table<R: Pid>(r: &R, f: &Poly<R::Elem>, b: &BasisView<R::Elem>) -> Vec<Vec<Vec<Frac<R::Elem>>>> {
    let d = b.numerators.len();
    let mut t = vec![vec![vec![]; d]; d];
    for i in 0..d {
        for j in i..d {
            let h = r.prem(&r.pmul(&b.numerators[i], &b.numerators[j]), f);
            let den = r.mul(&b.denominators[i], &b.denominators[j]);
            let c: Vec<_> = h.iter().map(|x| frac(r, x, &den)).collect();
            let co = coordinates(r, b, &c);
            t[i][j] = co.clone();
            t[j][i] = co;
        }
    }
    t
}

/// Whether the span is closed under multiplication: at `p` when given, over all
/// of `A` otherwise.
pub fn order_closed<R: Pid>(r: &R, f: &Poly<R::Elem>, b: &BasisView<R::Elem>, p: Option<&R::Elem>) -> bool {
    let t = mult_table(r, f, b);
    t.iter().flatten().flatten().all(|c| match p {
        Some(p) => fval(r, c, p).is_none_or(|v| v >= 0),
        None => r.is_unit(&c.d),
    })
}

fn rref(k: &FfField, m: &mut [Vec<Fe>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut piv = vec![];
    let mut row = 0;
    for c in 0..cols {
        let Some(s) = (row..rows).find(|&i| !k.is_zero(&m[i][c])) else { continue };
        m.swap(row, s);
        let inv = k.inv(&m[row][c]);
        m[row] = m[row].iter().map(|x| k.mul(x, &inv)).collect();
        for i in 0..rows {
            if i != row && !k.is_zero(&m[i][c]) {
                let fct = m[i][c].clone();
                let sub: Vec<Fe> = m[row].iter().map(|x| k.mul(x, &fct)).collect();
                m[i] = m[i].iter().zip(&sub).map(|(a, b)| k.sub(a, b)).collect();
            }
        }
        piv.push(c);
        row += 1;
        if row == rows {
            break;
        }
    }
    piv
}

/// Kernel basis of `v ↦ v M` (row vectors).
fn left_kernel(k: &FfField, m: &[Vec<Fe>]) -> Vec<Vec<Fe>> {
    let n = m.len();
    let cols = if n == 0 { 0 } else { m[0].len() };
    // Columns of M become rows of M^T; the kernel of M^T x = 0 gives x.
    let mut t: Vec<Vec<Fe>> = (0..cols).map(|j| (0..n).map(|i| m[i][j].clone()).collect()).collect();
    let piv = rref(k, &mut t);
    let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![k.zero(); n];
            v[fc] = k.one();
            for (row, &pc) in piv.iter().enumerate() {
                v[pc] = k.neg(&t[row][fc]);
            }
            v
        })
        .collect()
}

fn rank(k: &FfField, m: &[Vec<Fe>]) -> usize {
    let mut m = m.to_vec();
    rref(k, &mut m).len()
}

/// Pohst–Zassenhaus: the order spanned by `b` is `p`-maximal iff multiplication
/// `O/pO → End(I/pI)` is injective, `I` the `p`-radical.
pub fn pz_maximal<R: Pid>(r: &R, f: &Poly<R::Elem>, b: &BasisView<R::Elem>, p: &R::Elem) -> Result<bool> {
    let d = b.numerators.len();
    let k = r.residue_field(p);
    let size = k.order();
    if d > PZ_MAX_DEGREE || size > BigUint::from(PZ_MAX_RESIDUES) {
        return Err(Error::DeskScale(format!("maximality check needs d ≤ {PZ_MAX_DEGREE} and small residue field")));
    }
    let size: u64 = size.try_into().unwrap();
    let table = mult_table(r, f, b);
    if table.iter().flatten().flatten().any(|c| fval(r, c, p).is_some_and(|v| v < 0)) {
        return Err(Error::Input("basis does not span an order".into()));
    }
    let tk: Vec<Vec<Vec<Fe>>> = table.iter().map(|row| row.iter().map(|c| c.iter().map(|x| fresidue(r, &k, p, x)).collect()).collect()).collect();
    let mul = |x: &[Fe], y: &[Fe]| -> Vec<Fe> {
        let mut z = vec![k.zero(); d];
        for i in 0..d {
            if k.is_zero(&x[i]) {
                continue;
            }
            for j in 0..d {
                if k.is_zero(&y[j]) {
                    continue;
                }
                let xy = k.mul(&x[i], &y[j]);
                for l in 0..d {
                    z[l] = k.add(&z[l], &k.mul(&xy, &tk[i][j][l]));
                }
            }
        }
        z
    };
    let power = |x: &[Fe], e: u64| -> Vec<Fe> {
        let mut acc: Vec<Fe> = (0..d).map(|i| if i == 0 { k.one() } else { k.zero() }).collect();
        let mut base = x.to_vec();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(&acc, &base);
            }
            base = mul(&base, &base);
            e >>= 1;
        }
        acc
    };
    // x ↦ x^{|k|^s} is k-linear; with |k|^s ≥ d its kernel is the radical.
    let mut s = 1;
    while size.pow(s) < d as u64 {
        s += 1;
    }
    let frob: Vec<Vec<Fe>> = (0..d)
        .map(|i| {
            let mut x: Vec<Fe> = (0..d).map(|j| if j == i { k.one() } else { k.zero() }).collect();
            for _ in 0..s {
                x = power(&x, size);
            }
            x
        })
        .collect();
    let mut rad = left_kernel(&k, &frob);
    let piv = rref(&k, &mut rad);
    // Basis of I: lifts of the reduced radical basis at pivots, p e_j elsewhere.
    let mut ibasis: Vec<Vec<Frac<R::Elem>>> = vec![];
    for j in 0..d {
        match piv.iter().position(|&c| c == j) {
            Some(row) => ibasis.push(rad[row].iter().map(|x| fint(r, &r.lift_residue(&k, p, x))).collect()),
            None => ibasis.push((0..d).map(|l| fint(r, &if l == j { p.clone() } else { r.zero() })).collect()),
        }
    }
    let in_ibasis = |y: &[Frac<R::Elem>]| -> Vec<Frac<R::Elem>> {
        let mut c = vec![fint(r, &r.zero()); d];
        for &j in &piv {
            c[j] = y[j].clone();
        }
        for j in (0..d).filter(|j| !piv.contains(j)) {
            let mut t = y[j].clone();
            for &pj in &piv {
                t = fsub(r, &t, &fmul(r, &c[pj], &ibasis[pj][j]));
            }
            c[j] = fdiv(r, &t, &fint(r, p));
        }
        c
    };
    let fmul_vec = |x: &[Frac<R::Elem>], y: &[Frac<R::Elem>]| -> Vec<Frac<R::Elem>> {
        let mut z = vec![fint(r, &r.zero()); d];
        for i in 0..d {
            for j in 0..d {
                if r.is_zero(&x[i].n) || r.is_zero(&y[j].n) {
                    continue;
                }
                let xy = fmul(r, &x[i], &y[j]);
                for l in 0..d {
                    z[l] = fadd(r, &z[l], &fmul(r, &xy, &table[i][j][l]));
                }
            }
        }
        z
    };
    let mut images = vec![];
    for i in 0..d {
        let bi: Vec<Frac<R::Elem>> = (0..d).map(|l| fint(r, &if l == i { r.one() } else { r.zero() })).collect();
        let mut flat = vec![];
        for e in &ibasis {
            let c = in_ibasis(&fmul_vec(&bi, e));
            if c.iter().any(|x| fval(r, x, p).is_some_and(|v| v < 0)) {
                return Err(Error::Internal("radical is not an ideal".into()));
            }
            flat.extend(c.iter().map(|x| fresidue(r, &k, p, x)));
        }
        images.push(flat);
    }
    Ok(rank(&k, &images) == d)
}

/// Residues of `A` modulo `p^n`, as `Σ p^k lift(x_k)`.
fn residues_mod_power<R: Pid>(r: &R, p: &R::Elem, n: u32) -> Vec<R::Elem> {
    let k = r.residue_field(p);
    let digits: Vec<R::Elem> = k.elements().iter().map(|x| r.lift_residue(&k, p, x)).collect();
    let mut out = vec![r.zero()];
    let mut pk = r.one();
    for _ in 0..n {
        out = out.iter().flat_map(|a| digits.iter().map(|c| r.add(a, &r.mul(c, &pk))).collect::<Vec<_>>()).collect();
        pk = r.mul(&pk, p);
    }
    out
}

/// `α_i = max w(h(θ))` over monic `h` of degree `i` with coefficients taken mod `p^n`.
pub fn brute_alpha<R: Pid>(r: &R, f: &Poly<R::Elem>, p: &R::Elem, i: usize, n: u32, budget: u64) -> Result<Q> {
    let res = residues_mod_power(r, p, n);
    let count = (res.len() as u64).checked_pow(i as u32).unwrap_or(u64::MAX);
    if count > budget {
        return Err(Error::DeskScale(format!("{count} candidates exceed the budget {budget}")));
    }
    let mut best = q(0);
    let mut idx = vec![0usize; i];
    loop {
        let mut h: Poly<R::Elem> = idx.iter().map(|&j| res[j].clone()).collect();
        h.push(r.one());
        if let Val::Fin(w) = w_min(r, f, &h, p) {
            best = best.max(w);
        }
        let mut pos = 0;
        loop {
            if pos == i {
                return Ok(best);
            }
            idx[pos] += 1;
            if idx[pos] < res.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Determinant by fraction-free Bareiss elimination.
pub fn bareiss_det<R: Pid>(r: &R, m: &[Vec<R::Elem>]) -> R::Elem {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = false;
    let mut prev = r.one();
    for k in 0..n {
        let Some(s) = (k..n).find(|&i| !r.is_zero(&a[i][k])) else { return r.zero() };
        if s != k {
            a.swap(s, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = r.sub(&r.mul(&a[i][j], &a[k][k]), &r.mul(&a[i][k], &a[k][j]));
                a[i][j] = r.exact_div(&t, &prev);
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        r.neg(&det)
    } else {
        det
    }
}

/// `v_p` of the index `[span b : A[θ]]` from the determinant of the transition matrix.
pub fn transition_index<R: Pid>(r: &R, b: &BasisView<R::Elem>, p: &R::Elem) -> i64 {
    let d = b.numerators.len();
    let l = b.denominators.iter().fold(r.one(), |acc, a| r.mul(&acc, a));
    let m: Vec<Vec<R::Elem>> = (0..d)
        .map(|i| {
            let s = r.exact_div(&l, &b.denominators[i]);
            (0..d).map(|j| r.mul(&s, b.numerators[i].get(j).unwrap_or(&r.zero()))).collect()
        })
        .collect();
    let det = bareiss_det(r, &m);
    let vl = r.valuation(&l, p).unwrap_or(0) as i64;
    d as i64 * vl - r.valuation(&det, p).expect("nonsingular transition matrix") as i64
}
