//! The MaxMin construction of reduced `p`-integral bases.

use crate::error::{Error, Result};
use crate::okutsu::{numerator, SymbolicW};
use crate::om::{boost_approximants, montes, om_index, value_at, IndexSummary, OmRepresentation};
use crate::ring::Pid;
use crate::upoly::{Poly, PolyOps};
use crate::value::{ceil, floor, q, Q, Val};

const MAX_BOOST_ROUNDS: usize = 64;
const MAX_PERMUTED_PRIMES: usize = 8;

/// One step of MaxMin: the index `j^{(i)}` and the value `α_i = w(g_{j^{(i)}})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxMinStep {
    pub index: Vec<usize>,
    pub alpha: Q,
    /// Prime whose coordinate is incremented next.
    pub argmin: usize,
}

/// Runs MaxMin on the symbolic values; ties go to the earliest prime in `order`.
pub fn maxmin(sw: &SymbolicW, order: &[usize]) -> Vec<MaxMinStep> {
    let s = sw.degrees.len();
    let d: usize = sw.degrees.iter().sum();
    let mut j = vec![0usize; s];
    let mut out = Vec::with_capacity(d);
    for _ in 0..d {
        let mut best: Option<(Val, usize)> = None;
        for &qi in order {
            let v = sw.eval(&j, qi);
            if best.is_none_or(|(b, _)| v < b) {
                best = Some((v, qi));
            }
        }
        let (v, qi) = best.unwrap();
        out.push(MaxMinStep { index: j.clone(), alpha: v.expect_fin("MaxMin value"), argmin: qi });
        j[qi] += 1;
    }
    out
}

/// A reduced local basis `g_i / p^{η_i}`, `g_i` monic of degree `i`.
#[derive(Clone, Debug)]
pub struct LocalBasis<E> {
    pub p: E,
    pub numerators: Vec<Poly<E>>,
    pub exponents: Vec<i64>,
    /// Exact values `w(g_i(θ))`, shifted for ideals.
    pub alphas: Vec<Q>,
    pub trace: Vec<MaxMinStep>,
    /// Expected `Σ η_i`: `ind_p(f)`, or `ind_p(I)` for ideals.
    pub index: i64,
}

impl<E> LocalBasis<E> {
    pub fn is_reduced_certified(&self) -> bool {
        self.exponents.iter().sum::<i64>() == self.index
    }
}

/// The primes (indices into `om.reps`) in their canonical order, then every
/// further ordering to try if the certificate fails.
pub fn well_order(s: usize) -> Vec<Vec<usize>> {
    let base: Vec<usize> = (0..s).collect();
    let mut out = vec![base.clone()];
    if s <= MAX_PERMUTED_PRIMES {
        let mut all = vec![];
        permutations(&mut base.clone(), 0, &mut all);
        out.extend(all.into_iter().filter(|p| *p != base));
    }
    out
}

fn permutations(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Product numerator `Π_𝔭 g_{𝔭, j_𝔭}` over the primes in `subset`.
pub fn product_numerator<R: Pid>(om: &OmRepresentation<R>, subset: &[usize], j: &[usize]) -> Poly<R::Elem> {
    let r = &om.ring;
    subset.iter().zip(j).fold(r.pone(), |acc, (&pi, &m)| r.pmul(&acc, &numerator(&om.reps[pi], m)))
}

/// MaxMin over the primes `subset` of `om`, with per-prime shifts, boosting
/// approximants until the symbolic values are exact. `expected` is the index
/// the exponents must add up to.
pub(crate) fn maxmin_basis<R: Pid>(
    om: &mut OmRepresentation<R>,
    subset: &[usize],
    shifts: &[Q],
    expected: i64,
) -> Result<LocalBasis<R::Elem>> {
    let r = om.ring.clone();
    'rounds: for _ in 0..MAX_BOOST_ROUNDS {
        let full = SymbolicW::build(om)?;
        let mut sw = full.restrict(subset);
        sw.shifts = subset.iter().map(|&i| shifts[i]).collect();
        let mut last_err = None;
        for order in well_order(subset.len()) {
            let trace = maxmin(&sw, &order);
            let top = trace.last().map(|s| s.alpha).unwrap_or(q(0));
            let low: Vec<usize> = subset.iter().copied().filter(|&i| om.reps[i].approx_value < Val::Fin(top)).collect();
            if !low.is_empty() {
                let targets: Vec<Q> = om.reps.iter().map(|_| top).collect();
                let f = om.f.clone();
                let mut reps = std::mem::take(&mut om.reps);
                let res = boost_approximants(&f, &mut reps, &targets);
                om.reps = reps;
                res?;
                continue 'rounds;
            }
            let mut numerators = vec![];
            let mut alphas = vec![];
            let mut exponents = vec![];
            for st in &trace {
                let g = product_numerator(om, subset, &st.index);
                let g = r.preduce_lower(&g, &r.pow(&om.p, ceil(&st.alpha).max(0) as u64));
                let mut actual = Val::Inf;
                for (k, &pi) in subset.iter().enumerate() {
                    actual = actual.min(value_at(&om.f, &om.reps[pi], &g)? - sw.shifts[k]);
                }
                alphas.push(actual.expect_fin("basis value"));
                exponents.push(floor(&st.alpha));
                numerators.push(g);
            }
            let exact = alphas.iter().zip(&trace).all(|(a, st)| *a == st.alpha);
            if exact && exponents.iter().sum::<i64>() == expected {
                return Ok(LocalBasis { p: om.p.clone(), numerators, exponents, alphas, trace, index: expected });
            }
            last_err = Some(format!("exponents sum to {}, expected {expected}", exponents.iter().sum::<i64>()));
        }
        return Err(Error::Certificate(last_err.unwrap_or_default()));
    }
    Err(Error::Precision("approximants kept changing the MaxMin values".into()))
}

/// Reduced `p`-integral basis for `f` at a prime `p`.
pub fn p_basis<R: Pid>(r: &R, f: &Poly<R::Elem>, p: &R::Elem) -> Result<(LocalBasis<R::Elem>, OmRepresentation<R>, IndexSummary)> {
    let mut om = montes(r, f, p)?;
    let idx = om_index(&mut om)?;
    let all: Vec<usize> = (0..om.reps.len()).collect();
    let shifts = vec![q(0); all.len()];
    let b = maxmin_basis(&mut om, &all, &shifts, idx.total)?;
    Ok((b, om, idx))
}

/// `Σ ⌊α_i⌋ = ind` and every numerator monic of degree `i`.
pub fn certify_p_basis<R: Pid>(r: &R, b: &LocalBasis<R::Elem>, expected: i64) -> bool {
    b.exponents.iter().sum::<i64>() == expected
        && b.numerators.iter().enumerate().all(|(i, g)| g.len() == i + 1 && r.is_monic(g))
        && b.alphas.iter().zip(&b.exponents).all(|(a, e)| floor(a) == *e)
}
