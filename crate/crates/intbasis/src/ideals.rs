//! Fractional ideals given by prime-ideal exponents, their normalization
//! `I = α I*`, and local bases of `I*`.

use crate::error::{Error, Result};
use crate::maxmin::{maxmin_basis, LocalBasis};
use crate::om::{boost_approximants, value_at, IndexSummary, OmRepresentation};
use crate::ring::Pid;
use crate::upoly::PolyOps;
use crate::value::{floor, q, Q, Val};

/// The prime ideal with the given ordinal in the canonical OM ordering above `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeIdealId<E> {
    pub p: E,
    pub ordinal: usize,
}

/// `Π 𝔭^{n_𝔭}`; absent primes have exponent zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FractionalIdeal<E> {
    pub factors: Vec<(PrimeIdealId<E>, i64)>,
}

impl<E: Clone + PartialEq> FractionalIdeal<E> {
    pub fn exponent(&self, p: &E, ordinal: usize) -> i64 {
        self.factors.iter().filter(|(id, _)| id.p == *p && id.ordinal == ordinal).map(|x| x.1).sum()
    }
    pub fn primes(&self) -> Vec<E> {
        let mut v: Vec<E> = vec![];
        for (id, _) in &self.factors {
            if !v.contains(&id.p) {
                v.push(id.p.clone());
            }
        }
        v
    }
}

/// `m_p = max_𝔭 ⌈n_𝔭 / e_𝔭⌉` and the exponents `n*_𝔭 = n_𝔭 - e_𝔭 m_p ≤ 0`.
pub fn normalize_at<R: Pid>(om: &OmRepresentation<R>, ideal: &FractionalIdeal<R::Elem>) -> (i64, Vec<i64>) {
    let n: Vec<i64> = om.reps.iter().map(|rep| ideal.exponent(&om.p, rep.ordinal)).collect();
    let m = om.reps.iter().zip(&n).map(|(rep, &ni)| crate::value::ceil(&(q(ni) / q(rep.e as i64)))).max().unwrap_or(0);
    let star = om.reps.iter().zip(&n).map(|(rep, &ni)| ni - rep.e as i64 * m).collect();
    (m, star)
}

/// `ind_p(I*) = Σ_𝔭 (ind(F_𝔭) + ½ v(Res(F_𝔭, F̂_𝔭)) - f_𝔭 n*_𝔭)`.
pub fn ideal_index<R: Pid>(om: &OmRepresentation<R>, idx: &IndexSummary, star: &[i64]) -> i64 {
    idx.total - om.reps.iter().zip(star).map(|(rep, &n)| rep.f as i64 * n).sum::<i64>()
}

/// Local basis of `I*` at `p`, splitting off the residually separate primes
/// coprime to everything else (the set `T`) when there are any.
pub fn ideal_p_basis<R: Pid>(om: &mut OmRepresentation<R>, idx: &IndexSummary, star: &[i64]) -> Result<LocalBasis<R::Elem>> {
    let n = om.reps.len();
    let shifts: Vec<Q> = om.reps.iter().zip(star).map(|(rep, &s)| q(s) / q(rep.e as i64)).collect();
    let expected = ideal_index(om, idx, star);
    let in_t = |i: usize| idx.local[i] == 0 && (0..n).all(|j| idx.res[i][j] == 0) && star[i] == 0;
    let t: Vec<usize> = (0..n).filter(|&i| in_t(i)).collect();
    let s: Vec<usize> = (0..n).filter(|&i| !in_t(i)).collect();
    if t.is_empty() {
        return maxmin_basis(om, &s, &shifts, expected);
    }
    if s.len() as i64 > 2 * expected {
        return Err(Error::Internal(format!("{} primes outside T for ideal index {expected}", s.len())));
    }
    let r = om.ring.clone();
    let d = om.f.len() - 1;
    let dt: usize = t.iter().map(|&i| om.reps[i].degree).sum();
    let mut numerators: Vec<_> = (0..dt).map(|i| r.pmono(i)).collect();
    let mut exponents = vec![0; dt];
    let mut alphas = vec![];
    let mut trace = vec![];
    if !s.is_empty() {
        let sb = maxmin_basis(om, &s, &shifts, expected)?;
        let top = *sb.alphas.last().unwrap();
        let f = om.f.clone();
        let targets: Vec<Q> = om.reps.iter().map(|_| top + q(1)).collect();
        boost_approximants(&f, &mut om.reps, &targets)?;
        let g = t.iter().fold(r.pone(), |acc, &i| r.pmul(&acc, &om.reps[i].approx));
        for (b, &eta) in sb.numerators.iter().zip(&sb.exponents) {
            let h = r.preduce_lower(&r.pmul(&g, b), &r.pow(&om.p, eta as u64 + 1));
            numerators.push(h);
            exponents.push(eta);
        }
        trace = sb.trace;
    }
    debug_assert_eq!(numerators.len(), d);
    for h in &numerators {
        let mut actual = Val::Inf;
        for (i, rep) in om.reps.iter().enumerate() {
            actual = actual.min(value_at(&om.f, rep, h)? - shifts[i]);
        }
        alphas.push(actual.expect_fin("basis value"));
    }
    let ok = alphas.iter().zip(&exponents).all(|(a, e)| floor(a) == *e);
    if !ok || exponents.iter().sum::<i64>() != expected {
        return Err(Error::Certificate("split basis does not reach the ideal index".into()));
    }
    Ok(LocalBasis { p: om.p.clone(), numerators, exponents, alphas, trace, index: expected })
}
