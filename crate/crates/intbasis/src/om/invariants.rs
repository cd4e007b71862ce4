//! Local invariants read off an OM representation: indices, resultant
//! valuations, Okutsu bounds and the precision needed for truncation.

use super::{montes, refine_once, value_at, OmRepresentation};
use crate::error::{Error, Result};
use crate::ff::ff_squarefree;
use crate::ring::Pid;
use crate::upoly::{hensel_lift, Poly, PolyOps, TruncatedPoly};
use crate::value::{floor, q, Q, Val};

const MAX_SEPARATION_ROUNDS: usize = 200;

/// Index data of `f` at `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSummary {
    /// `ind(F_𝔭)` per prime.
    pub local: Vec<i64>,
    /// `v_p(Res(F_𝔭, F_𝔮))`, zero on the diagonal.
    pub res: Vec<Vec<i64>>,
    /// `ind_p(f) = Σ ind(F_𝔭) + Σ_{𝔭<𝔮} v_p(Res(F_𝔭, F_𝔮))`.
    pub total: i64,
}

/// Mixed-radix digits of `m` for the degree sequence `1 = m_0 | m_1 | … | m_r | d`.
pub fn digits(m: usize, degrees: &[usize], d: usize) -> Vec<usize> {
    let mut bounds: Vec<usize> = vec![1];
    bounds.extend_from_slice(degrees);
    bounds.push(d);
    let mut out = vec![0; bounds.len() - 1];
    let mut rest = m;
    for k in (0..out.len()).rev() {
        out[k] = rest / bounds[k];
        rest %= bounds[k];
    }
    out
}

/// Values `v(φ(θ_𝔭))` for `x, φ_1, …, φ_r` of prime `i` at its own root.
pub fn own_basis_values<R: Pid>(om: &OmRepresentation<R>, i: usize) -> Result<Vec<Val>> {
    let rep = &om.reps[i];
    let r = &om.ring;
    let mut v = vec![value_at(&om.f, rep, &r.px())?];
    v.extend(rep.frame_values().into_iter().map(Val::Fin));
    Ok(v)
}

/// `v(g_m(θ))` for the Okutsu numerators `g_m = x^{j_0} φ_1^{j_1} ⋯ φ_r^{j_r}`.
pub fn okutsu_value(values: &[Val], degrees: &[usize], d: usize, m: usize) -> Val {
    let j = digits(m, degrees, d);
    j.iter().zip(values).fold(Val::zero(), |acc, (&jk, v)| acc + v.scale(jk as i64))
}

/// Refines approximants until each is closer to its own root than to every other.
pub fn separate<R: Pid>(om: &mut OmRepresentation<R>) -> Result<()> {
    let n = om.reps.len();
    for _ in 0..MAX_SEPARATION_ROUNDS {
        let mut changed = false;
        for i in 0..n {
            let mut worst = Val::Fin(q(i64::MIN / 4));
            for j in 0..n {
                if j != i {
                    worst = worst.max(value_at(&om.f, &om.reps[j], &om.reps[i].approx)?);
                }
            }
            if om.reps[i].approx_value <= worst {
                let f = om.f.clone();
                refine_once(&f, &mut om.reps[i])?;
                changed = true;
            }
        }
        if !changed {
            return Ok(());
        }
    }
    Err(Error::Precision("approximants could not be separated".into()))
}

/// `v(φ_𝔮(θ_𝔭))` for all pairs, after separation.
pub fn approx_cross_values<R: Pid>(om: &OmRepresentation<R>) -> Result<Vec<Vec<Val>>> {
    let n = om.reps.len();
    let mut w = vec![vec![Val::Inf; n]; n];
    for (i, row) in w.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            if i != j {
                *cell = value_at(&om.f, &om.reps[i], &om.reps[j].approx)?;
            }
        }
    }
    Ok(w)
}

/// `v_p(Res(F_𝔭, F_𝔮))` from the cross values; checks the symmetry of the resultant.
pub fn resultant_valuations<R: Pid>(om: &mut OmRepresentation<R>) -> Result<Vec<Vec<i64>>> {
    separate(om)?;
    let n = om.reps.len();
    for _ in 0..MAX_SEPARATION_ROUNDS {
        let w = approx_cross_values(om)?;
        let mut res = vec![vec![0i64; n]; n];
        let mut ok = true;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let a = w[i][j].scale(om.reps[i].degree as i64);
                let b = w[j][i].scale(om.reps[j].degree as i64);
                match (a, b) {
                    (Val::Fin(a), Val::Fin(b)) if a == b && a.is_integer() => res[i][j] = a.to_integer(),
                    _ => ok = false,
                }
            }
        }
        if ok {
            return Ok(res);
        }
        let f = om.f.clone();
        for rep in om.reps.iter_mut() {
            refine_once(&f, rep)?;
        }
    }
    Err(Error::Precision("resultant valuations did not stabilize".into()))
}

/// Local index of each prime and `ind_p(f)`.
pub fn om_index<R: Pid>(om: &mut OmRepresentation<R>) -> Result<IndexSummary> {
    let res = resultant_valuations(om)?;
    let mut local = vec![];
    for i in 0..om.reps.len() {
        let vals = own_basis_values(om, i)?;
        let rep = &om.reps[i];
        let degs = rep.frame_degrees();
        let mut s = 0;
        for m in 1..rep.degree {
            s += floor(&okutsu_value(&vals, &degs, rep.degree, m).expect_fin("numerator value"));
        }
        local.push(s);
    }
    let n = local.len();
    let mut total: i64 = local.iter().sum();
    for i in 0..n {
        for j in i + 1..n {
            total += res[i][j];
        }
    }
    Ok(IndexSummary { local, res, total })
}

/// Discriminant-type invariants of `f` at `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaInvariants {
    /// `v_p(disc f)`.
    pub delta: i64,
    /// `v_p(disc F_𝔭)` per prime.
    pub delta_local: Vec<i64>,
    /// Okutsu bounds `δ_0(F_𝔭)`.
    pub delta0: Vec<Q>,
    pub delta_star: Q,
    pub rho: i64,
    pub index: IndexSummary,
}

pub fn delta_invariants<R: Pid>(om: &mut OmRepresentation<R>) -> Result<DeltaInvariants> {
    let r = om.ring.clone();
    let index = om_index(om)?;
    let delta = r.valuation(&r.discriminant(&om.f), &om.p).ok_or(Error::Inseparable)? as i64;
    let df = r.pderiv(&om.f);
    let n = om.reps.len();
    let mut delta_local = vec![];
    let mut delta0 = vec![];
    let mut rho = 0;
    let mut star = q(0);
    for i in 0..n {
        let rep = &om.reps[i];
        let d = rep.degree as i64;
        let vd = value_at(&om.f, rep, &df)?.expect_fin("value of f'") * q(d);
        let others: i64 = (0..n).filter(|&j| j != i).map(|j| index.res[i][j]).sum();
        let dl = vd - q(others);
        if !dl.is_integer() {
            return Err(Error::Internal("non-integral local discriminant".into()));
        }
        let dl = dl.to_integer();
        delta_local.push(dl);
        let d0 = match rep.chain.levels.last() {
            Some(l) => q(d) * l.lambda / q(l.m as i64),
            None => q(0),
        };
        delta0.push(d0);
        star += q(d) * d0 / q(2) + q(others);
        rho += dl - 2 * index.local[i] - (rep.f * (rep.e - 1)) as i64;
    }
    let sum: i64 = delta_local.iter().sum::<i64>() + (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).map(|(i, j)| index.res[i][j]).sum::<i64>();
    if sum != delta {
        return Err(Error::Internal(format!("local discriminants sum to {sum}, expected {delta}")));
    }
    Ok(DeltaInvariants { delta, delta_local, delta0, delta_star: star, rho, index })
}

/// Dedekind-type test for `ind_p(f) = 0` from `f mod p^2` only.
pub fn detect_index_zero<R: Pid>(r: &R, f: &Poly<R::Elem>, p: &R::Elem) -> bool {
    let k = r.residue_field(p);
    let fbar = r.to_residue_poly(&k, p, f);
    let parts = ff_squarefree(&k, &fbar);
    if parts.iter().all(|(_, n)| *n == 1) {
        return true;
    }
    let powers: Vec<_> = parts.iter().map(|(g, n)| k.ppow(g, *n)).collect();
    let lifted = hensel_lift(r, f, p, &powers, 2);
    let p2 = r.pow(p, 2);
    for ((g, n), big) in parts.iter().zip(&lifted) {
        if *n == 1 {
            continue;
        }
        let gl = r.lift_residue_poly(&k, p, g);
        let rem = r.preduce(&r.prem(big, &gl), &p2);
        if rem.is_empty() {
            return false;
        }
        let red = r.to_residue_poly(&k, p, &r.pdiv_scalar(&rem, p));
        if k.pgcd(&red, g).len() > 1 {
            return false;
        }
    }
    true
}

/// Montes on `f mod p^σ`, accepted only when `σ > 2 ind + 1`. Any lift of the
/// truncation carries the same information, so an inseparable canonical lift
/// is replaced by `g + p^σ x^j`.
pub fn montes_truncated<R: Pid>(r: &R, t: &TruncatedPoly<R::Elem>) -> Result<(OmRepresentation<R>, IndexSummary)> {
    let ps = r.pow(&t.prime, t.sigma);
    let d = t.poly.len().saturating_sub(1);
    let lift = std::iter::once(t.poly.clone())
        .chain((0..d).map(|j| r.padd(&t.poly, &r.pscale(&r.pmono(j), &ps))))
        .find(|g| !r.is_zero(&r.discriminant(g)))
        .ok_or_else(|| Error::Precision("no separable lift of the truncation".into()))?;
    let mut om = match montes(r, &lift, &t.prime) {
        Err(Error::Inseparable) => return Err(Error::Precision("truncated polynomial is inseparable".into())),
        other => other?,
    };
    let idx = om_index(&mut om)?;
    if (t.sigma as i64) <= 2 * idx.total + 1 {
        return Err(Error::Precision(format!("precision {} does not exceed 2 ind + 1 = {}", t.sigma, 2 * idx.total + 1)));
    }
    Ok((om, idx))
}

/// Doubles the precision from 4 until the truncated computation certifies itself.
pub fn montes_auto<R: Pid>(r: &R, f: &Poly<R::Elem>, p: &R::Elem) -> Result<(OmRepresentation<R>, IndexSummary, u64)> {
    let mut sigma = 4;
    loop {
        match montes_truncated(r, &r.truncate(f, p, sigma)) {
            Ok((om, idx)) => return Ok((om, idx, sigma)),
            Err(Error::Precision(_)) if sigma < 1 << 20 => sigma *= 2,
            Err(e) => return Err(e),
        }
    }
}
