//! The global pipeline: which primes matter, local bases at each, and the
//! glued triangular bases of `B` and of fractional ideals.

use crate::error::{Error, Result};
use crate::glue::{glue, index_of, TriangularBasis};
use crate::ideals::{ideal_index, ideal_p_basis, normalize_at, FractionalIdeal, PrimeIdealId};
use crate::irred::check_irreducible;
use crate::maxmin::LocalBasis;
use crate::om::{detect_index_zero, montes, om_index, IndexSummary, OmRepresentation};
use crate::ring::{factor_with_hints, prime_factors, FactorHint, Pid};
use crate::upoly::{Poly, PolyOps};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// What the caller knows about the primes of the index.
#[derive(Clone, Debug)]
pub struct PrimeHints<E> {
    /// Primes known to contain every prime of `D` (with `d_factors`).
    pub primes: Vec<E>,
    /// Squarefree factors `(m, e)` of `disc f`: `m^e` exactly divides it.
    pub delta_factors: Vec<(E, u64)>,
    /// Squarefree factors `(m, e)` of the index `D`.
    pub d_factors: Vec<(E, u64)>,
}

impl<E> Default for PrimeHints<E> {
    fn default() -> Self {
        PrimeHints { primes: vec![], delta_factors: vec![], d_factors: vec![] }
    }
}

/// Everything computed at one prime.
#[derive(Clone, Debug)]
pub struct PrimeWork<R: Pid> {
    pub p: R::Elem,
    pub v_delta: i64,
    /// The residual test proved `ind_p(f) = 0` without running Montes.
    pub detected_zero: bool,
    pub om: Option<OmRepresentation<R>>,
    pub index: Option<IndexSummary>,
    pub basis: Option<LocalBasis<R::Elem>>,
}

impl<R: Pid> PrimeWork<R> {
    pub fn ind(&self) -> i64 {
        self.index.as_ref().map_or(0, |i| i.total)
    }
}

#[derive(Clone, Debug)]
pub struct IntegralBasis<R: Pid> {
    pub basis: TriangularBasis<R::Elem>,
    pub discriminant: R::Elem,
    pub index: R::Elem,
    pub field_discriminant: R::Elem,
    pub primes: Vec<PrimeWork<R>>,
}

/// Checks `f` is monic, separable and irreducible; returns `disc f`.
pub fn validate<R: Pid>(r: &R, f: &Poly<R::Elem>) -> Result<R::Elem> {
    if f.len() < 2 {
        return Err(Error::Input("polynomial must have positive degree".into()));
    }
    if !r.is_monic(f) {
        return Err(Error::NotMonic);
    }
    let disc = r.discriminant(f);
    if r.is_zero(&disc) {
        return Err(Error::Inseparable);
    }
    check_irreducible(r, f)?;
    Ok(disc)
}

/// Primes `p` with `p^2 | disc f`, the only ones that can divide the index.
pub fn candidate_primes<R: Pid>(r: &R, disc: &R::Elem, hints: &PrimeHints<R::Elem>) -> Result<Vec<R::Elem>> {
    let mut out: Vec<R::Elem> = vec![];
    let add = |p: R::Elem, out: &mut Vec<R::Elem>| {
        if !out.contains(&p) {
            out.push(p);
        }
    };
    if !hints.primes.is_empty() || !hints.d_factors.is_empty() {
        for p in &hints.primes {
            let p = r.normalize(p);
            if !r.is_prime(&p) {
                return Err(Error::NotPrime(r.fmt_elem(&p)));
            }
            add(p, &mut out);
        }
        for (m, _) in &hints.d_factors {
            for (p, _) in prime_factors(r, m, &[])? {
                add(p, &mut out);
            }
        }
        let p2 = |p: &R::Elem| r.divides(&r.mul(p, p), disc);
        out.retain(p2);
    } else {
        let hs: Vec<_> = hints.delta_factors.iter().map(|(m, e)| FactorHint::Squarefree(m.clone(), *e)).collect();
        for pc in factor_with_hints(r, disc, &hs)? {
            if pc.exp < 2 {
                continue;
            }
            if pc.prime {
                add(pc.base, &mut out);
            } else {
                for (p, _) in prime_factors(r, &pc.base, &[])? {
                    add(p, &mut out);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Runs `work` on every item with up to `jobs` threads, keeping the input order.
pub fn parallel_map<T: Sync, U: Send>(items: &[T], jobs: usize, work: impl Fn(&T) -> U + Sync) -> Vec<U> {
    if jobs <= 1 || items.len() <= 1 {
        return items.iter().map(work).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<U>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..jobs.min(items.len()) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let u = work(&items[i]);
                slots.lock().unwrap()[i] = Some(u);
            });
        }
    });
    slots.into_inner().unwrap().into_iter().map(|u| u.unwrap()).collect()
}

/// Local basis of `B` at `p` (the unit ideal, so the split into `T` and `S`
/// applies when possible).
pub fn local_basis_at<R: Pid>(r: &R, f: &Poly<R::Elem>, p: &R::Elem) -> Result<(LocalBasis<R::Elem>, OmRepresentation<R>, IndexSummary)> {
    let mut om = montes(r, f, p)?;
    let idx = om_index(&mut om)?;
    let star = vec![0; om.reps.len()];
    let b = ideal_p_basis(&mut om, &idx, &star)?;
    Ok((b, om, idx))
}

fn work_at<R: Pid>(r: &R, f: &Poly<R::Elem>, disc: &R::Elem, p: &R::Elem) -> Result<PrimeWork<R>> {
    let v_delta = r.valuation(disc, p).unwrap_or(0) as i64;
    let mut w = PrimeWork { p: p.clone(), v_delta, detected_zero: false, om: None, index: None, basis: None };
    if v_delta >= 2 && !r.residue_in_range(p) {
        return Err(Error::DeskScale(format!("residue field at {} is too large", r.fmt_elem(p))));
    }
    if v_delta < 2 || detect_index_zero(r, f, p) {
        w.detected_zero = v_delta >= 2;
        return Ok(w);
    }
    let (b, om, idx) = local_basis_at(r, f, p)?;
    w.basis = Some(b);
    w.om = Some(om);
    w.index = Some(idx);
    Ok(w)
}

/// A triangular integral basis of `B` over `A`.
pub fn integral_basis<R: Pid>(r: &R, f: &Poly<R::Elem>, hints: &PrimeHints<R::Elem>, jobs: usize) -> Result<IntegralBasis<R>> {
    let disc = validate(r, f)?;
    let primes = candidate_primes(r, &disc, hints)?;
    let primes: Vec<PrimeWork<R>> = parallel_map(&primes, jobs, |p| work_at(r, f, &disc, p)).into_iter().collect::<Result<_>>()?;
    let locals: Vec<_> = primes.iter().filter(|w| w.ind() > 0).filter_map(|w| w.basis.clone()).collect();
    let basis = glue(r, f, &locals);
    let index = index_of(r, &basis);
    let dd = r.mul(&index, &index);
    if !r.divides(&dd, &disc) {
        return Err(Error::Internal("index squared does not divide the discriminant".into()));
    }
    let field_discriminant = r.exact_div(&disc, &dd);
    Ok(IntegralBasis { basis, discriminant: disc, index, field_discriminant, primes })
}

/// Per-prime data of an ideal basis.
#[derive(Clone, Debug)]
pub struct IdealPrimeWork<R: Pid> {
    pub p: R::Elem,
    /// `m_p`; `α = Π p^{m_p}`.
    pub m: i64,
    /// `n*_𝔭` in the canonical order of the primes above `p`.
    pub star: Vec<i64>,
    pub e: Vec<u64>,
    pub f: Vec<u64>,
    pub ind_f: i64,
    pub ind_star: i64,
    pub basis: LocalBasis<R::Elem>,
}

/// `I = α I*` with `α = Π p^{m_p}` kept apart from the basis of `I*`.
#[derive(Clone, Debug)]
pub struct IdealBasis<R: Pid> {
    pub alpha: Vec<(R::Elem, i64)>,
    pub star: FractionalIdeal<R::Elem>,
    pub basis: TriangularBasis<R::Elem>,
    pub primes: Vec<IdealPrimeWork<R>>,
    /// `h(I) = Σ_p ind_p(I*) h(p)` and `h(D)`.
    pub size: i64,
    pub index_size: i64,
}

impl<R: Pid> IdealBasis<R> {
    pub fn is_unit_star(&self) -> bool {
        self.star.factors.iter().all(|(_, n)| *n == 0)
    }
}

fn ideal_work_at<R: Pid>(r: &R, f: &Poly<R::Elem>, p: &R::Elem, ideal: &FractionalIdeal<R::Elem>) -> Result<IdealPrimeWork<R>> {
    let mut om = montes(r, f, p)?;
    if let Some((id, _)) = ideal.factors.iter().find(|(id, _)| id.p == *p && id.ordinal >= om.reps.len()) {
        return Err(Error::Input(format!("no prime ideal with ordinal {} above {}", id.ordinal, r.fmt_elem(p))));
    }
    let idx = om_index(&mut om)?;
    let (m, star) = normalize_at(&om, ideal);
    let ind_star = ideal_index(&om, &idx, &star);
    let basis = ideal_p_basis(&mut om, &idx, &star)?;
    Ok(IdealPrimeWork {
        p: p.clone(),
        m,
        e: om.reps.iter().map(|x| x.e).collect(),
        f: om.reps.iter().map(|x| x.f).collect(),
        star,
        ind_f: idx.total,
        ind_star,
        basis,
    })
}

/// A triangular basis of `I*` and the scalar `α` with `I = α I*`.
pub fn ideal_basis<R: Pid>(
    r: &R,
    f: &Poly<R::Elem>,
    hints: &PrimeHints<R::Elem>,
    ideal: &FractionalIdeal<R::Elem>,
    jobs: usize,
) -> Result<IdealBasis<R>> {
    let disc = validate(r, f)?;
    let mut primes = candidate_primes(r, &disc, hints)?;
    for id in &ideal.factors {
        let p = r.normalize(&id.0.p);
        if !r.is_prime(&p) {
            return Err(Error::NotPrime(r.fmt_elem(&p)));
        }
        if !primes.contains(&p) {
            primes.push(p);
        }
    }
    primes.sort();
    let ideal = FractionalIdeal {
        factors: ideal.factors.iter().map(|(id, n)| (PrimeIdealId { p: r.normalize(&id.p), ordinal: id.ordinal }, *n)).collect(),
    };
    let work: Vec<IdealPrimeWork<R>> = parallel_map(&primes, jobs, |p| ideal_work_at(r, f, p, &ideal)).into_iter().collect::<Result<_>>()?;
    let locals: Vec<_> = work.iter().filter(|w| w.basis.exponents.iter().any(|&e| e != 0)).map(|w| w.basis.clone()).collect();
    let basis = glue(r, f, &locals);
    let mut star = FractionalIdeal { factors: vec![] };
    let mut alpha = vec![];
    let (mut size, mut index_size) = (0, 0);
    for w in &work {
        for (i, &n) in w.star.iter().enumerate() {
            if n != 0 {
                star.factors.push((PrimeIdealId { p: w.p.clone(), ordinal: i }, n));
            }
        }
        if w.m != 0 {
            alpha.push((w.p.clone(), w.m));
        }
        size += w.ind_star * r.size_h(&w.p) as i64;
        index_size += w.ind_f * r.size_h(&w.p) as i64;
    }
    Ok(IdealBasis { alpha, star, basis, primes: work, size, index_size })
}
