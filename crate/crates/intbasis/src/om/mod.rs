//! OM representations: the Montes algorithm over inductive valuations.
//!
//! Each prime ideal `𝔭 | p` is described by a chain `μ_0 < … < μ_r` of
//! inductive valuations with strictly increasing key polynomial degrees
//! (an Okutsu frame) together with an approximant `φ_{r+1}` of degree
//! `d_𝔭 = e_𝔭 f_𝔭` that is a key polynomial for `μ_r`.

pub mod chain;
mod invariants;
mod local;
pub mod polygon;

pub use invariants::{
    approx_cross_values, delta_invariants, detect_index_zero, digits, montes_auto, montes_truncated, okutsu_value,
    om_index, own_basis_values, resultant_valuations, separate, DeltaInvariants, IndexSummary,
};
pub use local::{boost_approximants, refine_once, value_at};

use crate::error::{Error, Result};
use crate::ff::{ff_factorize, FfField, FfPoly};
use crate::ring::Pid;
use crate::upoly::{Poly, PolyOps};
use crate::value::{q, Q, Val};
use chain::Chain;
use polygon::{lower_hull, principal_sides};

/// One prime ideal above `p`.
#[derive(Clone, Debug)]
pub struct OmRep<R: Pid> {
    /// Frame `φ_1, …, φ_r` with the valuations they define; `fields` runs up to `k_{r+1}`.
    pub chain: Chain<R>,
    /// Approximant `φ_{r+1}` to the local factor `F_𝔭`.
    pub approx: Poly<R::Elem>,
    /// `v(φ_{r+1}(θ_𝔭))`; infinite when the approximant is an exact factor.
    pub approx_value: Val,
    pub e: u64,
    pub f: u64,
    pub degree: usize,
    /// Position in the canonical ordering, starting at 1.
    pub ordinal: usize,
}

impl<R: Pid> OmRep<R> {
    pub fn order(&self) -> usize {
        self.chain.depth()
    }
    /// Residue field `k_𝔭 = k_{r+1}`.
    pub fn residue_field(&self) -> &FfField {
        self.chain.fields.last().unwrap()
    }
    /// Frame degrees `m_1 < … < m_r`.
    pub fn frame_degrees(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.m).collect()
    }
    /// Values `v(φ_i(θ_𝔭)) = λ_i` of the frame polynomials.
    pub fn frame_values(&self) -> Vec<Q> {
        self.chain.levels.iter().map(|l| l.lambda).collect()
    }
    /// `φ_1, …, φ_r, φ_{r+1}`.
    pub fn frame_with_approx(&self) -> Vec<Poly<R::Elem>> {
        let mut v: Vec<_> = self.chain.levels.iter().map(|l| l.phi.clone()).collect();
        v.push(self.approx.clone());
        v
    }
}

/// A level of an OM representation in the conventional normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmLevel<E> {
    pub phi: Poly<E>,
    pub m: usize,
    /// `V_i = E_{i-1} μ_{i-1}(φ_i)`.
    pub v: Q,
    /// Slope `-h_i/e_i = -E_{i-1}(λ_i - μ_{i-1}(φ_i))`.
    pub slope: Q,
    pub e: u64,
    pub f: u64,
    pub psi: FfPoly,
}

impl<R: Pid> OmRep<R> {
    pub fn levels(&self) -> Vec<OmLevel<R::Elem>> {
        self.chain
            .levels
            .iter()
            .map(|l| {
                let eprev = q((l.big_e / l.e) as i64);
                let psi = l.psi.clone().unwrap_or_default();
                OmLevel {
                    phi: l.phi.clone(),
                    m: l.m,
                    v: eprev * l.mu_phi,
                    slope: -(eprev * (l.lambda - l.mu_phi)),
                    e: l.e,
                    f: (psi.len().max(2) - 1) as u64,
                    psi,
                }
            })
            .collect()
    }
}

/// All prime ideals above `p` in canonical order.
#[derive(Clone, Debug)]
pub struct OmRepresentation<R: Pid> {
    pub ring: R,
    pub p: R::Elem,
    pub f: Poly<R::Elem>,
    pub k0: FfField,
    pub reps: Vec<OmRep<R>>,
}

impl<R: Pid> OmRepresentation<R> {
    pub fn degrees(&self) -> Vec<usize> {
        self.reps.iter().map(|r| r.degree).collect()
    }
}

struct Branch<R: Pid> {
    chain: Chain<R>,
    phi: Poly<R::Elem>,
    lambda_min: Q,
    nu: usize,
}

/// Runs the Montes algorithm for a monic separable `f` at the prime `p`.
pub fn montes<R: Pid>(r: &R, f: &Poly<R::Elem>, p: &R::Elem) -> Result<OmRepresentation<R>> {
    if !r.is_monic(f) {
        return Err(Error::NotMonic);
    }
    if f.len() < 2 {
        return Err(Error::Input("constant polynomial".into()));
    }
    if !r.is_prime(p) {
        return Err(Error::NotPrime(r.fmt_elem(p)));
    }
    if r.is_zero(&r.discriminant(f)) {
        return Err(Error::Inseparable);
    }
    let p = r.normalize(p);
    if !r.residue_in_range(&p) {
        return Err(Error::DeskScale(format!("residue field at {} is too large", r.fmt_elem(&p))));
    }
    let k0 = r.residue_field(&p);
    let fbar = r.to_residue_poly(&k0, &p, f);
    let mut reps = vec![];
    for (psi0, l) in ff_factorize(&k0, &fbar) {
        let chain = Chain::new(r.clone(), p.clone(), k0.clone(), psi0.clone());
        let phi = r.lift_residue_poly(&k0, &p, &psi0);
        if l == 1 {
            reps.push(complete(f, chain, phi)?);
        } else {
            process(f, Branch { chain, phi, lambda_min: q(0), nu: l }, &mut reps)?;
        }
    }
    for (i, rep) in reps.iter_mut().enumerate() {
        rep.ordinal = i;
    }
    let total: usize = reps.iter().map(|x| x.degree).sum();
    if total != f.len() - 1 {
        return Err(Error::Internal(format!("local degrees sum to {total}")));
    }
    Ok(OmRepresentation { ring: r.clone(), p, f: f.clone(), k0, reps })
}

/// Value of the approximant from the leftmost side of `f`'s expansion.
pub(crate) fn approx_self_value<R: Pid>(f: &Poly<R::Elem>, chain: &Chain<R>, phi: &Poly<R::Elem>) -> Result<Val> {
    let pts = chain.newton_points(chain.depth(), f, phi);
    if pts[0].is_inf() {
        return Ok(Val::Inf);
    }
    let hull = lower_hull(&pts);
    match hull.first() {
        Some(s) if s.s_left == 0 && s.s_right == 1 => Ok(Val::Fin(s.slope)),
        _ => Err(Error::Internal("approximant does not single out one root class".into())),
    }
}

fn complete<R: Pid>(f: &Poly<R::Elem>, chain: Chain<R>, phi: Poly<R::Elem>) -> Result<OmRep<R>> {
    let value = approx_self_value(f, &chain, &phi)?;
    let e = chain.big_e(chain.depth());
    let fdeg = (chain.fields.last().unwrap().dim() / chain.fields[0].dim()) as u64;
    let degree = phi.len() - 1;
    if degree as u64 != e * fdeg {
        return Err(Error::Internal("approximant degree differs from e f".into()));
    }
    Ok(OmRep { chain, approx: phi, approx_value: value, e, f: fdeg, degree, ordinal: 0 })
}

fn process<R: Pid>(f: &Poly<R::Elem>, br: Branch<R>, out: &mut Vec<OmRep<R>>) -> Result<()> {
    let i = br.chain.depth() + 1;
    let pts = br.chain.newton_points(i - 1, f, &br.phi);
    let mut expected = br.nu;
    if pts[0].is_inf() {
        // the candidate divides f exactly
        out.push(complete(f, br.chain.clone(), br.phi.clone())?);
        expected -= 1;
    }
    let sides = principal_sides(&pts, br.lambda_min);
    let len: usize = sides.iter().map(|s| s.length()).sum();
    if len != expected {
        return Err(Error::Internal(format!("principal polygon has length {len}, expected {expected}")));
    }
    for side in sides {
        let mut ch = br.chain.clone();
        ch.push_level(br.phi.clone(), side.slope);
        let e = ch.levels[i - 1].e as usize;
        let gamma = side.line_value();
        let mut res = ch.residual(i, f, gamma);
        let k = ch.fields[i].clone();
        let shift = res.iter().take_while(|c| k.is_zero(c)).count();
        res.drain(..shift);
        if res.len() != side.length() / e + 1 {
            return Err(Error::Internal("residual polynomial has the wrong degree".into()));
        }
        for (psi, nu) in ff_factorize(&k, &res) {
            let fd = psi.len() - 1;
            if e * fd == 1 {
                let phi = ch.key_poly(i, &psi);
                let base = br.chain.clone();
                if nu == 1 {
                    out.push(complete(f, base, phi)?);
                } else {
                    process(f, Branch { chain: base, phi, lambda_min: side.slope, nu }, out)?;
                }
            } else {
                let mut next = ch.clone();
                next.set_psi(psi.clone());
                let phi = next.key_poly(i, &psi);
                if nu == 1 {
                    out.push(complete(f, next, phi)?);
                } else {
                    let lambda_min = side.slope * q((e * fd) as i64);
                    process(f, Branch { chain: next, phi, lambda_min, nu }, out)?;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
