//! Values `v(g(θ_𝔭))` and approximant improvement.

use super::chain::Chain;
use super::{approx_self_value, OmRep};
use crate::error::{Error, Result};
use crate::ff::FfPoly;
use crate::ring::Pid;
use crate::upoly::{Poly, PolyOps};
use crate::value::{Q, Val};

const MAX_REFINEMENTS: usize = 10_000;

/// Chain extended by the approximant as a valuation of value `λ`, and the
/// linear residual polynomial of `f` there.
fn approx_level<R: Pid>(f: &Poly<R::Elem>, rep: &OmRep<R>, approx: &Poly<R::Elem>, lambda: Q) -> (Chain<R>, FfPoly) {
    let mut ch = rep.chain.clone();
    ch.push_level(approx.clone(), lambda);
    let i = ch.depth();
    let gamma = ch.mu(i, f).expect_fin("value of f");
    let res = ch.residual(i, f, gamma);
    (ch, res)
}

fn improve<R: Pid>(f: &Poly<R::Elem>, rep: &OmRep<R>, approx: &Poly<R::Elem>, lambda: Q) -> Result<(Poly<R::Elem>, Val)> {
    let (ch, res) = approx_level(f, rep, approx, lambda);
    let k = &ch.fields[ch.depth()];
    if res.len() != 2 {
        return Err(Error::Internal("residual of f at the approximant is not linear".into()));
    }
    let psi = k.monic(&res);
    let phi = ch.key_poly(ch.depth(), &psi);
    let v = approx_self_value(f, &rep.chain, &phi)?;
    if v <= Val::Fin(lambda) {
        return Err(Error::Internal("refinement did not increase the approximant value".into()));
    }
    Ok((phi, v))
}

/// One single-factor lifting step of the approximant.
pub fn refine_once<R: Pid>(f: &Poly<R::Elem>, rep: &mut OmRep<R>) -> Result<()> {
    if let Val::Fin(l) = rep.approx_value {
        let (phi, v) = improve(f, rep, &rep.approx, l)?;
        rep.approx = phi;
        rep.approx_value = v;
    }
    Ok(())
}

/// Refines every approximant until `v(φ_𝔭(θ_𝔭)) ≥ target_𝔭`.
pub fn boost_approximants<R: Pid>(f: &Poly<R::Elem>, reps: &mut [OmRep<R>], targets: &[Q]) -> Result<()> {
    for (rep, t) in reps.iter_mut().zip(targets) {
        let mut n = 0;
        while rep.approx_value < Val::Fin(*t) {
            refine_once(f, rep)?;
            n += 1;
            if n > MAX_REFINEMENTS {
                return Err(Error::Precision("approximant refinement did not converge".into()));
            }
        }
    }
    Ok(())
}

/// `v(g(θ_𝔭))` for any polynomial `g`, exact.
pub fn value_at<R: Pid>(f: &Poly<R::Elem>, rep: &OmRep<R>, g: &Poly<R::Elem>) -> Result<Val> {
    let r = &rep.chain.ring;
    if g.is_empty() {
        return Ok(Val::Inf);
    }
    let mut approx = rep.approx.clone();
    let mut value = rep.approx_value;
    for _ in 0..MAX_REFINEMENTS {
        let lambda = match value {
            Val::Inf => {
                let rem = r.prem(g, &approx);
                return Ok(rep.chain.mu(rep.chain.depth(), &rem));
            }
            Val::Fin(l) => l,
        };
        let (ch, resf) = approx_level(f, rep, &approx, lambda);
        let i = ch.depth();
        let k = &ch.fields[i];
        let gamma = ch.mu(i, g);
        let gv = gamma.expect_fin("value of g");
        let rg = ch.residual(i, g, gv);
        // root of the linear residual of f
        let c = k.neg(&k.div(&resf[0], &resf[1]));
        if !k.is_zero(&k.peval(&rg, &c)) {
            return Ok(gamma);
        }
        let (a, v) = improve(f, rep, &approx, lambda)?;
        approx = a;
        value = v;
    }
    Err(Error::Precision("value computation did not stabilize".into()))
}
