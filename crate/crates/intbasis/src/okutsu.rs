//! Okutsu frames and the local numerators `g_{𝔭,m}` attached to them.

use crate::error::Result;
use crate::om::{digits, okutsu_value, value_at, OmRep, OmRepresentation};
use crate::ring::Pid;
use crate::upoly::{Poly, PolyOps};
use crate::value::{floor, Val};

/// `g_{𝔭,m} = x^{j_0} φ_1^{j_1} ⋯ φ_r^{j_r}` for `m < d_𝔭`, the approximant for `m = d_𝔭`.
pub fn numerator<R: Pid>(rep: &OmRep<R>, m: usize) -> Poly<R::Elem> {
    let r = &rep.chain.ring;
    if m == rep.degree {
        return rep.approx.clone();
    }
    assert!(m < rep.degree);
    let j = digits(m, &rep.frame_degrees(), rep.degree);
    let mut g = r.ppow(&r.px(), j[0]);
    for (l, &jk) in rep.chain.levels.iter().zip(&j[1..]) {
        g = r.pmul(&g, &r.ppow(&l.phi, jk));
    }
    g
}

/// Symbolic values `w_𝔮(φ_{𝔭,k})` for `φ_{𝔭,0} = x`, the frame, and the approximant
/// (infinite at its own prime).
#[derive(Clone, Debug)]
pub struct SymbolicW {
    pub degrees: Vec<usize>,
    pub frame_degrees: Vec<Vec<usize>>,
    /// `w[𝔮][𝔭][k]`.
    pub w: Vec<Vec<Vec<Val>>>,
    /// `n_𝔮 / e_𝔮` subtracted from every value at `𝔮`.
    pub shifts: Vec<crate::value::Q>,
}

impl SymbolicW {
    pub fn build<R: Pid>(om: &OmRepresentation<R>) -> Result<Self> {
        let r = &om.ring;
        let n = om.reps.len();
        let mut w = vec![vec![vec![]; n]; n];
        for (qi, row) in w.iter_mut().enumerate() {
            let at = &om.reps[qi];
            for (pi, cell) in row.iter_mut().enumerate() {
                let src = &om.reps[pi];
                let mut v = vec![value_at(&om.f, at, &r.px())?];
                for l in &src.chain.levels {
                    v.push(if qi == pi { Val::Fin(l.lambda) } else { value_at(&om.f, at, &l.phi)? });
                }
                v.push(if qi == pi { Val::Inf } else { value_at(&om.f, at, &src.approx)? });
                *cell = v;
            }
        }
        Ok(SymbolicW {
            degrees: om.reps.iter().map(|x| x.degree).collect(),
            frame_degrees: om.reps.iter().map(|x| x.frame_degrees()).collect(),
            w,
            shifts: vec![crate::value::q(0); n],
        })
    }

    /// The table for the primes in `subset` only.
    pub fn restrict(&self, subset: &[usize]) -> Self {
        SymbolicW {
            degrees: subset.iter().map(|&i| self.degrees[i]).collect(),
            frame_degrees: subset.iter().map(|&i| self.frame_degrees[i].clone()).collect(),
            w: subset.iter().map(|&a| subset.iter().map(|&b| self.w[a][b].clone()).collect()).collect(),
            shifts: subset.iter().map(|&i| self.shifts[i]).collect(),
        }
    }

    /// `w_𝔮(g_{𝔭,m})`, unshifted.
    pub fn value(&self, qi: usize, pi: usize, m: usize) -> Val {
        let row = &self.w[qi][pi];
        if m == self.degrees[pi] {
            return *row.last().unwrap();
        }
        okutsu_value(&row[..row.len() - 1], &self.frame_degrees[pi], self.degrees[pi], m)
    }

    /// `w_𝔮(Π_𝔭 g_{𝔭,j_𝔭}) - n_𝔮/e_𝔮`.
    pub fn eval(&self, j: &[usize], qi: usize) -> Val {
        j.iter().enumerate().fold(Val::zero(), |acc, (pi, &m)| acc + self.value(qi, pi, m)) - self.shifts[qi]
    }
}

/// Okutsu basis `g_{𝔭,0..d_𝔭-1}` of the local factor with exponents `⌊v(g_m(θ_𝔭))⌋`.
pub fn local_basis<R: Pid>(om: &OmRepresentation<R>, i: usize) -> Result<Vec<(Poly<R::Elem>, i64)>> {
    let rep = &om.reps[i];
    let mut vals = vec![value_at(&om.f, rep, &rep.chain.ring.px())?];
    vals.extend(rep.frame_values().into_iter().map(Val::Fin));
    let degs = rep.frame_degrees();
    Ok((0..rep.degree)
        .map(|m| (numerator(rep, m), floor(&okutsu_value(&vals, &degs, rep.degree, m).expect_fin("numerator value"))))
        .collect())
}
