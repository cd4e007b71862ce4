//! Gluing local bases into a global triangular basis by the Chinese remainder
//! theorem on coefficients.

use crate::maxmin::LocalBasis;
use crate::ring::{crt_lift, Pid};
use crate::upoly::{Poly, PolyOps};

/// `B = A ⊕ A (h_1/a_1) ⊕ … ⊕ A (h_{d-1}/a_{d-1})` with `h_i` monic of degree `i`
/// and `a_1 | a_2 | …` (for integral bases).
#[derive(Clone, Debug)]
pub struct TriangularBasis<E> {
    pub f: Poly<E>,
    /// Numerators with coefficients reduced modulo `a_i`.
    pub numerators: Vec<Poly<E>>,
    /// Numerators before that reduction, congruent to every local numerator
    /// modulo `p^{η_{p,i} + 1}`.
    pub crt_numerators: Vec<Poly<E>>,
    pub denominators: Vec<E>,
    /// `a_i` as `[(p, η_{p,i})]` over the primes used.
    pub denominator_factors: Vec<Vec<(E, i64)>>,
    /// Primes with a nontrivial local contribution.
    pub primes: Vec<E>,
}

impl<E: Clone> TriangularBasis<E> {
    pub fn degree(&self) -> usize {
        self.f.len() - 1
    }
}

/// Combines local bases; primes absent from `locals` contribute the power basis.
pub fn glue<R: Pid>(r: &R, f: &Poly<R::Elem>, locals: &[LocalBasis<R::Elem>]) -> TriangularBasis<R::Elem> {
    let d = f.len() - 1;
    let mut numerators = vec![];
    let mut crt_numerators = vec![];
    let mut denominators = vec![];
    let mut denominator_factors = vec![];
    for i in 0..d {
        let mut h = r.pmono(i);
        for k in 0..i {
            let pairs: Vec<(R::Elem, R::Elem)> = locals
                .iter()
                .map(|lb| {
                    let c = lb.numerators[i].get(k).cloned().unwrap_or_else(|| r.zero());
                    (c, r.pow(&lb.p, lb.exponents[i] as u64 + 1))
                })
                .collect();
            h[k] = crt_lift(r, &pairs);
        }
        let a = locals.iter().fold(r.one(), |acc, lb| r.mul(&acc, &r.pow(&lb.p, lb.exponents[i] as u64)));
        // Shifting coefficients by multiples of a_i changes g_i(θ)/a_i by an element of A[θ],
        // so the p-valuations stay at η_{p,i}.
        numerators.push(r.preduce_lower(&h, &a));
        crt_numerators.push(h);
        denominator_factors.push(locals.iter().map(|lb| (lb.p.clone(), lb.exponents[i])).collect());
        denominators.push(a);
    }
    TriangularBasis {
        f: f.clone(),
        numerators,
        crt_numerators,
        denominators,
        denominator_factors,
        primes: locals.iter().map(|lb| lb.p.clone()).collect(),
    }
}

/// `D = Π a_i`, the index `[B : A[θ]]`.
pub fn index_of<R: Pid>(r: &R, b: &TriangularBasis<R::Elem>) -> R::Elem {
    b.denominators.iter().fold(r.one(), |acc, a| r.mul(&acc, a))
}

/// `disc(L/K) = disc(f) / D^2`.
pub fn field_discriminant<R: Pid>(r: &R, b: &TriangularBasis<R::Elem>) -> R::Elem {
    let dd = index_of(r, b);
    r.exact_div(&r.discriminant(&b.f), &r.mul(&dd, &dd))
}
