//! Inductive valuations `μ_0 < μ_1 < … < μ_r` built from key polynomials, with
//! their residual polynomials and residue maps.
//!
//! `μ_0` is the Gauss valuation, `μ_i = [μ_{i-1}; φ_i, λ_i]`, where `λ_i` is the
//! value assigned to `φ_i`. The value group of `μ_i` is `(1/E_i) Z`. Residue
//! fields grow as `k_1 = k_0[x]/ψ_0` and `k_{i+1} = k_i[y]/ψ_i`.

use crate::ff::{Fe, FfField, FfPoly};
use crate::ring::Pid;
use crate::upoly::{Poly, PolyOps};
use crate::value::{q, Q, Val};
use num_integer::Integer;

/// Exponents of `p, φ_1, φ_2, …` in a monomial.
pub type Mono = Vec<i64>;

#[derive(Clone, Debug)]
pub struct Level<E> {
    pub phi: Poly<E>,
    pub m: usize,
    /// Value of `φ_i` under `μ_i`, which is `v(φ_i(θ))` for roots in this branch.
    pub lambda: Q,
    /// `μ_{i-1}(φ_i)`.
    pub mu_phi: Q,
    pub e: u64,
    /// `E_i = e_1 ⋯ e_i`.
    pub big_e: u64,
    /// Numerator of `E_{i-1} λ_i` (its denominator is `e_i`).
    h: i64,
    /// Residual polynomial selecting the next step, once chosen.
    pub psi: Option<FfPoly>,
}

#[derive(Clone, Debug)]
pub struct Chain<R: Pid> {
    pub ring: R,
    pub p: R::Elem,
    pub levels: Vec<Level<R::Elem>>,
    /// `fields[i] = k_i`.
    pub fields: Vec<FfField>,
    pub psi0: FfPoly,
}

impl<R: Pid> Chain<R> {
    /// The order-zero chain of the residue class `ψ_0` of `f mod p`.
    pub fn new(ring: R, p: R::Elem, k0: FfField, psi0: FfPoly) -> Self {
        let k1 = k0.extend(&psi0);
        Chain { ring, p, levels: vec![], fields: vec![k0, k1], psi0 }
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn big_e(&self, i: usize) -> u64 {
        if i == 0 {
            1
        } else {
            self.levels[i - 1].big_e
        }
    }

    /// Appends `μ_{i} = [μ_{i-1}; φ, λ]` with `i = depth + 1`.
    pub fn push_level(&mut self, phi: Poly<R::Elem>, lambda: Q) {
        let i = self.depth() + 1;
        let mu_phi = self.mu(i - 1, &phi).expect_fin("key polynomial value");
        let eprev = self.big_e(i - 1);
        let scaled = lambda * q(eprev as i64);
        let e = *scaled.denom() as u64;
        let m = phi.len() - 1;
        self.levels.push(Level { phi, m, lambda, mu_phi, e, big_e: eprev * e, h: *scaled.numer(), psi: None });
    }

    /// Records `ψ_i` for the top level and the field `k_{i+1}`.
    pub fn set_psi(&mut self, psi: FfPoly) {
        let i = self.depth();
        let k = self.fields[i].extend(&psi);
        self.fields.truncate(i + 1);
        self.fields.push(k);
        self.levels[i - 1].psi = Some(psi);
    }

    /// `μ_i(g)`.
    pub fn mu(&self, i: usize, g: &Poly<R::Elem>) -> Val {
        let r = &self.ring;
        if g.is_empty() {
            return Val::Inf;
        }
        if i == 0 {
            return Val::Fin(q(r.pval(g, &self.p).unwrap() as i64));
        }
        let lv = &self.levels[i - 1];
        if g.len() <= lv.m {
            return self.mu(i - 1, g);
        }
        let mut best = Val::Inf;
        for (s, a) in r.phi_expansion(g, &lv.phi).iter().enumerate() {
            best = best.min(self.mu(i - 1, a) + Val::Fin(lv.lambda * q(s as i64)));
        }
        best
    }

    /// Points `(s, μ_{i}(a_s))` of the `φ`-expansion of `g`.
    pub fn newton_points(&self, i: usize, g: &Poly<R::Elem>, phi: &Poly<R::Elem>) -> Vec<Val> {
        self.ring.phi_expansion(g, phi).iter().map(|a| self.mu(i, a)).collect()
    }

    /// `s ∈ [0, e_i)` with `γ - s λ_i ∈ Γ_{i-1}`, for `γ ∈ Γ_i`.
    fn s_of(&self, i: usize, gamma: Q) -> i64 {
        let lv = &self.levels[i - 1];
        let e = lv.e as i64;
        let c = gamma * q(lv.big_e as i64);
        assert!(c.is_integer(), "value outside the value group");
        if e == 1 {
            return 0;
        }
        let (g, inv, _) = ext_gcd(lv.h.rem_euclid(e), e);
        debug_assert_eq!(g, 1);
        (c.to_integer() * inv).rem_euclid(e)
    }

    /// Normal monomial `N_i(γ) = p^{a_0} φ_1^{a_1} ⋯ φ_i^{a_i}` with `0 ≤ a_j < e_j`.
    pub fn normal(&self, i: usize, gamma: Q) -> Mono {
        let mut out = vec![0; i + 1];
        let mut g = gamma;
        for j in (1..=i).rev() {
            let s = self.s_of(j, g);
            out[j] = s;
            g -= self.levels[j - 1].lambda * q(s);
        }
        assert!(g.is_integer(), "value outside the value group");
        out[0] = g.to_integer();
        out
    }

    pub fn mono_value(&self, m: &Mono) -> Q {
        m.iter().enumerate().fold(q(0), |acc, (j, &b)| if j == 0 { acc + q(b) } else { acc + self.levels[j - 1].lambda * q(b) })
    }

    /// Residue in `k_i` of a value-zero monomial over `p, φ_1, …, φ_{i-1}`.
    pub fn unit_red(&self, i: usize, u: &Mono) -> Fe {
        let k = &self.fields[i];
        let mut u = u.clone();
        u.resize(i, 0);
        let mut res = k.one();
        for j in (1..i).rev() {
            let lv = &self.levels[j - 1];
            let b = u[j];
            if b == 0 {
                continue;
            }
            assert!(b % lv.e as i64 == 0, "monomial is not a unit");
            let t = b / lv.e as i64;
            // Y_j = φ_j^{e_j} / N_{j-1}(e_j λ_j)
            let n = self.normal(j - 1, lv.lambda * q(lv.e as i64));
            for (l, c) in n.iter().enumerate() {
                u[l] += t * c;
            }
            u[j] = 0;
            let z = k.embed(&self.fields[j + 1].gen());
            let zt = k.pow_u64(&z, t.unsigned_abs());
            res = k.mul(&res, &if t < 0 { k.inv(&zt) } else { zt });
        }
        assert_eq!(u[0], 0, "monomial is not a unit");
        res
    }

    /// Residue in `k_i` of `a / Q` where `deg a < m_i`, `Q` a monomial over
    /// levels below `i` and `μ_{i-1}(a) ≥ val(Q)`.
    pub fn red(&self, i: usize, a: &Poly<R::Elem>, qm: &Mono) -> Fe {
        let k = &self.fields[i];
        let beta = self.mono_value(qm);
        match self.mu(i - 1, a) {
            Val::Inf => return k.zero(),
            Val::Fin(v) if v > beta => return k.zero(),
            Val::Fin(v) => assert!(v == beta, "coefficient below the residue line"),
        }
        let n = self.normal(i - 1, beta);
        let base = self.red_normal(i, a, beta, &n);
        let u: Mono = qm.iter().zip(n.iter().chain(std::iter::repeat(&0))).map(|(x, y)| x - y).collect();
        if u.iter().all(|&x| x == 0) {
            return base;
        }
        k.div(&base, &self.unit_red(i, &u))
    }

    /// Residue of `a / N_{i-1}(β)`.
    fn red_normal(&self, i: usize, a: &Poly<R::Elem>, beta: Q, n: &Mono) -> Fe {
        let r = &self.ring;
        let k = &self.fields[i];
        if i == 1 {
            let pb = r.pow(&self.p, n[0] as u64);
            let red = r.to_residue_poly(&self.fields[0], &self.p, &r.pdiv_scalar(a, &pb));
            let z0 = self.fields[1].gen();
            return red.iter().rev().fold(k.zero(), |acc, c| k.add(&k.mul(&acc, &z0), &k.embed(c)));
        }
        let rp = self.residual(i - 1, a, beta);
        let z = k.embed(&self.fields[i].gen());
        rp.iter().rev().fold(k.zero(), |acc, c| k.add(&k.mul(&acc, &z), &k.embed(c)))
    }

    /// Residual polynomial `R_i(g; γ) ∈ k_i[y]`; requires `μ_i(g) ≥ γ`.
    pub fn residual(&self, i: usize, g: &Poly<R::Elem>, gamma: Q) -> FfPoly {
        let r = &self.ring;
        let k = &self.fields[i];
        let lv = &self.levels[i - 1];
        let coeffs = r.phi_expansion(g, &lv.phi);
        let s0 = self.s_of(i, gamma);
        let base = self.normal(i - 1, gamma - lv.lambda * q(s0));
        let step = self.normal(i - 1, lv.lambda * q(lv.e as i64));
        let mut out = vec![];
        let mut j = 0i64;
        loop {
            let s = (s0 + j * lv.e as i64) as usize;
            if s >= coeffs.len() {
                break;
            }
            let qm: Mono = base.iter().zip(&step).map(|(b, c)| b - j * c).collect();
            out.push(self.red(i, &coeffs[s], &qm));
            j += 1;
        }
        k.trimmed(out)
    }

    /// A polynomial `a` with `deg a < m_i`, `μ_{i-1}(a) = β` and residue `c` of
    /// `a / N_{i-1}(β)`. Integral whenever `β > μ_{i-1}(φ_i)`.
    pub fn construct(&self, i: usize, beta: Q, c: &Fe) -> Poly<R::Elem> {
        let r = &self.ring;
        let k = &self.fields[i];
        if k.is_zero(c) {
            return vec![];
        }
        if i == 1 {
            assert!(beta.is_integer() && beta >= q(0), "non-integral construction");
            let cp = self.fields[1].to_poly(c);
            let lifted = r.lift_residue_poly(&self.fields[0], &self.p, &cp);
            return r.pscale(&lifted, &r.pow(&self.p, beta.to_integer() as u64));
        }
        let lv = &self.levels[i - 2];
        let s0 = self.s_of(i - 1, beta);
        let base = self.normal(i - 2, beta - lv.lambda * q(s0));
        let step = self.normal(i - 2, lv.lambda * q(lv.e as i64));
        let cp = k.to_poly(c);
        let mut acc = vec![];
        for (j, cj) in cp.iter().enumerate() {
            if self.fields[i - 1].is_zero(cj) {
                continue;
            }
            let ex = s0 + j as i64 * lv.e as i64;
            let bj = beta - lv.lambda * q(ex);
            let qm: Mono = base.iter().zip(&step).map(|(b, s)| b - j as i64 * s).collect();
            let nj = self.normal(i - 2, bj);
            let u: Mono = qm.iter().zip(&nj).map(|(x, y)| x - y).collect();
            let cls = self.fields[i - 1].mul(cj, &self.unit_red(i - 1, &u));
            let b = self.construct(i - 1, bj, &cls);
            acc = r.padd(&acc, &r.pmul(&b, &r.ppow(&lv.phi, ex as usize)));
        }
        acc
    }

    /// Key polynomial for `μ_i` attached to a monic irreducible `ψ ∈ k_i[y]`, `ψ ≠ y`.
    pub fn key_poly(&self, i: usize, psi: &FfPoly) -> Poly<R::Elem> {
        let r = &self.ring;
        let k = &self.fields[i];
        let lv = &self.levels[i - 1];
        let f = psi.len() - 1;
        let e = lv.e as usize;
        let el = lv.lambda * q(lv.e as i64);
        let gamma = el * q(f as i64);
        let top = self.normal(i - 1, gamma);
        let step = self.normal(i - 1, el);
        let q_of = |j: usize| -> Mono { top.iter().zip(&step).map(|(t, s)| t - j as i64 * s).collect() };
        let uf = self.red(i, &r.pone(), &q_of(f));
        let mut phi = r.ppow(&lv.phi, e * f);
        for (j, pj) in psi.iter().enumerate().take(f) {
            if k.is_zero(pj) {
                continue;
            }
            let bj = el * q((f - j) as i64);
            let qj = q_of(j);
            let nj = self.normal(i - 1, bj);
            let u: Mono = qj.iter().zip(&nj).map(|(x, y)| x - y).collect();
            let cls = k.mul(&k.mul(&uf, pj), &self.unit_red(i, &u));
            let a = self.construct(i, bj, &cls);
            phi = r.padd(&phi, &r.pmul(&a, &r.ppow(&lv.phi, j * e)));
        }
        phi
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let g = a.extended_gcd(&b);
    (g.gcd, g.x, g.y)
}
