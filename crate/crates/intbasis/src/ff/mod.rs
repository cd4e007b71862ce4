//! Finite fields as towers `F_p ⊂ k_1 ⊂ … ⊂ k_L`, each step a monic irreducible
//! polynomial over the previous level. Elements are flat coefficient vectors of
//! length `[k_L : F_p]`; a level-`l` element embeds into level `L` by zero padding.

mod factor;
mod poly;

pub use factor::{ff_factorize, ff_is_irreducible, ff_squarefree};
pub use poly::FfPoly;

use num_bigint::BigUint;

use std::fmt;
use std::sync::Arc;

pub type Fe = Vec<u64>;

#[derive(Debug)]
struct Tower {
    p: u64,
    /// `steps[l]` is the modulus defining level `l + 1`, monic over level `l`.
    steps: Vec<FfPoly>,
    /// `dims[l] = [k_l : F_p]`.
    dims: Vec<usize>,
}

#[derive(Clone)]
pub struct FfField {
    tower: Arc<Tower>,
    level: usize,
}

impl fmt::Debug for FfField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p(), self.dim())
    }
}

impl PartialEq for FfField {
    fn eq(&self, o: &Self) -> bool {
        self.level == o.level
            && self.p() == o.p()
            && (Arc::ptr_eq(&self.tower, &o.tower)
                || self.tower.steps[..self.level] == o.tower.steps[..o.level])
    }
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero mod {p}");
    powmod(a, p - 2, p)
}

impl FfField {
    /// The prime field `F_p`. Primality of `p` is the caller's responsibility.
    pub fn prime(p: u64) -> Self {
        assert!(p >= 2);
        FfField { tower: Arc::new(Tower { p, steps: vec![], dims: vec![1] }), level: 0 }
    }

    /// `self[y]/(modulus)`. The modulus must be monic irreducible of degree ≥ 1.
    pub fn extend(&self, modulus: &FfPoly) -> FfField {
        let m = self.monic(modulus);
        assert!(m.len() >= 2, "extension by a constant");
        let mut steps = self.tower.steps[..self.level].to_vec();
        steps.push(m.clone());
        let mut dims = self.tower.dims[..=self.level].to_vec();
        dims.push(self.dim() * (m.len() - 1));
        FfField { tower: Arc::new(Tower { p: self.p(), steps, dims }), level: self.level + 1 }
    }

    pub fn p(&self) -> u64 {
        self.tower.p
    }
    pub fn level(&self) -> usize {
        self.level
    }
    /// Degree over the prime field.
    pub fn dim(&self) -> usize {
        self.tower.dims[self.level]
    }
    pub fn order(&self) -> BigUint {
        BigUint::from(self.p()).pow(self.dim() as u32)
    }
    /// The field one level down.
    pub fn below(&self) -> FfField {
        assert!(self.level > 0);
        FfField { tower: self.tower.clone(), level: self.level - 1 }
    }
    /// The field at level `l ≤ self.level()` of the same tower.
    pub fn at_level(&self, l: usize) -> FfField {
        assert!(l <= self.level);
        FfField { tower: self.tower.clone(), level: l }
    }
    /// Defining modulus of the top step.
    pub fn modulus(&self) -> &FfPoly {
        &self.tower.steps[self.level - 1]
    }
    /// Degree of the top step.
    pub fn step_degree(&self) -> usize {
        if self.level == 0 {
            1
        } else {
            self.modulus().len() - 1
        }
    }

    pub fn zero(&self) -> Fe {
        vec![0; self.dim()]
    }
    pub fn one(&self) -> Fe {
        let mut v = self.zero();
        v[0] = 1;
        v
    }
    pub fn from_u64(&self, n: u64) -> Fe {
        let mut v = self.zero();
        v[0] = n % self.p();
        v
    }
    pub fn from_i64(&self, n: i64) -> Fe {
        let p = self.p() as i64;
        self.from_u64(n.rem_euclid(p) as u64)
    }
    pub fn is_zero(&self, a: &Fe) -> bool {
        a.iter().all(|&c| c == 0)
    }
    pub fn is_one(&self, a: &Fe) -> bool {
        a[0] == 1 && a[1..].iter().all(|&c| c == 0)
    }
    /// Embeds an element of a lower level of the same tower.
    pub fn embed(&self, a: &Fe) -> Fe {
        assert!(a.len() <= self.dim());
        let mut v = a.clone();
        v.resize(self.dim(), 0);
        v
    }
    /// Class of the top-step variable.
    pub fn gen(&self) -> Fe {
        if self.level == 0 {
            return self.one();
        }
        let below = self.below();
        let y = vec![below.zero(), below.one()];
        self.from_poly(&below.prem(&y, self.modulus()))
    }

    pub fn add(&self, a: &Fe, b: &Fe) -> Fe {
        let p = self.p();
        a.iter().zip(b).map(|(&x, &y)| (x + y) % p).collect()
    }
    pub fn sub(&self, a: &Fe, b: &Fe) -> Fe {
        let p = self.p();
        a.iter().zip(b).map(|(&x, &y)| (x + p - y) % p).collect()
    }
    pub fn neg(&self, a: &Fe) -> Fe {
        let p = self.p();
        a.iter().map(|&x| (p - x) % p).collect()
    }
    pub fn scale(&self, a: &Fe, k: u64) -> Fe {
        let p = self.p();
        a.iter().map(|&x| mulmod(x, k, p)).collect()
    }

    /// Splits a top-level element into its coefficients over the level below.
    pub fn to_poly(&self, a: &Fe) -> FfPoly {
        let below = self.below();
        let b = below.dim();
        let mut v: FfPoly = a.chunks(b).map(|c| c.to_vec()).collect();
        below.trim(&mut v);
        v
    }
    /// Inverse of [`to_poly`](Self::to_poly); the input must already be reduced.
    pub fn from_poly(&self, c: &FfPoly) -> Fe {
        let below = self.below();
        let n = self.step_degree();
        assert!(c.len() <= n);
        let mut v = Vec::with_capacity(self.dim());
        for i in 0..n {
            match c.get(i) {
                Some(x) => v.extend_from_slice(x),
                None => v.extend(std::iter::repeat_n(0, below.dim())),
            }
        }
        v
    }

    pub fn mul(&self, a: &Fe, b: &Fe) -> Fe {
        if self.level == 0 {
            return vec![mulmod(a[0], b[0], self.p())];
        }
        let below = self.below();
        let prod = below.pmul(&self.to_poly(a), &self.to_poly(b));
        self.from_poly(&below.prem(&prod, self.modulus()))
    }

    pub fn inv(&self, a: &Fe) -> Fe {
        assert!(!self.is_zero(a), "inverse of zero");
        if self.level == 0 {
            return vec![invmod(a[0], self.p())];
        }
        let below = self.below();
        let (g, s, _) = below.pxgcd(&self.to_poly(a), self.modulus());
        debug_assert_eq!(g.len(), 1);
        let s = below.pscale(&s, &below.inv(&g[0]));
        self.from_poly(&below.prem(&s, self.modulus()))
    }

    pub fn div(&self, a: &Fe, b: &Fe) -> Fe {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &Fe, e: &BigUint) -> Fe {
        let mut r = self.one();
        for i in (0..e.bits()).rev() {
            r = self.mul(&r, &r);
            if e.bit(i) {
                r = self.mul(&r, a);
            }
        }
        r
    }

    pub fn pow_u64(&self, a: &Fe, e: u64) -> Fe {
        self.pow(a, &BigUint::from(e))
    }

    /// Inverse Frobenius `a ↦ a^{1/p}`.
    pub fn pth_root(&self, a: &Fe) -> Fe {
        let e = BigUint::from(self.p()).pow(self.dim() as u32 - 1);
        self.pow(a, &e)
    }

    /// Uniform element from a seeded source.
    pub fn random<R: rand::Rng>(&self, rng: &mut R) -> Fe {
        (0..self.dim()).map(|_| rng.gen_range(0..self.p())).collect()
    }

    /// Enumerates all elements (only for tiny fields).
    pub fn elements(&self) -> Vec<Fe> {
        let n = self.order();
        assert!(n <= BigUint::from(1u32 << 20), "field too large to enumerate");
        let n: u64 = n.try_into().unwrap();
        (0..n)
            .map(|mut k| {
                let mut v = self.zero();
                for c in v.iter_mut() {
                    *c = k % self.p();
                    k /= self.p();
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_arithmetic() {
        let f2 = FfField::prime(2);
        let k = f2.extend(&vec![vec![1], vec![1], vec![1]]);
        assert_eq!(k.dim(), 2);
        let a = k.gen();
        let a2 = k.mul(&a, &a);
        assert_eq!(a2, k.add(&a, &k.one()));
        assert_eq!(k.mul(&a, &k.inv(&a)), k.one());
        assert_eq!(k.pow_u64(&a, 3), k.one());
    }

    #[test]
    fn two_step_tower() {
        let f3 = FfField::prime(3);
        let k1 = f3.extend(&vec![vec![1], vec![0], vec![1]]);
        // 1 + i generates F_9^*, so it is not a square
        let g = k1.add(&k1.one(), &k1.gen());
        let k2 = k1.extend(&vec![k1.neg(&g), k1.zero(), k1.one()]);
        assert_eq!(k2.dim(), 4);
        let z = k2.gen();
        assert_eq!(k2.mul(&z, &z), k2.embed(&g));
        for e in k2.elements().iter().skip(1) {
            assert_eq!(k2.mul(e, &k2.inv(e)), k2.one());
            assert_eq!(k2.pow_u64(e, 80), k2.one());
            assert_eq!(k2.pow_u64(&k2.pth_root(e), 3), *e);
        }
    }
}
