#![allow(dead_code)]

pub const DEG13: &str = "x^13 + 3*(5)^8*x^11 + 18753*(5)^12*x^10 + 781253*(5)^16*x^9 + 244178131*(5)^20*x^8 + 783631254*(5)^24*x^7 + 14894940628*(5)^28*x^6 + 763967225003*(5)^32*x^5 + 193053764471876*(5)^36*x^4 + 1562575008*(5)^48*x^3 + 488318756*(5)^52*x^2 + 1527929762506*(5)^56*x + 4579209021877*(5)^60";

use intbasis::ring::{FqPoly, FqT, Integers, Pid};
use intbasis::upoly::Poly;
use num_bigint::BigInt;
use rand::Rng;

/// Random monic integer polynomial whose coefficients carry random powers of `p`.
pub fn rand_z_poly<G: Rng>(rng: &mut G, d: usize, p: i64) -> Poly<BigInt> {
    let r = Integers;
    let mut f: Poly<BigInt> = (0..d)
        .map(|_| {
            let k = rng.gen_range(0..4u32);
            BigInt::from(p).pow(k) * BigInt::from(rng.gen_range(-4i64..=4))
        })
        .collect();
    if r.is_zero(&f[0]) {
        f[0] = BigInt::from(p.pow(rng.gen_range(1..4u32)));
    }
    f.push(r.one());
    f
}

/// Random monic polynomial over `F_q[t]` with `t`-adically small coefficients.
pub fn rand_fq_poly<G: Rng>(r: &FqT, rng: &mut G, d: usize, deg_t: usize) -> Poly<FqPoly> {
    let q = r.q();
    let mut f: Poly<FqPoly> = (0..d)
        .map(|_| {
            let k = rng.gen_range(0..4usize);
            let mut c = vec![0u64; k];
            c.extend((0..=rng.gen_range(0..=deg_t)).map(|_| rng.gen_range(0..q)));
            FqPoly::trimmed(c)
        })
        .collect();
    if r.is_zero(&f[0]) {
        f[0] = FqPoly::trimmed(vec![0, 1]);
    }
    f.push(r.one());
    f
}
