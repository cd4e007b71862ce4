//! Subresultant pseudo-remainder sequence; every division is exact in `A`.

use super::{Poly, PolyOps};
use crate::ring::Pid;

pub(super) fn resultant<R: Pid>(r: &R, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> R::Elem {
    if a.is_empty() || b.is_empty() {
        return r.zero();
    }
    let (mut a, mut b, mut s) = (a.clone(), b.clone(), false);
    if a.len() < b.len() {
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            s = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let (mut g, mut h) = (r.one(), r.one());
    while b.len() > 1 {
        let (da, db) = (a.len() - 1, b.len() - 1);
        let delta = (da - db) as u64;
        if da % 2 == 1 && db % 2 == 1 {
            s = !s;
        }
        let rem = r.pseudo_rem(&a, &b);
        if rem.is_empty() {
            return r.zero();
        }
        a = b;
        let div = r.mul(&g, &r.pow(&h, delta));
        b = r.pdiv_scalar(&rem, &div);
        g = r.lc(&a);
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => r.exact_div(&r.pow(&g, delta), &r.pow(&h, delta - 1)),
        };
    }
    let da = (a.len() - 1) as u64;
    let lb = r.lc(&b);
    let res = if da == 0 { r.one() } else { r.exact_div(&r.pow(&lb, da), &r.pow(&h, da - 1)) };
    if s {
        r.neg(&res)
    } else {
        res
    }
}
