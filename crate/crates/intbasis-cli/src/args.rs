//! Parsing of the small argument languages: ring names, ring elements,
//! `p,e` factor hints and `p:ordinal:exp` prime-ideal exponents.

use intbasis::ideals::{FractionalIdeal, PrimeIdealId};
use intbasis::ring::Pid;
use intbasis::upoly::parse_poly;
use intbasis::{Error, Result};

/// The base ring named on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Z,
    FqT(u64),
}

pub fn parse_ring(name: &str, q: Option<u64>) -> Result<RingSpec> {
    match name.trim().to_ascii_lowercase().as_str() {
        "z" => match q {
            None => Ok(RingSpec::Z),
            Some(_) => Err(Error::Input("--q only applies to fq[t]".into())),
        },
        "fq[t]" | "fqt" => {
            let q = q.ok_or_else(|| Error::Input("fq[t] needs --q".into()))?;
            if q < 2 || !intbasis::ring::is_probable_prime(&q.into()) {
                return Err(Error::Input(format!("q = {q} must be a prime")));
            }
            if q >= 1 << 31 {
                return Err(Error::DeskScale(format!("q = {q} is too large")));
            }
            Ok(RingSpec::FqT(q))
        }
        other => Err(Error::Input(format!("unknown ring {other:?}; use z or fq[t]"))),
    }
}

/// An element of `A`, written as a constant polynomial.
pub fn parse_elem<R: Pid>(r: &R, s: &str) -> Result<R::Elem> {
    let p = parse_poly(r, s)?;
    match p.len() {
        0 => Ok(r.zero()),
        1 => Ok(p[0].clone()),
        _ => Err(Error::Input(format!("{s:?} is not an element of the base ring"))),
    }
}

/// `m,e`: a squarefree factor and its exponent.
pub fn parse_factor_arg<R: Pid>(r: &R, s: &str) -> Result<(R::Elem, u64)> {
    let (m, e) = s.rsplit_once(',').ok_or_else(|| Error::Input(format!("{s:?}: expected <factor>,<exponent>")))?;
    let e: u64 = e.trim().parse().map_err(|_| Error::Input(format!("{s:?}: bad exponent")))?;
    if e == 0 {
        return Err(Error::Input(format!("{s:?}: exponent must be positive")));
    }
    let m = parse_elem(r, m)?;
    if r.is_zero(&m) {
        return Err(Error::Input(format!("{s:?}: zero factor")));
    }
    Ok((m, e))
}

/// `p:ordinal:exp` entries into a fractional ideal; repeated ids add up.
pub fn parse_ideal_args<R: Pid>(r: &R, items: &[String]) -> Result<FractionalIdeal<R::Elem>> {
    let mut factors: Vec<(PrimeIdealId<R::Elem>, i64)> = vec![];
    for s in items {
        let mut parts = s.rsplitn(3, ':');
        let (Some(n), Some(o), Some(p)) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Input(format!("{s:?}: expected <prime>:<ordinal>:<exponent>")));
        };
        let n: i64 = n.trim().parse().map_err(|_| Error::Input(format!("{s:?}: bad exponent")))?;
        let ordinal: usize = o.trim().parse().map_err(|_| Error::Input(format!("{s:?}: bad ordinal")))?;
        let p = r.normalize(&parse_elem(r, p)?);
        if r.is_zero(&p) || r.is_unit(&p) || !r.is_prime(&p) {
            return Err(Error::NotPrime(r.fmt_elem(&p)));
        }
        let id = PrimeIdealId { p, ordinal };
        match factors.iter_mut().find(|(x, _)| *x == id) {
            Some(x) => x.1 = x.1.checked_add(n).ok_or_else(|| Error::Input("exponent overflow".into()))?,
            None => factors.push((id, n)),
        }
    }
    if factors.iter().any(|(_, n)| n.unsigned_abs() > 1 << 20) {
        return Err(Error::DeskScale("ideal exponent too large".into()));
    }
    Ok(FractionalIdeal { factors })
}

/// `-f` accepts an expression or the path of a file holding one.
pub fn load_poly_text(arg: &str) -> Result<String> {
    let path = std::path::Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path).map(|s| s.trim().to_string()).map_err(|e| Error::Input(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}
