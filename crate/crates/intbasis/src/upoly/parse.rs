//! Text form of polynomials in `x` with coefficients in `A`.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := nat | 'x' | 't' | '(' expr ')'
//! ```
//! A bivariate expression in `x` and `t` is only accepted over `F_q[t]`.

use super::{Poly, PolyOps};
use crate::error::{Error, Result};
use crate::ring::Pid;

const MAX_EXPONENT: u64 = 100_000;
const MAX_DEPTH: usize = 200;

struct Parser<'a, R: Pid> {
    r: &'a R,
    s: &'a [u8],
    pos: usize,
    depth: usize,
}

/// An element of `A[t][x]`, kept as polynomials in `x` over `A`; `t` is
/// substituted immediately since it is a ring element.
type P<R> = Poly<<R as Pid>::Elem>;

pub fn parse_poly<R: Pid>(r: &R, s: &str) -> Result<Poly<R::Elem>> {
    let mut p = Parser { r, s: s.as_bytes(), pos: 0, depth: 0 };
    let v = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

impl<R: Pid> Parser<'_, R> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }
    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }
    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }
    fn expr(&mut self) -> Result<P<R>> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err("nesting too deep"));
        }
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if neg {
            acc = self.r.pneg(&acc);
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.r.padd(&acc, &t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.r.psub(&acc, &t);
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }
    fn term(&mut self) -> Result<P<R>> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = self.r.pmul(&acc, &f);
            if acc.len() as u64 > MAX_EXPONENT {
                return Err(self.err("degree too large"));
            }
        }
        Ok(acc)
    }
    fn factor(&mut self) -> Result<P<R>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.ws();
            let start = self.pos;
            let e = self.nat_u64()?;
            let deg = self.r.pdeg(&base).unwrap_or(0) as u64;
            if e > MAX_EXPONENT || deg.saturating_mul(e) > MAX_EXPONENT {
                self.pos = start;
                return Err(self.err("exponent too large"));
            }
            return Ok(self.r.ppow(&base, e as usize));
        }
        Ok(base)
    }
    fn nat_u64(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a natural number"));
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().map_err(|_| {
            self.pos = start;
            self.err("exponent too large")
        })
    }
    fn atom(&mut self) -> Result<P<R>> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(self.r.px())
            }
            Some(b't') => match self.r.var_t() {
                Some(t) => {
                    self.pos += 1;
                    Ok(self.r.pconst(t))
                }
                None => Err(self.err("'t' is only available over F_q[t]")),
            },
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let ten = self.r.from_i64(10);
                let mut n = self.r.zero();
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    let d = self.r.from_i64((self.s[self.pos] - b'0') as i64);
                    n = self.r.add(&self.r.mul(&n, &ten), &d);
                    self.pos += 1;
                }
                Ok(self.r.pconst(n))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Inverse of [`parse_poly`]: `parse_poly(format_poly(f)) == f`.
pub fn format_poly<R: Pid>(r: &R, f: &Poly<R::Elem>) -> String {
    let mut out = String::new();
    for (i, c) in f.iter().enumerate().rev() {
        if r.is_zero(c) {
            continue;
        }
        let mut cs = r.fmt_elem(c);
        let negative = cs.starts_with('-');
        if negative {
            cs.remove(0);
        }
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let compound = cs.contains(['+', '-', '*', '^', 't']);
        let mono = match i {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{i}"),
        };
        if i == 0 {
            if compound && negative {
                out.push_str(&format!("({cs})"));
            } else {
                out.push_str(&cs);
            }
        } else if cs == "1" {
            out.push_str(&mono);
        } else if compound {
            out.push_str(&format!("({cs})*{mono}"));
        } else {
            out.push_str(&format!("{cs}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
