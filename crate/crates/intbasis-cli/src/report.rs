//! JSON and text rendering of results, and decoding of JSON reports.

use intbasis::glue::TriangularBasis;
use intbasis::maxmin::LocalBasis;
use intbasis::ring::Pid;
use intbasis::upoly::{format_poly, Poly};
use intbasis::value::{Q, Val};
use intbasis::{Error, Result};
use serde_json::{json, Map, Value};

pub fn ring_json<R: Pid>(r: &R) -> Value {
    match r.kind() {
        intbasis::ring::RingKind::Z => json!("Z"),
        intbasis::ring::RingKind::FqT(q) => json!({ "Fq[t]": q }),
    }
}

pub fn poly_json<R: Pid>(r: &R, f: &Poly<R::Elem>) -> Value {
    Value::Array(f.iter().map(|c| r.to_json(c)).collect())
}

pub fn q_json(x: &Q) -> Value {
    if x.is_integer() {
        json!(x.to_integer().to_string())
    } else {
        json!(format!("{}/{}", x.numer(), x.denom()))
    }
}

pub fn val_json(v: &Val) -> Value {
    match v {
        Val::Fin(x) => q_json(x),
        Val::Inf => json!("inf"),
    }
}

pub fn factored_json<R: Pid>(r: &R, fs: &[(R::Elem, i64)]) -> Value {
    Value::Array(fs.iter().filter(|(_, e)| *e != 0).map(|(p, e)| json!([r.to_json(p), e])).collect())
}

pub fn basis_fields<R: Pid>(r: &R, b: &TriangularBasis<R::Elem>, out: &mut Map<String, Value>) {
    out.insert(
        "denominators".into(),
        Value::Array(
            b.denominators
                .iter()
                .zip(&b.denominator_factors)
                .map(|(a, fs)| json!({ "factored": factored_json(r, fs), "value": r.to_json(a) }))
                .collect(),
        ),
    );
    out.insert("numerators".into(), Value::Array(b.numerators.iter().map(|h| poly_json(r, h)).collect()));
}

pub fn local_json<R: Pid>(r: &R, b: &LocalBasis<R::Elem>) -> Value {
    json!({
        "numerators": b.numerators.iter().map(|h| poly_json(r, h)).collect::<Vec<_>>(),
        "exponents": b.exponents,
        "alphas": b.alphas.iter().map(q_json).collect::<Vec<_>>(),
        "index": b.index,
    })
}

/// Text block listing a triangular basis.
pub fn basis_text<R: Pid>(r: &R, b: &TriangularBasis<R::Elem>) -> String {
    let mut s = String::new();
    for (i, (h, fs)) in b.numerators.iter().zip(&b.denominator_factors).enumerate() {
        let den: Vec<String> = fs.iter().filter(|(_, e)| *e != 0).map(|(p, e)| if *e == 1 { r.fmt_elem(p) } else { format!("({})^{e}", r.fmt_elem(p)) }).collect();
        let den = if den.is_empty() { "1".to_string() } else { den.join("*") };
        s.push_str(&format!("  b{i} = ({}) / {den}\n", format_poly(r, h)));
    }
    s
}

/// A decoded integral- or ideal-basis report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodedReport<E> {
    pub f: Poly<E>,
    pub numerators: Vec<Poly<E>>,
    pub denominators: Vec<E>,
}

fn decode_poly<R: Pid>(r: &R, v: &Value) -> Option<Poly<R::Elem>> {
    let p: Poly<R::Elem> = v.as_array()?.iter().map(|c| r.from_json(c)).collect::<Option<_>>()?;
    (p.last().is_none_or(|c| !r.is_zero(c))).then_some(p)
}

/// Reads back the basis part of a report, checking shape and consistency.
pub fn decode_report<R: Pid>(r: &R, text: &str) -> Result<DecodedReport<R::Elem>> {
    let bad = |m: &str| Error::Input(format!("report: {m}"));
    let v: Value = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
    if v.get("ring") != Some(&ring_json(r)) {
        return Err(bad("ring mismatch"));
    }
    let f = v.get("f").and_then(|x| decode_poly(r, x)).ok_or_else(|| bad("f"))?;
    if f.len() < 2 {
        return Err(bad("f has no positive degree"));
    }
    let d = f.len() - 1;
    let nums = v.get("numerators").and_then(Value::as_array).ok_or_else(|| bad("numerators"))?;
    let dens = v.get("denominators").and_then(Value::as_array).ok_or_else(|| bad("denominators"))?;
    if nums.len() != d || dens.len() != d {
        return Err(bad("basis size differs from the degree"));
    }
    let mut numerators = vec![];
    for (i, n) in nums.iter().enumerate() {
        let h = decode_poly(r, n).ok_or_else(|| bad("numerator"))?;
        if h.len() != i + 1 || h[i] != r.one() {
            return Err(bad("numerator not monic of the right degree"));
        }
        numerators.push(h);
    }
    let mut denominators = vec![];
    for den in dens {
        let a = den.get("value").and_then(|x| r.from_json(x)).ok_or_else(|| bad("denominator"))?;
        if r.is_zero(&a) {
            return Err(bad("zero denominator"));
        }
        let fs = den.get("factored").and_then(Value::as_array).ok_or_else(|| bad("factored"))?;
        let mut prod = r.one();
        for pe in fs {
            let pair = pe.as_array().filter(|x| x.len() == 2).ok_or_else(|| bad("factor pair"))?;
            let p = r.from_json(&pair[0]).ok_or_else(|| bad("factor"))?;
            let e = pair[1].as_u64().filter(|&e| e <= 1 << 16).ok_or_else(|| bad("factor exponent"))?;
            if r.is_zero(&p) || r.size_h(&p).saturating_mul(e) > 1 << 20 {
                return Err(bad("factor too large"));
            }
            prod = r.mul(&prod, &r.pow(&p, e));
        }
        if prod != a {
            return Err(bad("denominator does not match its factorization"));
        }
        denominators.push(a);
    }
    Ok(DecodedReport { f, numerators, denominators })
}
