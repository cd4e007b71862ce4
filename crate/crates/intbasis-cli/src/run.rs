//! Job execution for each command.

use crate::args::{load_poly_text, parse_elem, parse_factor_arg, parse_ideal_args, RingSpec};
use crate::report::*;
use intbasis::basis::{ideal_basis, integral_basis, local_basis_at, validate, IdealBasis, IntegralBasis, PrimeHints};
use intbasis::glue::TriangularBasis;
use intbasis::maxmin::LocalBasis;
use intbasis::om::{delta_invariants, montes, value_at};
use intbasis::ring::{FqT, Integers, Pid};
use intbasis::upoly::{format_poly, parse_poly, Poly, PolyOps};
use intbasis::value::{floor, q, Val};
use intbasis::verify::{is_integral, order_closed, prime_values, pz_maximal, transition_index, BasisView};
use intbasis::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    IntegralBasis,
    PBasis,
    IdealBasis,
    OmShow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug)]
pub struct Job {
    pub command: Command,
    pub ring: RingSpec,
    pub poly: String,
    pub primes: Vec<String>,
    pub delta_factors: Vec<String>,
    pub d_factors: Vec<String>,
    pub ideal: Vec<String>,
    pub format: Format,
    pub certify: bool,
    pub seed: u64,
    pub jobs: usize,
}

/// Runs the job and renders its output.
pub fn run(job: &Job) -> Result<String> {
    if !job.ideal.is_empty() && job.command != Command::IdealBasis {
        return Err(Error::Input("--ideal only applies to ideal-basis".into()));
    }
    match job.ring {
        RingSpec::Z => run_in(&Integers, job),
        RingSpec::FqT(q) => run_in(&FqT::new(q), job),
    }
}

fn hints<R: Pid>(r: &R, job: &Job) -> Result<PrimeHints<R::Elem>> {
    Ok(PrimeHints {
        primes: job.primes.iter().map(|s| parse_elem(r, s)).collect::<Result<_>>()?,
        delta_factors: job.delta_factors.iter().map(|s| parse_factor_arg(r, s)).collect::<Result<_>>()?,
        d_factors: job.d_factors.iter().map(|s| parse_factor_arg(r, s)).collect::<Result<_>>()?,
    })
}

fn single_prime<R: Pid>(r: &R, job: &Job) -> Result<R::Elem> {
    let [p] = job.primes.as_slice() else {
        return Err(Error::Input("this command needs exactly one --prime".into()));
    };
    let p = r.normalize(&parse_elem(r, p)?);
    if r.is_zero(&p) || r.is_unit(&p) || !r.is_prime(&p) {
        return Err(Error::NotPrime(r.fmt_elem(&p)));
    }
    Ok(p)
}

fn run_in<R: Pid>(r: &R, job: &Job) -> Result<String> {
    let f = parse_poly(r, &load_poly_text(&job.poly)?)?;
    let out = match job.command {
        Command::IntegralBasis => {
            let ib = integral_basis(r, &f, &hints(r, job)?, job.jobs.max(1))?;
            let checks = if job.certify { Some(certify_integral(r, &ib, job.seed)?) } else { None };
            render_integral(r, &ib, checks, job.format)
        }
        Command::PBasis => {
            let p = single_prime(r, job)?;
            validate(r, &f)?;
            let (b, om, idx) = local_basis_at(r, &f, &p)?;
            let checks = if job.certify { Some(certify_local(r, &f, &b, &p)?) } else { None };
            let degrees: Vec<_> = om.reps.iter().map(|x| json!({ "e": x.e, "f": x.f })).collect();
            match job.format {
                Format::Json => {
                    let mut m = Map::new();
                    m.insert("ring".into(), ring_json(r));
                    m.insert("f".into(), poly_json(r, &f));
                    m.insert("p".into(), r.to_json(&p));
                    m.insert("basis".into(), local_json(r, &b));
                    m.insert("primes".into(), json!(degrees));
                    m.insert("ind".into(), json!(idx.total));
                    m.insert(
                        "trace".into(),
                        Value::Array(b.trace.iter().map(|s| json!({ "index": s.index, "w": q_json(&s.alpha) })).collect()),
                    );
                    if let Some(c) = checks {
                        m.insert("certified".into(), json!(c));
                    }
                    pretty(&Value::Object(m))
                }
                Format::Text => {
                    let mut s = format!("{}-basis of {}\nind = {}\n", r.fmt_elem(&p), format_poly(r, &f), idx.total);
                    for (i, (g, (eta, a))) in b.numerators.iter().zip(b.exponents.iter().zip(&b.alphas)).enumerate() {
                        s.push_str(&format!("  g{i} = {}   eta = {eta}   w = {a}\n", format_poly(r, g)));
                    }
                    if let Some(c) = checks {
                        s.push_str(&format!("certified: {}\n", c.join(", ")));
                    }
                    s
                }
            }
        }
        Command::IdealBasis => {
            let ideal = parse_ideal_args(r, &job.ideal)?;
            let ib = ideal_basis(r, &f, &hints(r, job)?, &ideal, job.jobs.max(1))?;
            let checks = if job.certify { Some(certify_ideal(r, &f, &ib)?) } else { None };
            render_ideal(r, &f, &ib, checks, job.format)
        }
        Command::OmShow => {
            let p = single_prime(r, job)?;
            validate(r, &f)?;
            om_show(r, &f, &p, job.format)?
        }
    };
    Ok(out)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn view<E>(b: &TriangularBasis<E>) -> BasisView<'_, E> {
    BasisView { numerators: &b.numerators, denominators: &b.denominators }
}

fn render_integral<R: Pid>(r: &R, ib: &IntegralBasis<R>, checks: Option<Vec<String>>, format: Format) -> String {
    let index_factors: Vec<(R::Elem, i64)> = ib.primes.iter().filter(|w| w.ind() > 0).map(|w| (w.p.clone(), w.ind())).collect();
    match format {
        Format::Json => {
            let mut m = Map::new();
            m.insert("ring".into(), ring_json(r));
            m.insert("f".into(), poly_json(r, &ib.basis.f));
            basis_fields(r, &ib.basis, &mut m);
            m.insert(
                "index".into(),
                json!({
                    "D": r.to_json(&ib.index),
                    "factored": factored_json(r, &index_factors),
                    "discriminant": r.to_json(&ib.discriminant),
                    "field_discriminant": r.to_json(&ib.field_discriminant),
                }),
            );
            let mut per = Map::new();
            for w in &ib.primes {
                let mut e = Map::new();
                e.insert("v_disc".into(), json!(w.v_delta));
                e.insert("ind".into(), json!(w.ind()));
                e.insert("detected_index_zero".into(), json!(w.detected_zero));
                if let Some(om) = &w.om {
                    e.insert("primes".into(), json!(om.reps.iter().map(|x| json!({ "e": x.e, "f": x.f })).collect::<Vec<_>>()));
                }
                if let Some(b) = &w.basis {
                    e.insert("exponents".into(), json!(b.exponents));
                    e.insert("alphas".into(), json!(b.alphas.iter().map(q_json).collect::<Vec<_>>()));
                }
                per.insert(r.fmt_elem(&w.p), Value::Object(e));
            }
            m.insert("per_prime".into(), Value::Object(per));
            if let Some(c) = checks {
                m.insert("certified".into(), json!(c));
            }
            pretty(&Value::Object(m))
        }
        Format::Text => {
            let mut s = format!("integral basis of {}\n", format_poly(r, &ib.basis.f));
            s.push_str(&basis_text(r, &ib.basis));
            let fs: Vec<String> = index_factors.iter().map(|(p, e)| format!("({})^{e}", r.fmt_elem(p))).collect();
            s.push_str(&format!("D = {}{}\n", r.fmt_elem(&ib.index), if fs.is_empty() { String::new() } else { format!(" = {}", fs.join("*")) }));
            s.push_str(&format!("disc(f) = {}\ndisc(L/K) = {}\n", r.fmt_elem(&ib.discriminant), r.fmt_elem(&ib.field_discriminant)));
            if let Some(c) = checks {
                s.push_str(&format!("certified: {}\n", c.join(", ")));
            }
            s
        }
    }
}

fn render_ideal<R: Pid>(r: &R, f: &Poly<R::Elem>, ib: &IdealBasis<R>, checks: Option<Vec<String>>, format: Format) -> String {
    match format {
        Format::Json => {
            let mut m = Map::new();
            m.insert("ring".into(), ring_json(r));
            m.insert("f".into(), poly_json(r, f));
            basis_fields(r, &ib.basis, &mut m);
            m.insert("alpha".into(), factored_json(r, &ib.alpha));
            m.insert(
                "normalized".into(),
                Value::Array(ib.star.factors.iter().map(|(id, n)| json!([r.to_json(&id.p), id.ordinal, n])).collect()),
            );
            m.insert("size".into(), json!(ib.size));
            m.insert("index_size".into(), json!(ib.index_size));
            let mut per = Map::new();
            for w in &ib.primes {
                per.insert(
                    r.fmt_elem(&w.p),
                    json!({ "m": w.m, "n_star": w.star, "e": w.e, "f": w.f, "ind_f": w.ind_f, "ind_ideal": w.ind_star, "exponents": w.basis.exponents }),
                );
            }
            m.insert("per_prime".into(), Value::Object(per));
            if let Some(c) = checks {
                m.insert("certified".into(), json!(c));
            }
            pretty(&Value::Object(m))
        }
        Format::Text => {
            let alpha: Vec<String> = ib.alpha.iter().map(|(p, e)| format!("({})^{e}", r.fmt_elem(p))).collect();
            let mut s = format!("I = alpha * I*, alpha = {}\nbasis of I*:\n", if alpha.is_empty() { "1".into() } else { alpha.join("*") });
            s.push_str(&basis_text(r, &ib.basis));
            s.push_str(&format!("h(I) = {}   h(D) = {}\n", ib.size, ib.index_size));
            if let Some(c) = checks {
                s.push_str(&format!("certified: {}\n", c.join(", ")));
            }
            s
        }
    }
}

fn om_show<R: Pid>(r: &R, f: &Poly<R::Elem>, p: &R::Elem, format: Format) -> Result<String> {
    let mut om = montes(r, f, p)?;
    let inv = delta_invariants(&mut om)?;
    let mut cross = vec![];
    for rep in &om.reps {
        let mut rows = vec![];
        for phi in rep.frame_with_approx() {
            let vals: Vec<Val> = om.reps.iter().map(|other| value_at(f, other, &phi)).collect::<Result<_>>()?;
            rows.push(vals);
        }
        cross.push(rows);
    }
    Ok(match format {
        Format::Json => {
            let reps: Vec<Value> = om
                .reps
                .iter()
                .enumerate()
                .map(|(i, rep)| {
                    json!({
                        "ordinal": rep.ordinal,
                        "e": rep.e,
                        "f": rep.f,
                        "degree": rep.degree,
                        "approx": poly_json(r, &rep.approx),
                        "levels": rep.levels().iter().map(|l| json!({
                            "phi": poly_json(r, &l.phi),
                            "slope": q_json(&l.slope),
                            "v": q_json(&l.v),
                            "e": l.e,
                            "f": l.f,
                        })).collect::<Vec<_>>(),
                        "ind": inv.index.local[i],
                        "delta0": q_json(&inv.delta0[i]),
                        "cross_values": cross[i].iter().map(|row| row.iter().map(val_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            pretty(&json!({
                "ring": ring_json(r),
                "f": poly_json(r, f),
                "p": r.to_json(p),
                "primes": reps,
                "ind": inv.index.total,
                "resultants": inv.index.res,
                "delta": inv.delta,
                "delta_star": q_json(&inv.delta_star),
                "rho": inv.rho,
            }))
        }
        Format::Text => {
            let mut s = format!("OM representation of {} at {}\n", format_poly(r, f), r.fmt_elem(p));
            for (i, rep) in om.reps.iter().enumerate() {
                s.push_str(&format!("prime {i}: e = {}, f = {}, ind = {}, delta0 = {}\n", rep.e, rep.f, inv.index.local[i], inv.delta0[i]));
                for (k, l) in rep.levels().iter().enumerate() {
                    s.push_str(&format!("  phi{} = {}   slope {}   e {}   f {}\n", k + 1, format_poly(r, &l.phi), l.slope, l.e, l.f));
                }
                s.push_str(&format!("  approximant {}\n", format_poly(r, &rep.approx)));
                for (k, row) in cross[i].iter().enumerate() {
                    let cells: Vec<String> = row.iter().map(|v| match v {
                        Val::Fin(x) => x.to_string(),
                        Val::Inf => "inf".into(),
                    }).collect();
                    s.push_str(&format!("  w(frame {k}) = [{}]\n", cells.join(", ")));
                }
            }
            s.push_str(&format!("ind = {}   delta = {}   delta* = {}   rho = {}\n", inv.index.total, inv.delta, inv.delta_star, inv.rho));
            s
        }
    })
}

fn fail(msg: String) -> Error {
    Error::Certificate(msg)
}

/// Exponent sums, oracle integrality, closure, maximality at desk scale and
/// seeded random combinations.
fn certify_integral<R: Pid>(r: &R, ib: &IntegralBasis<R>, seed: u64) -> Result<Vec<String>> {
    let f = &ib.basis.f;
    let v = view(&ib.basis);
    let mut done = vec![];
    for w in &ib.primes {
        if let Some(b) = &w.basis {
            if b.exponents.iter().sum::<i64>() != w.ind() || b.alphas.iter().zip(&b.exponents).any(|(a, e)| floor(a) != *e) {
                return Err(fail(format!("exponents at {}", r.fmt_elem(&w.p))));
            }
        }
        for (h, a) in ib.basis.numerators.iter().zip(&ib.basis.denominators) {
            if !r.divides(&w.p, a) {
                continue;
            }
            if !is_integral(r, f, h, a, &w.p) {
                return Err(fail(format!("{} / {} is not integral", format_poly(r, h), r.fmt_elem(a))));
            }
        }
        if transition_index(r, &v, &w.p) != w.ind() {
            return Err(fail(format!("determinant at {}", r.fmt_elem(&w.p))));
        }
        match pz_maximal(r, f, &v, &w.p) {
            Ok(true) => done.push(format!("maximal at {}", r.fmt_elem(&w.p))),
            Ok(false) => return Err(fail(format!("not maximal at {}", r.fmt_elem(&w.p)))),
            Err(Error::DeskScale(_)) => {}
            Err(e) => return Err(e),
        }
    }
    done.insert(0, "exponents".into());
    done.insert(1, "integrality".into());
    if !order_closed(r, f, &v, None) {
        return Err(fail("basis is not closed under multiplication".into()));
    }
    done.insert(2, "closure".into());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lcm = ib.index.clone();
    for _ in 0..8 {
        // Σ c_i b_i = (Σ c_i (D/a_i) h_i) / D
        let mut g: Poly<R::Elem> = vec![];
        for (h, a) in ib.basis.numerators.iter().zip(&ib.basis.denominators) {
            let c = r.from_i64(rng.gen_range(-3..=3));
            g = r.padd(&g, &r.pscale(h, &r.mul(&c, &r.exact_div(&lcm, a))));
        }
        for w in ib.primes.iter().filter(|w| w.ind() > 0) {
            if !g.is_empty() && !is_integral(r, f, &g, &lcm, &w.p) {
                return Err(fail("random combination is not integral".into()));
            }
        }
    }
    done.push("random combinations".into());
    Ok(done)
}

fn certify_local<R: Pid>(r: &R, f: &Poly<R::Elem>, b: &LocalBasis<R::Elem>, p: &R::Elem) -> Result<Vec<String>> {
    if b.exponents.iter().sum::<i64>() != b.index || b.alphas.iter().zip(&b.exponents).any(|(a, e)| floor(a) != *e) {
        return Err(fail("exponents".into()));
    }
    let dens: Vec<R::Elem> = b.exponents.iter().map(|&e| r.pow(p, e as u64)).collect();
    for (h, a) in b.numerators.iter().zip(&dens) {
        if !is_integral(r, f, h, a, p) {
            return Err(fail(format!("{} is not integral", format_poly(r, h))));
        }
    }
    let v = BasisView { numerators: &b.numerators, denominators: &dens };
    if !order_closed(r, f, &v, Some(p)) {
        return Err(fail("not closed".into()));
    }
    let mut done = vec!["exponents".to_string(), "integrality".into(), "closure".into()];
    match pz_maximal(r, f, &v, p) {
        Ok(true) => done.push("maximal".into()),
        Ok(false) => return Err(fail("not maximal".into())),
        Err(Error::DeskScale(_)) => {}
        Err(e) => return Err(e),
    }
    Ok(done)
}

fn certify_ideal<R: Pid>(r: &R, f: &Poly<R::Elem>, ib: &IdealBasis<R>) -> Result<Vec<String>> {
    for w in &ib.primes {
        let b = &w.basis;
        if b.exponents.iter().sum::<i64>() != w.ind_star {
            return Err(fail(format!("ideal index at {}", r.fmt_elem(&w.p))));
        }
        let mut om = montes(r, f, &w.p)?;
        for (g, &eta) in b.numerators.iter().zip(&b.exponents) {
            let vals = prime_values(&mut om, g)?;
            for (k, val) in vals.iter().enumerate() {
                let shift = q(w.star[k]) / q(w.e[k] as i64);
                if *val - (q(eta) + shift) < Val::Fin(q(0)) {
                    return Err(fail(format!("element {} outside the ideal", format_poly(r, g))));
                }
            }
        }
    }
    if ib.size < ib.index_size || (ib.size == ib.index_size) != ib.is_unit_star() {
        return Err(fail("normalized size".into()));
    }
    Ok(vec!["ideal index".into(), "membership".into(), "size".into()])
}
