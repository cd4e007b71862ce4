//! Replays the fuzz seeds through the properties the fuzz targets assert.

use intbasis::ring::{FqT, Integers};
use intbasis::upoly::{format_poly, parse_poly};
use intbasis_cli::{decode_report, parse_factor_arg, parse_ideal_args};
use std::path::PathBuf;

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = std::fs::read_dir(&dir).unwrap().map(|e| std::fs::read(e.unwrap().path()).unwrap()).collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds in {}", dir.display());
    out
}

#[test]
fn poly_seeds_round_trip() {
    let r = Integers;
    for s in seeds("parse_poly_z") {
        let f = parse_poly(&r, std::str::from_utf8(&s).unwrap()).unwrap();
        assert_eq!(parse_poly(&r, &format_poly(&r, &f)).unwrap(), f);
    }
    for s in seeds("parse_poly_fqt") {
        let r = FqT::new([2u64, 3, 5, 7][(s[0] % 4) as usize]);
        let f = parse_poly(&r, std::str::from_utf8(&s[1..]).unwrap()).unwrap();
        assert_eq!(parse_poly(&r, &format_poly(&r, &f)).unwrap(), f);
    }
}

#[test]
fn hint_seeds_parse() {
    let all: Vec<String> = seeds("hint_args").into_iter().map(|s| String::from_utf8(s).unwrap()).collect();
    assert!(all.iter().any(|s| parse_factor_arg(&Integers, s).is_ok()));
    assert!(all.iter().any(|s| parse_factor_arg(&FqT::new(3), s).is_ok()));
    let ideal = all.iter().find(|s| s.contains(':')).unwrap();
    let items: Vec<String> = ideal.split('\n').map(str::to_string).collect();
    let fi = parse_ideal_args(&Integers, &items).unwrap();
    assert_eq!(fi.factors.len(), 2);
}

#[test]
fn report_seeds_decode() {
    let mut decoded = 0;
    for s in seeds("decode_report") {
        let s = String::from_utf8(s).unwrap();
        decoded += decode_report(&Integers, &s).is_ok() as usize + decode_report(&FqT::new(3), &s).is_ok() as usize;
    }
    assert_eq!(decoded, 2);
}
