#![no_main]
use intbasis::ring::FqT;
use intbasis::upoly::{format_poly, parse_poly};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&q, rest)) = data.split_first() else { return };
    let q = [2u64, 3, 5, 7][(q % 4) as usize];
    let Ok(s) = std::str::from_utf8(rest) else { return };
    let r = FqT::new(q);
    if let Ok(f) = parse_poly(&r, s) {
        let g = parse_poly(&r, &format_poly(&r, &f)).expect("formatted polynomial parses");
        assert_eq!(f, g);
    }
});
