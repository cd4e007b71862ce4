#![no_main]
use intbasis::ring::Integers;
use intbasis::upoly::{format_poly, parse_poly};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let r = Integers;
    if let Ok(f) = parse_poly(&r, s) {
        // printing and reparsing is the identity
        let g = parse_poly(&r, &format_poly(&r, &f)).expect("formatted polynomial parses");
        assert_eq!(f, g);
    }
});
