#![no_main]
use intbasis::ring::{FqT, Integers};
use intbasis_cli::{parse_factor_arg, parse_ideal_args, parse_ring};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let items: Vec<String> = s.split('\n').map(str::to_string).collect();
    let _ = parse_factor_arg(&Integers, s);
    let _ = parse_factor_arg(&FqT::new(3), s);
    let _ = parse_ideal_args(&Integers, &items);
    let _ = parse_ideal_args(&FqT::new(2), &items);
    let _ = parse_ring(s, Some(5));
});
