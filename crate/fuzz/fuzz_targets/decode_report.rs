#![no_main]
use intbasis::ring::{FqT, Integers};
use intbasis_cli::decode_report;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let _ = decode_report(&Integers, s);
    let _ = decode_report(&FqT::new(3), s);
});
