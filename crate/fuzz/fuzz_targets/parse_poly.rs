#![no_main]
use libfuzzer_sys::fuzz_target;
use xsquare_algebra::{format_poly, parse_poly, Field, PolyRing};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let ring = PolyRing::new(&["x", "y", "S1", "s0_S2"], Field::Prime(101)).unwrap();
    if let Ok(p) = parse_poly(s, &ring) {
        // printing and parsing again is the identity
        assert_eq!(parse_poly(&format_poly(&p), &ring).unwrap(), p);
    }
});
