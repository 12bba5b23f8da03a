#![no_main]
use libfuzzer_sys::fuzz_target;
use xsquare::{ConstructionData, Skeleton2};
use xsquare_algebra::MonomialOrder;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(d) = ConstructionData::from_json(s) else { return };
    assert_eq!(ConstructionData::from_json(&d.to_json()).unwrap(), d);
    // invalid data must come back as an error, never a panic
    let _ = Skeleton2::build(&d, MonomialOrder::DegRevLex, 2_000);
});
