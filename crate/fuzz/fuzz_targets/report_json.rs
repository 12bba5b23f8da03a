#![no_main]
use libfuzzer_sys::fuzz_target;
use xsquare::report::to_json;
use xsquare::{CompareReport, HomotopyReport, VerifyReport};

fn round_trip<T: serde::de::DeserializeOwned + serde::Serialize + PartialEq + std::fmt::Debug>(s: &str) {
    if let Ok(v) = serde_json::from_str::<T>(s) {
        let again: T = serde_json::from_str(&to_json(&v)).unwrap();
        assert_eq!(again, v);
    }
}

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    round_trip::<VerifyReport>(s);
    round_trip::<HomotopyReport>(s);
    round_trip::<CompareReport>(s);
});
