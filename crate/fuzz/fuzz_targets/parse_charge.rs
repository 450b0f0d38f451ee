#![no_main]

use libfuzzer_sys::fuzz_target;
use specht_core::parse::parse_charge;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(kappa) = parse_charge(s) {
        assert!(!kappa.is_empty());
        let text = kappa.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        assert_eq!(parse_charge(&text).expect("round trip"), kappa);
    }
});
