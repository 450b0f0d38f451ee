#![no_main]

use libfuzzer_sys::fuzz_target;
use specht_core::parse::parse_filtration_json;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_filtration_json(s) {
        let json = serde_json::to_string(&f).expect("serializable");
        assert_eq!(parse_filtration_json(&json).expect("round trip"), f);
        let _ = f.is_strictly_decreasing();
        let _ = f.is_strictly_increasing();
    }
});
