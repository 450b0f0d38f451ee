#![no_main]

use libfuzzer_sys::fuzz_target;
use specht_core::parse::parse_laurent_json;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_laurent_json(s) {
        let json = serde_json::to_string(&p).expect("serializable");
        assert_eq!(parse_laurent_json(&json).expect("round trip"), p);
        assert_eq!(p.bar().bar(), p);
        assert!(p.terms().windows(2).all(|w| w[0].0 < w[1].0));
    }
});
